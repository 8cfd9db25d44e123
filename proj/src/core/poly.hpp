#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/counters.hpp"
#include "core/deadline.hpp"
#include "core/errors.hpp"
#include "core/monomial.hpp"
#include "core/names.hpp"
#include "core/scalars.hpp"

namespace monomtest {

inline constexpr int kDegMinusInfinity = std::numeric_limits<int>::min();

// Sparse multivariate polynomial over an exact field. Terms are kept in
// strictly descending lex order (T1 > T2 > ...), zero coefficients never
// stored; the zero polynomial is the empty term list.
template <class Field>
class Poly {
public:
    using K = typename Field::Elem;

    struct Term {
        Monomial mono;
        K coeff;
        bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
    };

    Poly(Field field, VarIndex nvars) : field_(std::move(field)), nvars_(nvars) {}

    static Poly zero(Field f, VarIndex nvars) { return Poly(std::move(f), nvars); }

    static Poly constant(Field f, VarIndex nvars, K c) {
        Poly p(std::move(f), nvars);
        if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, std::move(c)});
        return p;
    }

    static Poly variable(Field f, VarIndex nvars, VarIndex i, std::uint32_t e = 1) {
        if (i < 1 || i > nvars) throw Error(ErrorKind::Contract, "variable index out of range");
        Poly p(std::move(f), nvars);
        p.terms_.push_back(Term{Monomial::var(i, e), p.field_.one()});
        return p;
    }

    static Poly monomial(Field f, VarIndex nvars, Monomial m, K c) {
        Poly p(std::move(f), nvars);
        if (!c.is_zero()) p.terms_.push_back(Term{std::move(m), std::move(c)});
        return p;
    }

    // sorts, merges duplicates, strips zeros
    static Poly from_terms(Field f, VarIndex nvars, std::vector<Term> terms) {
        std::map<Monomial, K, LexGreater> acc;
        Poly p(std::move(f), nvars);
        for (Term& t : terms) {
            if (t.coeff.is_zero()) continue;
            auto it = acc.find(t.mono);
            if (it == acc.end())
                acc.emplace(std::move(t.mono), std::move(t.coeff));
            else
                it->second = it->second + t.coeff;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.push_back(Term{m, c});
        return p;
    }

    const Field& field() const { return field_; }
    VarIndex nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff.is_one();
    }

    const Term& leading_term() const {
        if (terms_.empty())
            throw Error(ErrorKind::DegenerateInput, "leading term of the zero polynomial");
        return terms_.front();
    }

    K constant_coeff() const {
        if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
        return field_.zero();
    }

    // k(f): smallest variable index occurring; 0 for constants
    VarIndex pivot() const {
        VarIndex best = 0;
        for (const Term& t : terms_) {
            VarIndex v = t.mono.min_var();
            if (v != 0 && (best == 0 || v < best)) best = v;
        }
        return best;
    }

    bool depends_on(VarIndex i) const {
        for (const Term& t : terms_)
            if (t.mono.depends_on(i)) return true;
        return false;
    }

    int deg_in(VarIndex i) const {
        if (terms_.empty()) return kDegMinusInfinity;
        std::uint32_t d = 0;
        for (const Term& t : terms_) d = std::max(d, t.mono.exponent(i));
        return static_cast<int>(d);
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    // coefficient of T_i^e, as a polynomial in the remaining variables
    Poly coeff_of(VarIndex i, std::uint32_t e) const {
        Poly r(field_, nvars_);
        for (const Term& t : terms_)
            if (t.mono.exponent(i) == e) r.terms_.push_back(Term{t.mono.without_var(i), t.coeff});
        // dropping one shared variable preserves the relative lex order
        return r;
    }

    // LC_i(f): coefficient of the highest power of T_i
    Poly lc_in(VarIndex i) const {
        if (terms_.empty())
            throw Error(ErrorKind::DegenerateInput, "leading coefficient of the zero polynomial");
        int d = deg_in(i);
        return coeff_of(i, static_cast<std::uint32_t>(d));
    }

    Poly operator+(const Poly& o) const { return merged(o, false); }
    Poly operator-(const Poly& o) const { return merged(o, true); }

    Poly operator-() const {
        Poly r(field_, nvars_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back(Term{t.mono, -t.coeff});
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r(field_, nvars_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) {
            K nc = t.coeff * c;
            if (!nc.is_zero()) r.terms_.push_back(Term{t.mono, std::move(nc)});
        }
        return r;
    }

    // multiply by a monomial (coefficient 1; costs no field operations)
    Poly shifted(const Monomial& m) const {
        if (m.is_one()) return *this;
        Poly r(field_, nvars_);
        r.terms_.reserve(terms_.size());
        for (const Term& t : terms_) r.terms_.push_back(Term{t.mono * m, t.coeff});
        return r;
    }

    Poly mono_mul(const Monomial& m, const K& c) const { return shifted(m).scaled(c); }

    Poly operator*(const Poly& o) const {
        check_context(o);
        std::map<Monomial, K, LexGreater> acc;
        for (const Term& a : terms_) {
            poll_deadline();
            for (const Term& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                K c = a.coeff * b.coeff;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second = it->second + c;
            }
        }
        Poly r(field_, nvars_);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back(Term{m, c});
        return r;
    }

    Poly pow(std::uint32_t e) const {
        Poly r = constant(field_, nvars_, field_.one());
        Poly b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            if ((e >>= 1) != 0) b = b * b;
        }
        return r;
    }

    K eval(std::span<const K> point) const {
        if (point.size() != nvars_)
            throw Error(ErrorKind::Context, "evaluation point has wrong length");
        K acc = field_.zero();
        for (const Term& t : terms_) {
            K v = t.coeff;
            for (const auto& [var, exp] : t.mono.entries())
                for (std::uint32_t e = 0; e < exp; ++e) v = v * point[var - 1];
            acc = acc + v;
        }
        return acc;
    }

    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // same polynomial in a ring with more variables
    Poly extended(VarIndex new_nvars) const {
        if (new_nvars < nvars_) throw Error(ErrorKind::Contract, "cannot shrink ring context");
        Poly r = *this;
        r.nvars_ = new_nvars;
        return r;
    }

    void check_context(const Poly& o) const {
        if (nvars_ != o.nvars_ || !(field_ == o.field_))
            throw Error(ErrorKind::Context, "mismatched ring contexts");
    }

    std::string to_string(const NameTable& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const Term& t : terms_) {
            bool neg = field_.coeff_is_negative(t.coeff);
            K mag = neg ? -t.coeff : t.coeff;
            if (first) {
                if (neg) s += "-";
                first = false;
            } else {
                s += neg ? " - " : " + ";
            }
            std::string cs = field_.coeff_string(mag, names);
            if (t.mono.is_one()) {
                s += cs;
            } else if (mag.is_one()) {
                s += t.mono.to_string(names);
            } else {
                s += cs + "*" + t.mono.to_string(names);
            }
        }
        return s;
    }

private:
    Poly merged(const Poly& o, bool subtract) const {
        check_context(o);
        Poly r(field_, nvars_);
        std::size_t ia = 0, ib = 0;
        while (ia < terms_.size() || ib < o.terms_.size()) {
            int cmp;
            if (ia == terms_.size())
                cmp = -1;
            else if (ib == o.terms_.size())
                cmp = 1;
            else
                cmp = Monomial::lex_compare(terms_[ia].mono, o.terms_[ib].mono);
            if (cmp > 0) {
                r.terms_.push_back(terms_[ia++]);
            } else if (cmp < 0) {
                const Term& t = o.terms_[ib++];
                r.terms_.push_back(Term{t.mono, subtract ? -t.coeff : t.coeff});
            } else {
                K c = subtract ? terms_[ia].coeff - o.terms_[ib].coeff
                               : terms_[ia].coeff + o.terms_[ib].coeff;
                if (!c.is_zero()) r.terms_.push_back(Term{terms_[ia].mono, std::move(c)});
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    Field field_;
    VarIndex nvars_;
    std::vector<Term> terms_;
};

// lex leading term as a (monomial, scalar) pair
template <class Field>
std::pair<Monomial, typename Field::Elem> lex_leading_term(const Poly<Field>& f) {
    const auto& t = f.leading_term();
    return {t.mono, t.coeff};
}

template <class Field>
struct DivRem {
    Poly<Field> quot;
    Poly<Field> rem;
};

// Multivariate division by a single divisor (field coefficients, lex).
template <class Field>
DivRem<Field> poly_divrem(const Poly<Field>& f, const Poly<Field>& g) {
    if (g.is_zero()) throw Error(ErrorKind::DegenerateInput, "division by the zero polynomial");
    f.check_context(g);
    Poly<Field> q(f.field(), f.nvars());
    Poly<Field> r(f.field(), f.nvars());
    Poly<Field> p = f;
    const auto& glt = g.leading_term();
    while (!p.is_zero()) {
        poll_deadline();
        const auto& plt = p.leading_term();
        if (glt.mono.divides(plt.mono)) {
            Monomial m = plt.mono.quotient_by(glt.mono);
            auto c = plt.coeff / glt.coeff;
            Poly<Field> t = Poly<Field>::monomial(f.field(), f.nvars(), m, c);
            q = q + t;
            p = p - g.mono_mul(m, c);
        } else {
            Poly<Field> t = Poly<Field>::monomial(f.field(), f.nvars(), plt.mono, plt.coeff);
            r = r + t;
            p = p - t;
        }
    }
    return {q, r};
}

// true iff b | g exactly (b nonzero)
template <class Field>
bool poly_divides(const Poly<Field>& b, const Poly<Field>& g) {
    if (b.is_zero()) throw Error(ErrorKind::DegenerateInput, "divisibility by zero polynomial");
    if (g.is_zero()) return true;
    return poly_divrem(g, b).rem.is_zero();
}

// exact quotient; contract error when the division is not exact
template <class Field>
Poly<Field> poly_exact_div(const Poly<Field>& f, const Poly<Field>& g) {
    auto dr = poly_divrem(f, g);
    if (!dr.rem.is_zero()) throw Error(ErrorKind::Contract, "division is not exact");
    return dr.quot;
}

// Full multivariate division remainder by an ordered divisor list: no term
// of the result is divisible by any divisor's leading term.
template <class Field>
Poly<Field> poly_reduce_remainder(const Poly<Field>& f, std::span<const Poly<Field>> divisors) {
    Poly<Field> r(f.field(), f.nvars());
    Poly<Field> p = f;
    while (!p.is_zero()) {
        poll_deadline();
        const auto& plt = p.leading_term();
        bool reduced = false;
        for (const Poly<Field>& d : divisors) {
            if (d.is_zero()) continue;
            const auto& dlt = d.leading_term();
            if (dlt.mono.divides(plt.mono)) {
                Monomial m = plt.mono.quotient_by(dlt.mono);
                auto c = plt.coeff / dlt.coeff;
                p = p - d.mono_mul(m, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Poly<Field> t = Poly<Field>::monomial(f.field(), f.nvars(), plt.mono, plt.coeff);
            r = r + t;
            p = p - t;
        }
    }
    return r;
}

template <class Field>
struct PseudoDiv {
    std::uint32_t j = 0;  // lc_in(h,i)^j * f == a*h + u
    Poly<Field> a;
    Poly<Field> u;
};

// Pseudo-division of f by h in the variable T_i. Both inputs must be free
// of variables below T_i and h must genuinely involve T_i. The exponent j
// is the number of elimination steps actually performed, so the identity
// b^j f = a h + u holds exactly and deg_i(u) < deg_i(h).
template <class Field>
PseudoDiv<Field> poly_pseudo_div(const Poly<Field>& f, const Poly<Field>& h, VarIndex i) {
    f.check_context(h);
    if (h.is_zero() || h.deg_in(i) < 1)
        throw Error(ErrorKind::Contract, "pseudo-division needs deg_i(h) >= 1");
    for (VarIndex v = 1; v < i; ++v) {
        if (f.depends_on(v) || h.depends_on(v))
            throw Error(ErrorKind::Contract, "pseudo-division inputs must live in K[T_i,...,T_r]");
    }
    count_pseudo_division();
    const int dh = h.deg_in(i);
    const Poly<Field> b = h.lc_in(i);
    PseudoDiv<Field> res{0, Poly<Field>::zero(f.field(), f.nvars()), f};
    while (!res.u.is_zero() && res.u.deg_in(i) >= dh) {
        poll_deadline();
        int df = res.u.deg_in(i);
        Poly<Field> c = res.u.coeff_of(i, static_cast<std::uint32_t>(df));
        Monomial shift = Monomial::var(i, static_cast<std::uint32_t>(df - dh));
        Poly<Field> cs = c.shifted(shift);
        res.u = b * res.u - cs * h;
        res.a = b * res.a + cs;
        ++res.j;
    }
    return res;
}

namespace detail {

template <class Field>
void collect_content(const Poly<Field>& f, mpz_class& den_lcm, mpz_class& num_gcd) {
    for (const auto& t : f.terms()) {
        mpz_class den = t.coeff.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (const auto& t : f.terms()) {
        mpz_class scaled = t.coeff.numerator() * (den_lcm / t.coeff.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
}

}  // namespace detail

// Divide out the scalar content (a unit, so V(f) and all divisibility
// conditions used here are unchanged). Over Q the result has coprime
// integer coefficients and positive leading coefficient; over F_p it is
// monic in the leading position. Normalization is not counted as field
// arithmetic.
template <class Field>
Poly<Field> strip_scalar_content(const Poly<Field>& f) {
    if (f.is_zero()) return f;
    if constexpr (Field::kind == FieldKind::Rational) {
        mpz_class den_lcm = 1, num_gcd = 0;
        detail::collect_content(f, den_lcm, num_gcd);
        if (num_gcd == 0) return f;
        mpq_class scale(den_lcm, num_gcd);
        scale.canonicalize();
        if (sgn(f.leading_term().coeff.value()) < 0) scale = -scale;
        std::vector<typename Poly<Field>::Term> terms;
        terms.reserve(f.terms().size());
        for (const auto& t : f.terms())
            terms.push_back({t.mono, Rational::from_mpq(mpq_class(t.coeff.value() * scale))});
        return Poly<Field>::from_terms(f.field(), f.nvars(), std::move(terms));
    } else if constexpr (Field::kind == FieldKind::Prime) {
        auto lead = f.leading_term().coeff;
        if (lead.is_one()) return f;
        auto inv = lead.inverse();
        std::vector<typename Poly<Field>::Term> terms;
        terms.reserve(f.terms().size());
        for (const auto& t : f.terms())
            terms.push_back({t.mono, Fp(detail::mulmod_u64(t.coeff.value(), inv.value(),
                                                           lead.modulus()),
                                        lead.modulus())});
        return Poly<Field>::from_terms(f.field(), f.nvars(), std::move(terms));
    } else {
        return f;
    }
}

namespace detail {

template <class Field>
int scalar_rank(const typename Field::Elem& a, const typename Field::Elem& b) {
    if constexpr (Field::kind == FieldKind::Rational) {
        return mpq_cmp(a.value().get_mpq_t(), b.value().get_mpq_t());
    } else if constexpr (Field::kind == FieldKind::Prime) {
        return a.value() < b.value() ? -1 : (a.value() > b.value() ? 1 : 0);
    } else {
        return 0;
    }
}

}  // namespace detail

// Deterministic total order used for storing equation sets: larger leading
// term first, then fewer terms, then the monomial sequence, then the
// coefficients. Total for base fields so container order never depends on
// sort stability.
template <class Field>
bool poly_store_less(const Poly<Field>& a, const Poly<Field>& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero();
    int c = Monomial::lex_compare(a.leading_term().mono, b.leading_term().mono);
    if (c != 0) return c > 0;  // larger leading term first
    if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        c = Monomial::lex_compare(a.terms()[i].mono, b.terms()[i].mono);
        if (c != 0) return c > 0;
    }
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        c = detail::scalar_rank<Field>(a.terms()[i].coeff, b.terms()[i].coeff);
        if (c != 0) return c < 0;
    }
    return false;
}

// red(F): interreduce until leading terms are pairwise non-dividing.
// Replacing an element by its full remainder modulo the others preserves
// the ideal and can only grow the leading-term ideal; dropped zeros and
// scalar contents are units.
template <class Field>
std::vector<Poly<Field>> reduce_set(std::vector<Poly<Field>> input) {
    std::vector<Poly<Field>> work;
    for (Poly<Field>& f : input) {
        if (f.is_zero()) continue;
        Poly<Field> s = strip_scalar_content(f);
        bool dup = false;
        for (const Poly<Field>& g : work) dup = dup || g == s;
        if (!dup) work.push_back(std::move(s));
    }
    std::sort(work.begin(), work.end(), poly_store_less<Field>);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
            poll_deadline();
            std::vector<Poly<Field>> others;
            others.reserve(work.size() - 1);
            for (std::size_t j = 0; j < work.size(); ++j)
                if (j != i) others.push_back(work[j]);
            Poly<Field> r = poly_reduce_remainder(work[i], std::span<const Poly<Field>>(others));
            if (r == work[i]) continue;
            changed = true;
            if (r.is_zero())
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
            else
                work[i] = strip_scalar_content(r);
            std::sort(work.begin(), work.end(), poly_store_less<Field>);
            break;
        }
    }
    return work;
}

using QPoly = Poly<RationalField>;
using FpPoly = Poly<PrimeField>;

}  // namespace monomtest

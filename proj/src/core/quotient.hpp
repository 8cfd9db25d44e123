#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/ratfunc.hpp"
#include "core/systems.hpp"

namespace monomtest {

template <class Field>
using DensePoly = Poly<RatFuncField<Field>>;

// The embedding iota: K[T_1..T_r] -> L[T_{k_1},...,T_{k_s}] where L is the
// rational function field in the remaining variables. Dense variables are
// the pivots of the triangular part.
template <class Field>
struct Embedding {
    RatFuncField<Field> coeff_field;      // L
    std::vector<VarIndex> dense_vars;     // k_1 < ... < k_s

    bool is_dense(VarIndex v) const {
        return std::binary_search(dense_vars.begin(), dense_vars.end(), v);
    }

    DensePoly<Field> embed_poly(const Poly<Field>& f) const {
        using Term = typename DensePoly<Field>::Term;
        // accumulate coefficient polynomials per dense monomial
        std::map<Monomial, Poly<Field>, LexGreater> acc;
        for (const auto& t : f.terms()) {
            Monomial dense = t.mono.filtered([&](VarIndex v) { return is_dense(v); });
            Monomial rest = t.mono.filtered([&](VarIndex v) { return !is_dense(v); });
            Poly<Field> piece =
                Poly<Field>::monomial(coeff_field.base, coeff_field.nvars, rest, t.coeff);
            auto it = acc.find(dense);
            if (it == acc.end())
                acc.emplace(std::move(dense), std::move(piece));
            else
                it->second = it->second + piece;
        }
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (c.is_zero()) continue;
            terms.push_back(Term{m, RatFunc<Field>::from_poly(std::move(c))});
        }
        return DensePoly<Field>::from_terms(coeff_field, coeff_field.nvars, std::move(terms));
    }
};

// A triangular system pushed over the function field: dense generators (one
// per pivot, leading-coefficient-normalized so units are stripped) plus the
// verbatim images of the inequation factors.
template <class Field>
struct EmbeddedSystem {
    Embedding<Field> emb;
    std::vector<DensePoly<Field>> gens;       // sorted by pivot, ascending
    std::vector<DensePoly<Field>> g_factors;  // verbatim iota images
};

// Swap the field: V(S) is nonempty iff the dense image is solvable.
template <class Field>
EmbeddedSystem<Field> embed(const SemiTriSystem<Field>& s) {
    if (!s.is_triangular())
        throw Error(ErrorKind::Contract, "embedding requires a triangular system");
    EmbeddedSystem<Field> out;
    out.emb.coeff_field = RatFuncField<Field>(s.field, s.nvars);
    for (const auto& f : s.tri) out.emb.dense_vars.push_back(f.pivot());
    for (const auto& f : s.tri) {
        DensePoly<Field> img = out.emb.embed_poly(f);
        // dividing by the leading L-coefficient is a unit scaling in L[..]
        img = img.scaled(img.leading_term().coeff.inverse());
        out.gens.push_back(std::move(img));
    }
    for (const auto& f : s.ineq.factors()) out.g_factors.push_back(out.emb.embed_poly(f));
    return out;
}

template <class Field>
struct QElem {
    std::vector<RatFunc<Field>> coords;  // length dim, fixed basis order

    bool is_zero() const {
        for (const auto& c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const QElem& o) const { return coords == o.coords; }
};

// Finite-dimensional L-algebra L[T_{k_1},...,T_{k_s}] / <F> for monic dense
// triangular F. The monomial basis has exponent < d_i in T_{k_i}; basis
// index is mixed-radix with the first dense variable least significant.
// The generators' lex leading terms are the pairwise-coprime T_{k_i}^{d_i},
// so division remainders are canonical.
template <class Field>
class QuotientRing {
public:
    QuotientRing(RatFuncField<Field> coeff_field,
                 std::vector<DensePoly<Field>> monic_gens,
                 std::uint64_t dim_bound = 1u << 20)
        : field_(std::move(coeff_field)), gens_(std::move(monic_gens)) {
        dim_ = 1;
        for (const auto& g : gens_) {
            VarIndex piv = g.pivot();
            int d = g.deg_in(piv);
            if (d < 1) throw Error(ErrorKind::Contract, "quotient generator without pivot degree");
            if (!g.lc_in(piv).is_one())
                throw Error(ErrorKind::Contract, "quotient generator is not monic at its pivot");
            pivots_.push_back(piv);
            degs_.push_back(static_cast<std::uint32_t>(d));
            dim_ *= static_cast<std::uint64_t>(d);
            if (dim_ > dim_bound) throw ResourceError("oom", "quotient dimension bound exceeded");
        }
        for (std::size_t i = 1; i < pivots_.size(); ++i)
            if (pivots_[i - 1] >= pivots_[i])
                throw Error(ErrorKind::Contract, "quotient generators must have increasing pivots");
    }

    const RatFuncField<Field>& field() const { return field_; }
    std::uint64_t dim() const { return dim_; }
    const std::vector<DensePoly<Field>>& gens() const { return gens_; }
    const std::vector<VarIndex>& pivots() const { return pivots_; }

    Monomial basis_monomial(std::uint64_t idx) const {
        Monomial m;
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            std::uint32_t e = static_cast<std::uint32_t>(idx % degs_[i]);
            idx /= degs_[i];
            m = m * Monomial::var(pivots_[i], e);
        }
        return m;
    }

    std::uint64_t basis_index(const Monomial& m) const {
        std::uint64_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            std::uint32_t e = m.exponent(pivots_[i]);
            if (e >= degs_[i])
                throw Error(ErrorKind::Internal, "monomial outside the quotient basis");
            idx += stride * e;
            stride *= degs_[i];
        }
        return idx;
    }

    QElem<Field> zero() const {
        return QElem<Field>{std::vector<RatFunc<Field>>(dim_, field_.zero())};
    }
    QElem<Field> one() const {
        auto e = zero();
        e.coords[0] = field_.one();
        return e;
    }

    // residue-class coordinates via division by the monic generators
    QElem<Field> normal_form(const DensePoly<Field>& f) const {
        DensePoly<Field> r =
            poly_reduce_remainder(f, std::span<const DensePoly<Field>>(gens_));
        QElem<Field> out = zero();
        for (const auto& t : r.terms()) out.coords[basis_index(t.mono)] = t.coeff;
        return out;
    }

    DensePoly<Field> lift(const QElem<Field>& e) const {
        using Term = typename DensePoly<Field>::Term;
        std::vector<Term> terms;
        for (std::uint64_t i = 0; i < dim_; ++i)
            if (!e.coords[i].is_zero()) terms.push_back(Term{basis_monomial(i), e.coords[i]});
        return DensePoly<Field>::from_terms(field_, field_.nvars, std::move(terms));
    }

    QElem<Field> add(const QElem<Field>& a, const QElem<Field>& b) const {
        QElem<Field> r = a;
        for (std::uint64_t i = 0; i < dim_; ++i) r.coords[i] = r.coords[i] + b.coords[i];
        return r;
    }

    QElem<Field> scale(const QElem<Field>& a, const RatFunc<Field>& c) const {
        QElem<Field> r = a;
        for (std::uint64_t i = 0; i < dim_; ++i) r.coords[i] = r.coords[i] * c;
        return r;
    }

    QElem<Field> mul(const QElem<Field>& a, const QElem<Field>& b) const {
        return normal_form(lift(a) * lift(b));
    }

private:
    RatFuncField<Field> field_;
    std::vector<DensePoly<Field>> gens_;
    std::vector<VarIndex> pivots_;
    std::vector<std::uint32_t> degs_;
    std::uint64_t dim_ = 1;
};

// Monic univariate polynomial over L, coefficients ascending by degree.
template <class Field>
struct MinPoly {
    std::vector<RatFunc<Field>> coeffs;  // coeffs.back() == 1

    std::size_t degree() const { return coeffs.size() - 1; }

    bool is_monomial() const {
        std::size_t nonzero = 0;
        for (const auto& c : coeffs) nonzero += c.is_zero() ? 0 : 1;
        return nonzero == 1;
    }

    QElem<Field> evaluate(const QElem<Field>& g, const QuotientRing<Field>& ring) const {
        QElem<Field> acc = ring.zero();
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            acc = ring.mul(acc, g);
            if (!coeffs[i].is_zero())
                acc = ring.add(acc, ring.scale(ring.one(), coeffs[i]));
        }
        return acc;
    }

    std::string to_string(const NameTable& names = {}) const {
        std::string s;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            std::string xpart =
                i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
            if (i == 0) {
                s += coeffs[i].to_string(names);
            } else if (coeffs[i].is_one()) {
                s += xpart;
            } else {
                s += coeffs[i].to_string(names) + "*" + xpart;
            }
        }
        return s.empty() ? "0" : s;
    }
};

namespace detail {

// strip the common scalar content of a whole row of base-field polynomials
template <class Field>
void strip_row_content(std::vector<Poly<Field>>& row) {
    if constexpr (Field::kind == FieldKind::Rational) {
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& p : row) collect_content(p, den_lcm, num_gcd);
        if (num_gcd == 0) return;
        mpq_class scale(den_lcm, num_gcd);
        scale.canonicalize();
        for (auto& p : row) {
            std::vector<typename Poly<Field>::Term> terms;
            terms.reserve(p.terms().size());
            for (const auto& t : p.terms())
                terms.push_back({t.mono, Rational::from_mpq(mpq_class(t.coeff.value() * scale))});
            p = Poly<Field>::from_terms(p.field(), p.nvars(), std::move(terms));
        }
    } else if constexpr (Field::kind == FieldKind::Prime) {
        for (const auto& p : row) {
            if (p.is_zero()) continue;
            auto inv = p.leading_term().coeff.inverse();
            for (auto& q : row) q = q.scaled(inv);
            return;
        }
    }
}

}  // namespace detail

// Minimal polynomial of g in R, computed incrementally: append cleared
// coordinate rows of g^0, g^1, ... to an echelon and stop at the first
// linear dependence. History columns carry the combination, so the
// dependence directly yields the (monic, minimal-degree) annihilator.
// Rows are cleared to base-field polynomials; elimination is fraction-free
// cross-multiplication with scalar-content stripping.
template <class Field>
MinPoly<Field> minimal_polynomial(const QElem<Field>& g, const QuotientRing<Field>& ring) {
    count_minpoly_call();
    using P = Poly<Field>;
    const Field& base = ring.field().base;
    const VarIndex nv = ring.field().nvars;
    const std::uint64_t dim = ring.dim();
    const P pone = P::constant(base, nv, base.one());
    const P pzero = P::zero(base, nv);

    struct Row {
        std::size_t pivot;
        std::vector<P> ent;  // dim coordinate columns, then history columns
    };
    std::vector<Row> rows;

    QElem<Field> power = ring.one();
    for (std::uint64_t t = 0;; ++t) {
        check_deadline();
        if (t > dim)
            throw Error(ErrorKind::Internal, "no linear dependence among quotient-ring powers");
        // clear denominators: multiply the row through by the product of
        // the non-unit denominators
        std::vector<P> ent;
        ent.reserve(dim + t + 1);
        P common = pone;
        for (std::uint64_t i = 0; i < dim; ++i)
            if (!power.coords[i].den().is_one()) common = common * power.coords[i].den();
        for (std::uint64_t i = 0; i < dim; ++i) {
            P scaled = power.coords[i].num();
            for (std::uint64_t jj = 0; jj < dim; ++jj) {
                if (jj == i || power.coords[jj].den().is_one()) continue;
                scaled = scaled * power.coords[jj].den();
            }
            ent.push_back(std::move(scaled));
        }
        for (std::uint64_t i = 0; i < t; ++i) ent.push_back(pzero);
        ent.push_back(common);  // history: this row is 1 * g^t (times common)

        // eliminate against the echelon
        for (const Row& r : rows) {
            if (r.pivot >= ent.size()) continue;
            const P& cur = ent[r.pivot];
            if (cur.is_zero()) continue;
            const P piv = r.ent[r.pivot];
            const P cur_copy = cur;
            std::size_t width = std::max(ent.size(), r.ent.size());
            std::vector<P> next;
            next.reserve(width);
            for (std::size_t c = 0; c < width; ++c) {
                const P& a = c < ent.size() ? ent[c] : pzero;
                const P& b = c < r.ent.size() ? r.ent[c] : pzero;
                next.push_back(piv * a - cur_copy * b);
            }
            ent = std::move(next);
            detail::strip_row_content(ent);
        }

        std::size_t pivot = dim;
        for (std::size_t c = 0; c < dim; ++c) {
            if (!ent[c].is_zero()) {
                pivot = c;
                break;
            }
        }
        if (pivot == dim) {
            // dependence: coefficients live in the history columns
            const P& top = ent[dim + t];
            if (top.is_zero())
                throw Error(ErrorKind::Internal, "degenerate dependence in minimal polynomial");
            MinPoly<Field> p;
            p.coeffs.reserve(t + 1);
            for (std::uint64_t i = 0; i <= t; ++i)
                p.coeffs.push_back(RatFunc<Field>(ent[dim + i], top));
            return p;
        }
        rows.push_back(Row{pivot, std::move(ent)});
        power = ring.mul(power, g);
    }
}

template <class Field>
struct SplitMinPoly {
    std::uint32_t j = 0;                  // maximal with X^j | p
    RatFunc<Field> a;                     // nonzero
    std::vector<RatFunc<Field>> bpoly;    // ascending; p = bpoly(X)*X^{j+1} + a*X^j
};

template <class Field>
SplitMinPoly<Field> split_min_poly(const MinPoly<Field>& p) {
    if (p.coeffs.empty()) throw Error(ErrorKind::Contract, "cannot split the zero polynomial");
    std::size_t j = 0;
    while (j < p.coeffs.size() && p.coeffs[j].is_zero()) ++j;
    if (j == p.coeffs.size())
        throw Error(ErrorKind::Contract, "cannot split the zero polynomial");
    SplitMinPoly<Field> out{static_cast<std::uint32_t>(j), p.coeffs[j], {}};
    for (std::size_t i = j + 1; i < p.coeffs.size(); ++i) out.bpoly.push_back(p.coeffs[i]);
    return out;
}

// Make monic: process pivots innermost-first; for each generator
// f = h*T_n^d + c, invert the class of h modulo the already-monic tail via
// its minimal polynomial (h' = -bpoly(h)/a) and replace f by T_n^d + h'*c
// with all non-pivot coefficients reduced to tail normal form. A nilpotent
// h is legal: h' = 0 and f becomes T_n^d.
template <class Field>
EmbeddedSystem<Field> make_monic(EmbeddedSystem<Field> sys) {
    using DP = DensePoly<Field>;
    const auto& field = sys.emb.coeff_field;
    for (std::size_t i = sys.gens.size(); i-- > 0;) {
        check_deadline();
        std::vector<DP> tail(sys.gens.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                             sys.gens.end());
        QuotientRing<Field> ring(field, tail);
        DP& f = sys.gens[static_cast<std::size_t>(i)];
        VarIndex piv = f.pivot();
        int d = f.deg_in(piv);
        DP h = f.lc_in(piv);
        if (h.is_constant() && !h.is_zero() && h.leading_term().coeff.is_one()) {
            continue;  // already monic
        }
        auto hbar = ring.normal_form(h);
        MinPoly<Field> ph = minimal_polynomial(hbar, ring);
        auto parts = split_min_poly(ph);
        // h' = -bpoly(hbar)/a, evaluated by Horner in the tail ring
        QElem<Field> hprime = ring.zero();
        for (std::size_t c = parts.bpoly.size(); c-- > 0;) {
            hprime = ring.mul(hprime, hbar);
            if (!parts.bpoly[c].is_zero())
                hprime = ring.add(hprime, ring.scale(ring.one(), parts.bpoly[c]));
        }
        hprime = ring.scale(hprime, -field.one() / parts.a);
        DP hprime_poly = ring.lift(hprime);

        DP next = DP::monomial(field, field.nvars, Monomial::var(piv, static_cast<std::uint32_t>(d)),
                               field.one());
        for (int e = 0; e < d; ++e) {
            DP ce = f.coeff_of(piv, static_cast<std::uint32_t>(e));
            if (ce.is_zero()) continue;
            QElem<Field> reduced = ring.normal_form(hprime_poly * ce);
            next = next + ring.lift(reduced).shifted(Monomial::var(piv, static_cast<std::uint32_t>(e)));
        }
        f = std::move(next);
    }
    return sys;
}

}  // namespace monomtest

#pragma once

// Shared helpers for the test suites: expression parsing shortcuts,
// reproducible random polynomial/system generators, and small independent
// oracles (kept free of the implementation paths they check).

#include <map>
#include <string>
#include <vector>

#include "core/factor_list.hpp"
#include "core/parse.hpp"
#include "core/poly.hpp"
#include "core/quotient.hpp"
#include "core/random.hpp"
#include "core/systems.hpp"

namespace testutil {

using namespace monomtest;

inline std::vector<std::string> default_vars(VarIndex n) {
    std::vector<std::string> v;
    for (VarIndex i = 1; i <= n; ++i) v.push_back("T" + std::to_string(i));
    return v;
}

template <class Field>
Poly<Field> P(const std::string& text, const Field& field, VarIndex nvars) {
    auto expr = parse_poly_expr(text, default_vars(nvars));
    return build_poly(*expr, field, nvars);
}

inline QPoly Q(const std::string& text, VarIndex nvars) {
    return P(text, RationalField{}, nvars);
}

// Independent product oracle: schoolbook accumulation into an ordered map,
// no reuse of Poly::operator*.
template <class Field>
Poly<Field> naive_mul(const Poly<Field>& a, const Poly<Field>& b) {
    std::map<Monomial, typename Field::Elem, LexGreater> acc;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            Monomial m = ta.mono * tb.mono;
            auto c = ta.coeff * tb.coeff;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else
                it->second = it->second + c;
        }
    }
    std::vector<typename Poly<Field>::Term> terms;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, c});
    return Poly<Field>::from_terms(a.field(), a.nvars(), std::move(terms));
}

template <class Field>
Monomial random_monomial(SplitMix64& rng, VarIndex nvars, int max_total_deg) {
    Monomial m;
    int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_total_deg + 1)));
    for (int i = 0; i < deg; ++i)
        m = m * Monomial::var(static_cast<VarIndex>(1 + rng.below(nvars)));
    return m;
}

// random polynomial; may be zero when allow_zero
template <class Field>
Poly<Field> random_poly(SplitMix64& rng, const Field& field, VarIndex nvars, int max_total_deg,
                        int max_terms, long coeff_bound, bool allow_zero = false) {
    std::vector<typename Poly<Field>::Term> terms;
    int nterms = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
    for (int t = 0; t < nterms; ++t) {
        long c = rng.int_in(-coeff_bound, coeff_bound);
        if (c == 0 && !allow_zero) c = 1;
        terms.push_back({random_monomial<Field>(rng, nvars, max_total_deg), field.from_long(c)});
    }
    auto p = Poly<Field>::from_terms(field, nvars, std::move(terms));
    if (p.is_zero() && !allow_zero)
        return Poly<Field>::constant(field, nvars, field.one());
    return p;
}

// random nonzero polynomial supported on variables >= lo
template <class Field>
Poly<Field> random_poly_from(SplitMix64& rng, const Field& field, VarIndex nvars, VarIndex lo,
                             int max_total_deg, int max_terms, long coeff_bound) {
    if (lo > nvars) {
        long c = rng.int_in(-coeff_bound, coeff_bound);
        return Poly<Field>::constant(field, nvars, field.from_long(c == 0 ? 1 : c));
    }
    std::vector<typename Poly<Field>::Term> terms;
    int nterms = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms))) + 1;
    for (int t = 0; t < nterms; ++t) {
        long c = rng.int_in(-coeff_bound, coeff_bound);
        if (c == 0) c = 1;
        Monomial m;
        int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_total_deg + 1)));
        for (int i = 0; i < deg; ++i)
            m = m * Monomial::var(static_cast<VarIndex>(lo + rng.below(nvars - lo + 1)));
        terms.push_back({m, field.from_long(c)});
    }
    auto p = Poly<Field>::from_terms(field, nvars, std::move(terms));
    if (p.is_zero()) return Poly<Field>::constant(field, nvars, field.one());
    return p;
}

// A random valid semi-triangular system over F_p. Construction: pick k,
// seed g with a few factors, then build the triangular part with pivots
// <= k whose leading coefficients are sub-products of g (possibly empty,
// i.e. monic), and unsorted equations free of T_1..T_k.
inline SemiTriSystem<PrimeField> random_system(SplitMix64& rng, const PrimeField& field,
                                               VarIndex nvars, VarIndex progress,
                                               int max_total_deg = 3) {
    SemiTriSystem<PrimeField> s(field, nvars);
    s.progress = progress;
    // inequation: variables plus occasionally a random polynomial
    for (VarIndex v = 1; v <= nvars; ++v)
        if (rng.chance(2, 3)) s.ineq.push(FpPoly::variable(field, nvars, v));
    if (rng.chance(1, 2))
        s.ineq.push(random_poly(rng, field, nvars, 2, 2, static_cast<long>(field.p - 1)));

    // triangular part
    VarIndex pivot = 1;
    while (pivot <= progress) {
        if (rng.chance(1, 2)) {
            // leading coefficient: a sub-product of g restricted to higher vars
            FpPoly lc = FpPoly::constant(field, nvars, field.one());
            for (const auto& fac : s.ineq.factors()) {
                if (fac.pivot() > pivot && rng.chance(1, 3)) lc = lc * fac;
            }
            std::uint32_t d = static_cast<std::uint32_t>(1 + rng.below(2));
            FpPoly f = lc.shifted(Monomial::var(pivot, d));
            // tail with lower pivot-degree, variables >= pivot
            if (rng.chance(2, 3)) {
                FpPoly tail =
                    random_poly_from(rng, field, nvars, pivot, max_total_deg, 2,
                                     static_cast<long>(field.p - 1));
                // cap the pivot degree of the tail below d
                std::vector<FpPoly::Term> kept;
                for (const auto& t : tail.terms())
                    if (t.mono.exponent(pivot) < d) kept.push_back(t);
                f = f + FpPoly::from_terms(field, nvars, std::move(kept));
            }
            if (f.deg_in(pivot) == static_cast<int>(d)) {
                s.tri.push_back(strip_scalar_content(f));
            }
        }
        ++pivot;
    }
    // unsorted part: free of T_1..T_k
    int extra = static_cast<int>(rng.below(3));
    for (int i = 0; i < extra; ++i) {
        if (progress >= nvars) break;
        s.insert_square(random_poly_from(rng, field, nvars, progress + 1, max_total_deg, 3,
                                         static_cast<long>(field.p - 1)));
    }
    s.validate();
    return s;
}

// ---- constructive random inputs for the five rewriting operations ----
// Each builder returns a valid system plus arguments satisfying the
// operation's precondition; used by the pointwise-equivalence suites.

struct CaseSplitInput {
    SemiTriSystem<PrimeField> sys;
    FpPoly f;
    std::vector<FpPoly> extra;
};

inline CaseSplitInput gen_case_split(SplitMix64& rng, const PrimeField& field, VarIndex nvars) {
    VarIndex k = static_cast<VarIndex>(rng.below(nvars + 1));
    auto sys = random_system(rng, field, nvars, k);
    // f as a product of explicit factors so sub-divisors are available
    std::vector<FpPoly> parts;
    int nparts = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < nparts; ++i)
        parts.push_back(
            random_poly_from(rng, field, nvars, k + 1, 2, 2, static_cast<long>(field.p - 1)));
    FpPoly f = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) f = f * parts[i];
    std::vector<FpPoly> extra;
    for (const auto& part : parts)
        if (rng.chance(1, 2) && !part.is_constant()) extra.push_back(part);
    return {std::move(sys), std::move(f), std::move(extra)};
}

struct DivisionInput {
    SemiTriSystem<PrimeField> sys;
    FpPoly f;
    FpPoly h;
};

inline DivisionInput gen_division(SplitMix64& rng, const PrimeField& field, VarIndex nvars) {
    VarIndex k = static_cast<VarIndex>(rng.below(nvars));  // k < nvars
    auto sys = random_system(rng, field, nvars, k);
    VarIndex v = k + 1;
    FpPoly h = random_poly_from(rng, field, nvars, v, 2, 2, static_cast<long>(field.p - 1));
    if (h.deg_in(v) < 1)
        h = h + FpPoly::variable(field, nvars, v, static_cast<std::uint32_t>(1 + rng.below(2)));
    h = strip_scalar_content(h);
    FpPoly b = h.lc_in(v);
    if (!b.is_constant()) sys.ineq.push(b);  // certify b | g structurally
    // f distinct from h: removing f must keep the divisor in the system
    FpPoly f = strip_scalar_content(
        random_poly_from(rng, field, nvars, v, 3, 3, static_cast<long>(field.p - 1)));
    if (f == h) f = strip_scalar_content(h + FpPoly::constant(field, nvars, field.one()));
    sys.insert_square(h);
    sys.insert_square(f);
    sys.validate();
    return {std::move(sys), std::move(f), std::move(h)};
}

inline SemiTriSystem<PrimeField> gen_advance(SplitMix64& rng, const PrimeField& field,
                                             VarIndex nvars) {
    VarIndex k = static_cast<VarIndex>(rng.below(nvars));
    auto sys = random_system(rng, field, nvars, k);
    std::vector<FpPoly> kept;
    for (const auto& f : sys.square)
        if (f.deg_in(k + 1) <= 0) kept.push_back(f);
    sys.square = std::move(kept);
    if (k + 1 < nvars && rng.chance(1, 2))
        sys.insert_square(random_poly_from(rng, field, nvars, k + 2, 2, 2,
                                           static_cast<long>(field.p - 1)));
    sys.validate();
    return sys;
}

struct UniqueInput {
    SemiTriSystem<PrimeField> sys;
    FpPoly f;
};

// unique polynomial with positive T_{k+1}-degree; sortable when demanded
inline UniqueInput gen_unique_positive(SplitMix64& rng, const PrimeField& field, VarIndex nvars,
                                       bool lc_divides_g) {
    VarIndex k = static_cast<VarIndex>(rng.below(nvars));
    auto sys = random_system(rng, field, nvars, k);
    VarIndex v = k + 1;
    std::vector<FpPoly> kept;
    for (const auto& g : sys.square)
        if (g.deg_in(v) <= 0) kept.push_back(g);
    sys.square = std::move(kept);
    FpPoly f = random_poly_from(rng, field, nvars, v, 3, 3, static_cast<long>(field.p - 1));
    if (f.deg_in(v) < 1)
        f = f + FpPoly::variable(field, nvars, v, static_cast<std::uint32_t>(1 + rng.below(3)));
    f = strip_scalar_content(f);
    if (lc_divides_g) {
        FpPoly b = f.lc_in(v);
        if (!b.is_constant()) sys.ineq.push(b);
    }
    sys.insert_square(f);
    sys.validate();
    return {std::move(sys), std::move(f)};
}

// ---- random monic dense quotient rings over Q (for minimal-polynomial
// contracts) ----

struct RandomRing {
    RatFuncField<RationalField> field;
    std::vector<VarIndex> dense;
    std::vector<DensePoly<RationalField>> gens;  // monic, pivots ascending
};

// Random monic dense triangular generators with dim = prod(d_i) <= dim_cap.
inline RandomRing random_quotient_ring(SplitMix64& rng, std::uint64_t dim_cap = 27) {
    RationalField QQ;
    VarIndex nvars = static_cast<VarIndex>(2 + rng.below(3));  // 2..4
    std::vector<VarIndex> dense;
    for (VarIndex v = 1; v <= nvars; ++v)
        if (rng.chance(1, 2)) dense.push_back(v);
    if (dense.empty()) dense.push_back(static_cast<VarIndex>(1 + rng.below(nvars)));

    RandomRing ring{RatFuncField<RationalField>(QQ, nvars), dense, {}};
    std::uint64_t dim = 1;
    for (std::size_t i = 0; i < dense.size(); ++i) {
        std::uint32_t dmax = 1;
        while (dmax < 3 && dim * (dmax + 1) <= dim_cap && rng.chance(1, 2)) ++dmax;
        std::uint32_t d = 1 + static_cast<std::uint32_t>(rng.below(dmax));
        dim *= d;
        using DP = DensePoly<RationalField>;
        DP gen = DP::monomial(ring.field, nvars, Monomial::var(dense[i], d), ring.field.one());
        // a few lower-order terms with polynomial coefficients in the
        // non-dense variables
        int extras = static_cast<int>(rng.below(3));
        for (int e = 0; e < extras; ++e) {
            Monomial m = Monomial::var(dense[i], static_cast<std::uint32_t>(rng.below(d)));
            for (std::size_t jj = i + 1; jj < dense.size(); ++jj)
                m = m * Monomial::var(dense[jj], static_cast<std::uint32_t>(rng.below(2)));
            std::vector<QPoly::Term> coeff_terms;
            int cterms = 1 + static_cast<int>(rng.below(2));
            for (int t = 0; t < cterms; ++t) {
                Monomial cm;
                for (VarIndex v = 1; v <= nvars; ++v) {
                    bool is_dense = std::find(dense.begin(), dense.end(), v) != dense.end();
                    if (!is_dense && rng.chance(1, 3))
                        cm = cm * Monomial::var(v, static_cast<std::uint32_t>(1 + rng.below(2)));
                }
                long c = rng.int_in(-2, 2);
                coeff_terms.push_back({cm, QQ.from_long(c == 0 ? 1 : c)});
            }
            auto cp = QPoly::from_terms(QQ, nvars, std::move(coeff_terms));
            if (cp.is_zero()) continue;
            gen = gen + DP::monomial(ring.field, nvars, m, RatFunc<RationalField>::from_poly(cp));
        }
        ring.gens.push_back(std::move(gen));
    }
    return ring;
}

inline QElem<RationalField> random_qelem(SplitMix64& rng, const QuotientRing<RationalField>& ring,
                                         long coeff_bound = 2) {
    QElem<RationalField> e = ring.zero();
    RationalField QQ;
    VarIndex nvars = ring.field().nvars;
    for (std::uint64_t i = 0; i < ring.dim(); ++i) {
        if (!rng.chance(1, 2)) continue;
        auto num = random_poly(rng, QQ, nvars, 1, 2, coeff_bound, true);
        // keep coordinates supported on the non-dense variables
        std::vector<QPoly::Term> kept;
        for (const auto& t : num.terms()) {
            bool ok = true;
            for (VarIndex piv : ring.pivots()) ok = ok && !t.mono.depends_on(piv);
            if (ok) kept.push_back(t);
        }
        auto np = QPoly::from_terms(QQ, nvars, std::move(kept));
        if (np.is_zero()) continue;
        e.coords[i] = RatFunc<RationalField>::from_poly(np);
    }
    return e;
}

}  // namespace testutil

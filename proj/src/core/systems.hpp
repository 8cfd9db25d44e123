#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "core/factor_list.hpp"
#include "core/poly.hpp"

namespace monomtest {

// Semi-triangular system (F_square, F_tri, k, g): unsorted equations,
// equations of triangular shape (strictly increasing pivots, all <= k),
// a progress index and the factored inequation. Values are immutable in
// use: every rewriting operation returns fresh systems.
template <class Field>
struct SemiTriSystem {
    using P = Poly<Field>;

    Field field;
    VarIndex nvars = 0;
    std::vector<P> square;  // F_square, deterministic storage order
    std::vector<P> tri;     // F_tri, ordered by pivot
    VarIndex progress = 0;  // k
    FactorList<Field> ineq; // g

    SemiTriSystem(Field f, VarIndex n) : field(std::move(f)), nvars(n) {}

    // zero equations are dropped on insertion; scalar content is a unit
    void insert_square(P f) {
        if (f.is_zero()) return;
        P s = strip_scalar_content(f);
        for (const P& g : square)
            if (g == s) return;
        auto pos = std::lower_bound(square.begin(), square.end(), s, poly_store_less<Field>);
        square.insert(pos, std::move(s));
    }

    void append_tri(P f) { tri.push_back(strip_scalar_content(std::move(f))); }

    bool is_triangular() const {
        for (const P& f : square)
            if (!f.is_constant()) return false;
        return true;
    }

    // a nonzero constant equation makes the system unsatisfiable
    bool is_dead() const {
        for (const P& f : square)
            if (f.is_constant() && !f.is_zero()) return true;
        return false;
    }

    std::string to_string(const NameTable& names = {}) const {
        std::string s = "({";
        for (std::size_t i = 0; i < square.size(); ++i)
            s += (i ? ", " : "") + square[i].to_string(names);
        s += "}, {";
        for (std::size_t i = 0; i < tri.size(); ++i)
            s += (i ? ", " : "") + tri[i].to_string(names);
        s += "}, " + std::to_string(progress) + ", " + ineq.to_string(names) + ")";
        return s;
    }

    // Checks all four semi-triangular conditions; throws a contract error
    // naming the violated one.
    void validate(bool expand_g = false) const {
        VarIndex last_pivot = 0;
        for (const P& f : tri) {
            if (f.is_constant())
                throw Error(ErrorKind::Contract, "triangular part contains a constant");
            VarIndex k = f.pivot();
            if (k <= last_pivot)
                throw Error(ErrorKind::Contract, "pivots not strictly increasing (condition i)");
            last_pivot = k;
            if (k > progress)
                throw Error(ErrorKind::Contract, "pivot above progress index (condition iii)");
            if (!ineq.divides_subproduct(f.lc_in(k)))
                throw Error(ErrorKind::Contract,
                            "pivot leading coefficient does not divide g (condition ii)");
            if (expand_g && !ineq.empty() && !poly_divides(f.lc_in(k), ineq.expanded()))
                throw Error(ErrorKind::Contract, "expanded-g cross-check failed (condition ii)");
        }
        if (progress > nvars)
            throw Error(ErrorKind::Contract, "progress index out of range");
        for (const P& f : square) {
            for (VarIndex i = 1; i <= progress; ++i)
                if (f.deg_in(i) > 0)
                    throw Error(ErrorKind::Contract,
                                "unsorted equation involves a processed variable (condition iv)");
        }
    }
};

template <class Field>
struct TriangleMush {
    std::vector<SemiTriSystem<Field>> systems;
};

template <class Field>
bool is_triangular(const SemiTriSystem<Field>& s) {
    return s.is_triangular();
}

namespace detail {

template <class Field>
TriangleMush<Field>&& validated(TriangleMush<Field>&& m) {
#ifndef NDEBUG
    for (const auto& s : m.systems) s.validate();
#endif
    return std::move(m);
}

}  // namespace detail

// Construction operation (i), case-by-case analysis. The second branch's
// inequation is g extended by `extra`; the structural certificate is that
// product(extra) divides f exactly, which gives h | f*g.
template <class Field>
TriangleMush<Field> op_case_split(const SemiTriSystem<Field>& s, const Poly<Field>& f,
                                  std::span<const Poly<Field>> extra) {
    for (VarIndex i = 1; i <= s.progress; ++i)
        if (f.deg_in(i) > 0)
            throw Error(ErrorKind::Contract, "case-split polynomial involves a processed variable");
    Poly<Field> c = f;
    for (const Poly<Field>& e : extra) {
        if (e.is_zero()) throw Error(ErrorKind::Contract, "zero factor in case split");
        if (e.is_constant()) continue;
        auto dr = poly_divrem(c, e);
        if (!dr.rem.is_zero())
            throw Error(ErrorKind::Contract, "case-split factors must divide f");
        c = dr.quot;
    }
    SemiTriSystem<Field> with_eq = s;
    with_eq.insert_square(f);
    SemiTriSystem<Field> with_ineq = s;
    with_ineq.ineq = s.ineq.extended(extra);
    return detail::validated(TriangleMush<Field>{{std::move(with_eq), std::move(with_ineq)}});
}

// Construction operation (ii), polynomial division: replace f by the
// pseudo-remainder of division by h in T_{k+1}. Requires that the leading
// coefficient of h divides g.
template <class Field>
TriangleMush<Field> op_division(const SemiTriSystem<Field>& s, const Poly<Field>& f,
                                const Poly<Field>& h) {
    auto find = [&](const Poly<Field>& p) {
        for (const auto& q : s.square)
            if (q == p) return true;
        return false;
    };
    if (!find(f) || !find(h))
        throw Error(ErrorKind::Contract, "division operands must be unsorted equations");
    VarIndex v = s.progress + 1;
    if (h.deg_in(v) < 1)
        throw Error(ErrorKind::Contract, "divisor must involve T_{k+1}");
    Poly<Field> b = h.lc_in(v);
    if (!s.ineq.divides_subproduct(b))
        throw Error(ErrorKind::Contract, "divisor leading coefficient must divide g");
    auto pd = poly_pseudo_div(f, h, v);
    SemiTriSystem<Field> out = s;
    out.square.erase(std::find(out.square.begin(), out.square.end(), f));
    out.insert_square(pd.u);
    return detail::validated(TriangleMush<Field>{{std::move(out)}});
}

// Construction operation (iii), unused variable
template <class Field>
TriangleMush<Field> op_advance(const SemiTriSystem<Field>& s) {
    if (s.progress >= s.nvars)
        throw Error(ErrorKind::Contract, "no variable left to advance over");
    for (const auto& f : s.square)
        if (f.deg_in(s.progress + 1) > 0)
            throw Error(ErrorKind::Contract, "T_{k+1} still occurs in an unsorted equation");
    SemiTriSystem<Field> out = s;
    out.progress += 1;
    return detail::validated(TriangleMush<Field>{{std::move(out)}});
}

namespace detail {

template <class Field>
void require_unique_positive(const SemiTriSystem<Field>& s, const Poly<Field>& f) {
    VarIndex v = s.progress + 1;
    if (f.deg_in(v) <= 0)
        throw Error(ErrorKind::Contract, "polynomial does not involve T_{k+1}");
    bool found = false;
    for (const auto& q : s.square) {
        if (q.deg_in(v) > 0) {
            if (!(q == f))
                throw Error(ErrorKind::Contract,
                            "T_{k+1} occurs in more than one unsorted equation");
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::Contract, "polynomial is not an unsorted equation");
}

}  // namespace detail

// Construction operation (iv), sort polynomial
template <class Field>
TriangleMush<Field> op_sort(const SemiTriSystem<Field>& s, const Poly<Field>& f) {
    if (s.progress >= s.nvars) throw Error(ErrorKind::Contract, "progress index exhausted");
    detail::require_unique_positive(s, f);
    if (!s.ineq.divides_subproduct(f.lc_in(s.progress + 1)))
        throw Error(ErrorKind::Contract, "pivot leading coefficient must divide g");
    SemiTriSystem<Field> out = s;
    out.square.erase(std::find(out.square.begin(), out.square.end(), f));
    out.append_tri(f);
    out.progress += 1;
    return detail::validated(TriangleMush<Field>{{std::move(out)}});
}

// Construction operation (v), last polynomial. Branch order: descending j,
// then the coefficient branch; branches whose inequation factor a_j is
// zero are dropped.
template <class Field>
TriangleMush<Field> op_last_poly(const SemiTriSystem<Field>& s, const Poly<Field>& f) {
    if (s.progress >= s.nvars) throw Error(ErrorKind::Contract, "progress index exhausted");
    detail::require_unique_positive(s, f);
    VarIndex v = s.progress + 1;
    int d = f.deg_in(v);
    std::vector<Poly<Field>> coeff;  // a_0 ... a_d
    coeff.reserve(static_cast<std::size_t>(d) + 1);
    for (int e = 0; e <= d; ++e)
        coeff.push_back(f.coeff_of(v, static_cast<std::uint32_t>(e)));

    SemiTriSystem<Field> base = s;
    base.square.erase(std::find(base.square.begin(), base.square.end(), f));

    TriangleMush<Field> out;
    for (int j = d; j >= 1; --j) {
        if (coeff[static_cast<std::size_t>(j)].is_zero()) continue;
        SemiTriSystem<Field> br = base;
        // truncation f_j = sum_{i<=j} a_i T_{k+1}^i
        Poly<Field> fj = Poly<Field>::zero(s.field, s.nvars);
        for (int e = 0; e <= j; ++e)
            fj = fj + coeff[static_cast<std::size_t>(e)].shifted(
                           Monomial::var(v, static_cast<std::uint32_t>(e)));
        for (int e = j + 1; e <= d; ++e) br.insert_square(coeff[static_cast<std::size_t>(e)]);
        br.append_tri(fj);
        br.progress += 1;
        br.ineq = s.ineq.extended(coeff[static_cast<std::size_t>(j)]);
        out.systems.push_back(std::move(br));
    }
    SemiTriSystem<Field> rest = base;
    for (int e = 0; e <= d; ++e) rest.insert_square(coeff[static_cast<std::size_t>(e)]);
    rest.progress += 1;
    out.systems.push_back(std::move(rest));
    return detail::validated(std::move(out));
}

// Exhaustive F_p-rational solutions of a system: all points where every
// equation vanishes and g does not. Test oracle for the pointwise
// equivalence of the rewriting operations.
inline std::set<std::vector<std::uint64_t>> enumerate_solutions(
    const SemiTriSystem<PrimeField>& s, std::uint64_t bound = 1u << 21) {
    const std::uint64_t p = s.field.p;
    double total = 1;
    for (VarIndex i = 0; i < s.nvars; ++i) total *= static_cast<double>(p);
    if (total > static_cast<double>(bound))
        throw ResourceError("oom", "enumeration bound exceeded");

    std::set<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> idx(s.nvars, 0);
    std::vector<Fp> point;
    point.reserve(s.nvars);
    while (true) {
        point.clear();
        for (VarIndex i = 0; i < s.nvars; ++i) point.emplace_back(idx[i], p);
        std::span<const Fp> pt(point);
        bool ok = true;
        for (const auto& f : s.square)
            if (!f.eval(pt).is_zero()) {
                ok = false;
                break;
            }
        if (ok)
            for (const auto& f : s.tri)
                if (!f.eval(pt).is_zero()) {
                    ok = false;
                    break;
                }
        if (ok && s.ineq.nonzero_at(pt)) out.insert(idx);
        // odometer
        VarIndex i = 0;
        for (; i < s.nvars; ++i) {
            if (++idx[i] < p) break;
            idx[i] = 0;
        }
        if (i == s.nvars) break;
    }
    return out;
}

inline std::set<std::vector<std::uint64_t>> enumerate_solutions(
    const TriangleMush<PrimeField>& mush, std::uint64_t bound = 1u << 21) {
    std::set<std::vector<std::uint64_t>> out;
    for (const auto& s : mush.systems) {
        auto part = enumerate_solutions(s, bound);
        out.insert(part.begin(), part.end());
    }
    return out;
}

}  // namespace monomtest

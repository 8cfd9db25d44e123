#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "core/deadline.hpp"
#include "core/poly.hpp"

namespace monomtest {

enum class MonomialOrder { Lex, DegRevLex };

inline int order_compare(MonomialOrder ord, const Monomial& a, const Monomial& b) {
    return ord == MonomialOrder::Lex ? Monomial::lex_compare(a, b)
                                     : Monomial::degrevlex_compare(a, b);
}

struct OracleLimits {
    double timeout_seconds = -1.0;   // < 0: unlimited
    std::uint64_t max_basis = 4096;  // ceiling on basis growth
};

// Plain Buchberger. Deliberately simple: normal selection strategy plus
// the coprime and chain criteria, nothing else. Serves as ground truth
// for the pipeline, so auditability beats speed.
template <class Field>
class Buchberger {
public:
    using P = Poly<Field>;
    using Term = typename P::Term;

    Buchberger(MonomialOrder ord, OracleLimits limits) : ord_(ord), limits_(limits) {}

    // Gröbner basis of <F>, minimalized and tail-interreduced.
    std::vector<P> run(const std::vector<P>& input) {
        auto start = std::chrono::steady_clock::now();
        basis_.clear();
        for (const P& f : input) {
            if (f.is_zero()) continue;
            basis_.push_back(strip_scalar_content(f));
        }
        std::set<std::pair<std::size_t, std::size_t>> pending;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i + 1; j < basis_.size(); ++j) pending.insert({i, j});

        while (!pending.empty()) {
            if (limits_.timeout_seconds >= 0) {
                auto elapsed = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
                if (elapsed > limits_.timeout_seconds)
                    throw ResourceError("timeout", "oracle time limit exceeded");
            }
            if (basis_.size() > limits_.max_basis)
                throw ResourceError("oom", "oracle basis limit exceeded");

            auto it = pick_pair(pending);
            auto [i, j] = *it;
            pending.erase(it);
            const Monomial lij = Monomial::lcm(lt(basis_[i]).mono, lt(basis_[j]).mono);
            // coprime leading terms: S-polynomial reduces to zero
            if (lij == lt(basis_[i]).mono * lt(basis_[j]).mono) continue;
            if (chain_criterion(i, j, lij, pending)) continue;
            P s = s_poly(basis_[i], basis_[j]);
            P r = normal_form(s, basis_);
            if (r.is_zero()) continue;
            r = strip_scalar_content(r);
            std::size_t n = basis_.size();
            basis_.push_back(r);
            for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
        }

        minimalize();
        interreduce();
        std::vector<P> out = basis_;
        std::sort(out.begin(), out.end(), poly_store_less<Field>);
        return out;
    }

    // full reduction of f modulo the basis, in the oracle's order
    P normal_form(const P& f, const std::vector<P>& basis) const {
        P r(f.field(), f.nvars());
        P p = f;
        while (!p.is_zero()) {
            poll_deadline();
            const Term& plt = lt(p);
            bool reduced = false;
            for (const P& g : basis) {
                if (g.is_zero()) continue;
                const Term& glt = lt(g);
                if (glt.mono.divides(plt.mono)) {
                    Monomial m = plt.mono.quotient_by(glt.mono);
                    auto c = plt.coeff / glt.coeff;
                    p = p - g.mono_mul(m, c);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                P t = P::monomial(f.field(), f.nvars(), plt.mono, plt.coeff);
                r = r + t;
                p = p - t;
            }
        }
        return r;
    }

private:
    // Terms of Poly are stored descending in lex; the oracle only needs the
    // leading term in its own order, found by a scan.
    const Term& lt(const P& f) const {
        const auto& ts = f.terms();
        if (ts.empty()) throw Error(ErrorKind::DegenerateInput, "leading term of zero");
        if (ord_ == MonomialOrder::Lex) return ts.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < ts.size(); ++i)
            if (order_compare(ord_, ts[i].mono, ts[best].mono) > 0) best = i;
        return ts[best];
    }

    P s_poly(const P& f, const P& g) const {
        const Term& ft = lt(f);
        const Term& gt = lt(g);
        Monomial l = Monomial::lcm(ft.mono, gt.mono);
        P a = f.mono_mul(l.quotient_by(ft.mono), ft.coeff.inverse());
        P b = g.mono_mul(l.quotient_by(gt.mono), gt.coeff.inverse());
        return a - b;
    }

    std::set<std::pair<std::size_t, std::size_t>>::iterator pick_pair(
        std::set<std::pair<std::size_t, std::size_t>>& pending) const {
        auto best = pending.begin();
        Monomial best_lcm =
            Monomial::lcm(lt(basis_[best->first]).mono, lt(basis_[best->second]).mono);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(lt(basis_[it->first]).mono, lt(basis_[it->second]).mono);
            if (order_compare(ord_, l, best_lcm) < 0) {
                best = it;
                best_lcm = l;
            }
        }
        return best;
    }

    bool chain_criterion(std::size_t i, std::size_t j, const Monomial& lij,
                         const std::set<std::pair<std::size_t, std::size_t>>& pending) const {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == i || k == j) continue;
            if (!lt(basis_[k]).mono.divides(lij)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (pending.count({p1.first, p1.second}) == 0 &&
                pending.count({p2.first, p2.second}) == 0)
                return true;
        }
        return false;
    }

    void minimalize() {
        for (std::size_t i = 0; i < basis_.size();) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (i == j) continue;
                if (lt(basis_[j]).mono.divides(lt(basis_[i]).mono)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant)
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            else
                ++i;
        }
    }

    void interreduce() {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::vector<P> others;
            for (std::size_t j = 0; j < basis_.size(); ++j)
                if (j != i) others.push_back(basis_[j]);
            basis_[i] = strip_scalar_content(normal_form(basis_[i], others));
        }
    }

    MonomialOrder ord_;
    OracleLimits limits_;
    std::vector<P> basis_;
};

template <class Field>
std::vector<Poly<Field>> buchberger(const std::vector<Poly<Field>>& gens,
                                    MonomialOrder ord = MonomialOrder::DegRevLex,
                                    OracleLimits limits = {}) {
    return Buchberger<Field>(ord, limits).run(gens);
}

template <class Field>
bool ideal_contains_one(const std::vector<Poly<Field>>& gens, OracleLimits limits = {}) {
    auto basis = buchberger(gens, MonomialOrder::DegRevLex, limits);
    for (const auto& g : basis)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

// Rabinowitsch form of the radical-membership test: I contains a monomial
// iff 1 lies in <F, 1 - Y*T1*...*Tr> with a fresh variable Y.
template <class Field>
bool oracle_contains_monomial(const std::vector<Poly<Field>>& gens, VarIndex nvars,
                              OracleLimits limits = {}) {
    if (nvars < 1) throw Error(ErrorKind::Contract, "need at least one variable");
    using P = Poly<Field>;
    if (gens.empty()) return false;  // <0> contains no monomial
    const Field& field = gens.front().field();
    VarIndex ext = nvars + 1;
    std::vector<P> lifted;
    lifted.reserve(gens.size() + 1);
    for (const P& g : gens) lifted.push_back(g.extended(ext));
    Monomial torus = Monomial::var(ext, 1);
    for (VarIndex v = 1; v <= nvars; ++v) torus = torus * Monomial::var(v, 1);
    P rab = P::constant(field, ext, field.one()) -
            P::monomial(field, ext, torus, field.one());
    lifted.push_back(rab);
    return ideal_contains_one(lifted, limits);
}

// Oracle-side solvability of a polynomial system with an inequation: is
// there x with f(x)=0 for all f and g(x) != 0? Again via Rabinowitsch:
// empty iff 1 in <F, 1 - Y*g>.
template <class Field>
bool oracle_system_solvable(const std::vector<Poly<Field>>& eqs, const Poly<Field>& g,
                            VarIndex nvars, OracleLimits limits = {}) {
    using P = Poly<Field>;
    const Field& field = g.field();
    VarIndex ext = nvars + 1;
    std::vector<P> lifted;
    for (const P& f : eqs) lifted.push_back(f.extended(ext));
    P y = P::variable(field, ext, ext);
    P rab = P::constant(field, ext, field.one()) - y * g.extended(ext);
    lifted.push_back(rab);
    return !ideal_contains_one(lifted, limits);
}

}  // namespace monomtest

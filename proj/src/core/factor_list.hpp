#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/poly.hpp"

namespace monomtest {

// The inequation g, stored as the multiset of its factors and never
// expanded by default. Constant factors are units and are dropped;
// product(factors) equals g up to a nonzero scalar.
template <class Field>
class FactorList {
public:
    using P = Poly<Field>;

    FactorList() = default;

    void push(P f) {
        if (f.is_zero())
            throw Error(ErrorKind::Contract, "zero factor in an inequation");
        if (f.is_constant()) return;
        factors_.push_back(strip_scalar_content(f));
    }

    FactorList extended(std::span<const P> extra) const {
        FactorList r = *this;
        for (const P& f : extra) r.push(f);
        return r;
    }

    FactorList extended(const P& extra) const {
        FactorList r = *this;
        r.push(extra);
        return r;
    }

    const std::vector<P>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    // Is b a sub-product of the stored factors, up to a scalar? The
    // rewriting operations only ever certify leading coefficients that
    // equal a single stored factor, so an exact-match pass comes first;
    // multi-factor products fall to a largest-first greedy division, and
    // optionally to expanding g and testing divisibility directly. The
    // structural passes are stable under later growth of the factor list.
    bool divides_subproduct(const P& b, bool allow_expand = true) const {
        if (b.is_zero()) return false;
        if (b.is_constant()) return true;
        P c = strip_scalar_content(b);
        for (const P& f : factors_)
            if (f == c) return true;
        // greedy over the multiset, biggest factors first so small ones
        // cannot strip a partial divisor and strand the rest
        std::vector<std::size_t> order(factors_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t bb) {
            return poly_store_less(factors_[bb], factors_[a]);
        });
        std::vector<bool> used(factors_.size(), false);
        bool progress = true;
        while (progress && !c.is_constant()) {
            progress = false;
            for (std::size_t i : order) {
                if (used[i]) continue;
                auto dr = poly_divrem(c, factors_[i]);
                if (dr.rem.is_zero()) {
                    c = dr.quot;
                    used[i] = true;
                    progress = true;
                    if (c.is_constant()) break;
                }
            }
        }
        if (c.is_constant()) return true;
        // expansion only when the product stays small
        if (allow_expand && !factors_.empty() && factors_.size() <= 12) {
            std::size_t estimate = 1;
            for (const P& f : factors_) {
                estimate *= f.terms().size();
                if (estimate > 4096) return false;
            }
            return poly_divides(b, expanded());
        }
        return false;
    }

    P expanded() const {
        if (factors_.empty()) {
            throw Error(ErrorKind::Contract, "cannot expand without a ring context");
        }
        P r = P::constant(factors_.front().field(), factors_.front().nvars(),
                          factors_.front().field().one());
        for (const P& f : factors_) r = r * f;
        return r;
    }

    // nonzero at the point iff every factor is (empty product is 1)
    template <class Elem>
    bool nonzero_at(std::span<const Elem> point) const {
        for (const P& f : factors_)
            if (f.eval(point).is_zero()) return false;
        return true;
    }

    std::string to_string(const NameTable& names = {}) const {
        if (factors_.empty()) return "1";
        std::string s;
        for (const P& f : factors_) {
            if (!s.empty()) s += "*";
            bool wrap = f.terms().size() > 1;
            s += wrap ? "(" + f.to_string(names) + ")" : f.to_string(names);
        }
        return s;
    }

private:
    std::vector<P> factors_;
};

}  // namespace monomtest

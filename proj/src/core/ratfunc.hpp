#pragma once

#include <span>
#include <string>
#include <utility>

#include "core/poly.hpp"

namespace monomtest {

// Element of the rational function field over the base field: num/den with
// den != 0. Normalization avoids multivariate gcd (the pipeline never needs
// it): cancel when one of num, den exactly divides the other, strip scalar
// contents, and optionally trial-cancel hinted factors.
template <class Field>
class RatFunc {
public:
    using P = Poly<Field>;

    RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        num_.check_context(den_);
        if (den_.is_zero())
            throw Error(ErrorKind::DegenerateInput, "rational function with zero denominator");
        normalize();
    }

    static RatFunc from_poly(P p) {
        P one = P::constant(p.field(), p.nvars(), p.field().one());
        return RatFunc(std::move(p), std::move(one));
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_negative() const { return false; }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const {
        if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero())
            throw Error(ErrorKind::DegenerateInput, "division by the zero rational function");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc inverse() const {
        if (is_zero()) throw Error(ErrorKind::DegenerateInput, "inverse of zero");
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const {
        if (num_.is_zero()) return o.num_.is_zero();
        if (o.num_.is_zero()) return false;
        return num_ * o.den_ == o.num_ * den_;
    }

    // cancel every hinted factor that exactly divides both sides
    void cancel_hints(std::span<const P> hints) {
        for (const P& h : hints) {
            if (h.is_constant()) continue;
            while (true) {
                auto dn = poly_divrem(num_, h);
                if (!dn.rem.is_zero()) break;
                auto dd = poly_divrem(den_, h);
                if (!dd.rem.is_zero()) break;
                num_ = std::move(dn.quot);
                den_ = std::move(dd.quot);
            }
        }
        normalize();
    }

    std::string to_string(const NameTable& names = {}) const {
        if (den_.is_one()) {
            if (num_.terms().size() > 1) return "(" + num_.to_string(names) + ")";
            return num_.to_string(names);
        }
        auto wrap = [&](const P& p) {
            return p.terms().size() > 1 ? "(" + p.to_string(names) + ")" : p.to_string(names);
        };
        return "(" + wrap(num_) + "/" + wrap(den_) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = P::constant(den_.field(), den_.nvars(), den_.field().one());
            return;
        }
        if (den_.is_constant()) {
            num_ = num_.scaled(den_.leading_term().coeff.inverse());
            den_ = P::constant(den_.field(), den_.nvars(), den_.field().one());
            canonicalize_scalars();
            return;
        }
        auto dn = poly_divrem(num_, den_);
        if (dn.rem.is_zero()) {
            num_ = std::move(dn.quot);
            den_ = P::constant(den_.field(), den_.nvars(), den_.field().one());
            canonicalize_scalars();
            return;
        }
        if (!num_.is_constant()) {
            auto dd = poly_divrem(den_, num_);
            if (dd.rem.is_zero()) {
                num_ = P::constant(num_.field(), num_.nvars(), num_.field().one());
                den_ = std::move(dd.quot);
            }
        }
        canonicalize_scalars();
    }

    // move the scalar unit into num so den is content-stripped
    void canonicalize_scalars() {
        if constexpr (Field::kind == FieldKind::Rational || Field::kind == FieldKind::Prime) {
            P stripped = strip_scalar_content(den_);
            if (!(stripped == den_)) {
                // den = c * stripped for a scalar c; divide num by c as well
                const auto& c = den_.leading_term().coeff / stripped.leading_term().coeff;
                num_ = num_.scaled(c.inverse());
                den_ = std::move(stripped);
            }
        }
    }

    P num_;
    P den_;
};

template <class Field>
struct RatFuncField {
    Field base;
    VarIndex nvars = 0;

    using Elem = RatFunc<Field>;
    static constexpr FieldKind kind = FieldKind::Function;

    RatFuncField() = default;
    RatFuncField(Field b, VarIndex n) : base(std::move(b)), nvars(n) {}

    Elem zero() const { return Elem::from_poly(Poly<Field>::zero(base, nvars)); }
    Elem one() const {
        return Elem::from_poly(Poly<Field>::constant(base, nvars, base.one()));
    }
    Elem from_long(long n) const {
        return Elem::from_poly(Poly<Field>::constant(base, nvars, base.from_long(n)));
    }
    Elem from_base_poly(Poly<Field> p) const { return Elem::from_poly(std::move(p)); }

    bool operator==(const RatFuncField& o) const {
        return nvars == o.nvars && base == o.base;
    }

    bool coeff_is_negative(const Elem&) const { return false; }
    std::string coeff_string(const Elem& c, const NameTable& names) const {
        return c.to_string(names);
    }
    std::string name() const { return base.name() + "(...)"; }
};

}  // namespace monomtest

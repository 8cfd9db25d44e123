#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "core/counters.hpp"
#include "core/errors.hpp"
#include "core/names.hpp"

namespace monomtest {

enum class FieldKind { Rational, Prime, Function };

// Arbitrary-precision rational, kept canonical (coprime, positive
// denominator) by GMP. Field additions/multiplications bump the global
// counters; negation and comparisons are free.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw Error(ErrorKind::DegenerateInput, "rational with zero denominator");
        v_.canonicalize();
    }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }

    Rational operator+(const Rational& o) const {
        count_addition();
        return from_mpq(v_ + o.v_);
    }
    Rational operator-(const Rational& o) const {
        count_addition();
        return from_mpq(v_ - o.v_);
    }
    Rational operator*(const Rational& o) const {
        count_multiplication();
        return from_mpq(v_ * o.v_);
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error(ErrorKind::DegenerateInput, "rational division by zero");
        count_multiplication();
        return from_mpq(v_ / o.v_);
    }
    Rational operator-() const { return from_mpq(-v_); }

    Rational inverse() const {
        if (is_zero()) throw Error(ErrorKind::DegenerateInput, "inverse of zero");
        count_multiplication();
        return from_mpq(1 / v_);
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

struct RationalField {
    using Elem = Rational;
    static constexpr FieldKind kind = FieldKind::Rational;

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_long(long n) const { return Rational(n); }
    Rational from_mpz(const mpz_class& n) const { return Rational(n); }

    bool operator==(const RationalField&) const { return true; }

    bool coeff_is_negative(const Rational& c) const { return c.is_negative(); }
    std::string coeff_string(const Rational& c, const NameTable&) const { return c.to_string(); }
    std::string name() const { return "QQ"; }
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// 64-bit primality test (deterministic Miller-Rabin base set)
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Element of F_p, value in [0, p). p travels with the element; a
// default-constructed element is a detached zero that adopts the other
// operand's modulus, which keeps empty containers harmless.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(p ? v % p : v), p_(p) {}

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return false; }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp operator+(const Fp& o) const {
        std::uint64_t p = unify(o);
        count_addition();
        std::uint64_t s = v_ + o.v_;
        if (s >= p) s -= p;
        return Fp(s, p);
    }
    Fp operator-(const Fp& o) const {
        std::uint64_t p = unify(o);
        count_addition();
        std::uint64_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
        return Fp(s, p);
    }
    Fp operator*(const Fp& o) const {
        std::uint64_t p = unify(o);
        count_multiplication();
        return Fp(detail::mulmod_u64(v_, o.v_, p), p);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp operator-() const {
        if (p_ == 0 || v_ == 0) return *this;
        return Fp(p_ - v_, p_);
    }

    Fp inverse() const {
        if (p_ == 0 || v_ == 0) throw Error(ErrorKind::DegenerateInput, "inverse of zero in F_p");
        return Fp(detail::powmod_u64(v_, p_ - 2, p_), p_);
    }

    bool operator==(const Fp& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw Error(ErrorKind::Context, "prime field modulus mismatch");
        return v_ == o.v_;
    }

    std::string to_string() const { return std::to_string(v_); }

private:
    std::uint64_t unify(const Fp& o) const {
        if (p_ == o.p_) {
            if (p_ == 0) throw Error(ErrorKind::Context, "arithmetic on detached F_p zeros");
            return p_;
        }
        if (p_ == 0) return o.p_;
        if (o.p_ == 0) return p_;
        throw Error(ErrorKind::Context, "prime field modulus mismatch");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

struct PrimeField {
    std::uint64_t p = 0;
    using Elem = Fp;
    static constexpr FieldKind kind = FieldKind::Prime;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (p < 2 || p >= (1ULL << 62) || !is_prime_u64(p))
            throw Error(ErrorKind::Contract, "field characteristic must be a prime below 2^62");
    }

    Fp zero() const { return Fp(0, p); }
    Fp one() const { return Fp(1, p); }
    Fp from_long(long n) const {
        long long m = static_cast<long long>(n) % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(m), p);
    }
    Fp from_mpz(const mpz_class& n) const {
        mpz_class m = n % static_cast<unsigned long>(p);
        if (m < 0) m += static_cast<unsigned long>(p);
        return Fp(m.get_ui(), p);
    }

    bool operator==(const PrimeField& o) const { return p == o.p; }

    bool coeff_is_negative(const Fp&) const { return false; }
    std::string coeff_string(const Fp& c, const NameTable&) const { return c.to_string(); }
    std::string name() const { return "F" + std::to_string(p); }
};

}  // namespace monomtest

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "gordual/errors.hpp"

namespace gordual {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/* p-adic valuation of a nonzero integer. */
inline long padic_valuation(Int n, long p) {
    if (n == 0) throw InternalError("valuation of zero");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline Int pow_int(long base, long exp) {
    Int r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

/* Inverse of a mod m, for a coprime to m. */
inline Int mod_inverse(Int a, const Int& m) {
    Int r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw InternalError("mod_inverse of non-unit");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

/* Residue of a p-local rational mod p^k, as an integer in [0, p^k). */
inline Int reduce_mod_p_power(const Rational& x, long p, long k) {
    Int m = pow_int(p, k);
    Int num = numerator(x) % m;
    if (num < 0) num += m;
    Int den = denominator(x) % m;
    return (num * mod_inverse(den, m)) % m;
}

/* Coefficient base: the prime field F_p or the p-local integers Z_(p).
 *
 * Elements of either are carried as exact rationals. Prime-field values are
 * normalized into [0, p); p-local values are arbitrary rationals whose
 * denominator is coprime to p, i.e. a unit times p^k. */
struct CoefficientRing {
    enum class Kind { prime_field, p_local };

    Kind kind;
    long p;

    static CoefficientRing prime_field(long p) { return make(Kind::prime_field, p); }
    static CoefficientRing p_local(long p) { return make(Kind::p_local, p); }

    static CoefficientRing make(Kind kind, long p) {
        if (!is_prime(p))
            throw UnsupportedCoefficientsError(std::to_string(p) + " is not prime");
        return CoefficientRing{kind, p};
    }

    bool is_field() const { return kind == Kind::prime_field; }

    /* Gorenstein shift of the base: 0 for a field, -1 for Z_(p). */
    long base_shift() const { return is_field() ? 0 : -1; }

    Rational normalize(const Rational& x) const {
        if (is_field()) {
            Int num = numerator(x) % p;
            if (num < 0) num += p;
            Int den = denominator(x) % p;
            if (den == 0) throw UnsupportedCoefficientsError("denominator divisible by p in F_p");
            return Rational((num * mod_inverse(den, p)) % p);
        }
        if (denominator(x) % p == 0)
            throw UnsupportedCoefficientsError("denominator divisible by p is not p-local");
        return x;
    }

    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational neg(const Rational& a) const { return normalize(-a); }

    std::optional<long> valuation(const Rational& x) const {
        if (x == 0) return std::nullopt;
        if (is_field()) return 0;
        return padic_valuation(numerator(x), p) - padic_valuation(denominator(x), p);
    }

    /* x = unit_part(x) * p^valuation(x). */
    Rational unit_part(const Rational& x) const {
        if (x == 0) throw InternalError("unit_part of zero");
        if (is_field()) return x;
        long v = *valuation(x);
        Rational pv = v >= 0 ? Rational(pow_int(p, v)) : Rational(1, pow_int(p, -v));
        return x / pv;
    }

    bool is_unit(const Rational& x) const { return x != 0 && *valuation(x) == 0; }

    /* Coefficient divisibility: true when b/a stays in the ring. */
    bool divides(const Rational& a, const Rational& b) const {
        if (a == 0) return b == 0;
        if (b == 0) return true;
        if (is_field()) return true;
        return *valuation(a) <= *valuation(b);
    }

    /* Exact quotient b / a; requires divides(a, b). */
    Rational quotient(const Rational& b, const Rational& a) const {
        if (!divides(a, b)) throw InternalError("inexact coefficient quotient");
        if (b == 0) return Rational(0);
        return normalize(b / a);
    }

    Rational inverse(const Rational& x) const {
        if (!is_unit(x)) throw InternalError("inverse of non-unit coefficient");
        return normalize(Rational(1) / x);
    }

    /* lcm and gcd through valuations; the unit ambiguity is fixed as p^k. */
    Rational coeff_lcm(const Rational& a, const Rational& b) const {
        if (is_field()) return Rational(1);
        long v = std::max(*valuation(a), *valuation(b));
        return Rational(pow_int(p, v));
    }

    std::string to_string(const Rational& x) const {
        return x.str();
    }
};

inline bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind == b.kind && a.p == b.p;
}

}  // namespace gordual

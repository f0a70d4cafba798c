#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace p5lab {

// Every invariant value in this project is an exact rational; floating point
// appears only in display paths (empirical exponents) and never feeds back
// into a comparison.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a/b" or "a". Throws ArgumentError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

// Reduced "num/den" form, denominator always printed ("5/2", "3/1").
std::string rational_str(const Rational& q);

Rational rational_pow(const Rational& base, unsigned long exp);

BigInt bigint_pow(const BigInt& base, unsigned long exp);

// 2^-k as an exact rational.
Rational pow2_inv(unsigned long k);

}  // namespace p5lab

#pragma once

#include <gmpxx.h>
#include <string>

namespace thetacov {

// All arithmetic in this project is exact. Rational is the only scalar type
// that ever crosses a module boundary; no floating point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);
Integer binomial(long n, long k);

// 2^e with e of either sign; negative exponents give honest fractions.
Rational pow2(long e);

// Bernoulli numbers with B_1 = -1/2, computed by the defining recurrence
// and memoized.
Rational bernoulli(int n);

// zeta(-n) for integer n >= 0, via zeta(-n) = (-1)^n B_{n+1} / (n+1).
Rational zeta_neg(int n);

// Canonical serialization "p/q" in lowest terms with q > 0, denominator
// always written ("3/1", "-1/2", "0/1").
std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& s);

} // namespace thetacov

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thetacov/numbers.hpp"

using namespace thetacov;

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == Integer("479001600"));
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("powers of two, both signs") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(-1) * pow2(1) == 1);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("zeta at nonpositive integers") {
  // zeta(0) = -1/2, zeta(-1) = -1/12, zeta(-3) = 1/120, zeta(-5) = -1/252
  CHECK(zeta_neg(0) == Rational(-1, 2));
  CHECK(zeta_neg(1) == Rational(-1, 12));
  CHECK(zeta_neg(2) == 0);
  CHECK(zeta_neg(3) == Rational(1, 120));
  CHECK(zeta_neg(5) == Rational(-1, 252));
}

TEST_CASE("rational serialization round trip") {
  CHECK(rational_str(Rational(3)) == "3/1");
  CHECK(rational_str(Rational(-1, 2)) == "-1/2");
  CHECK(rational_str(Rational(0)) == "0/1");
  CHECK(rational_str(Rational(2, 4)) == "1/2");
  CHECK(parse_rational("3/1") == 3);
  CHECK(parse_rational("-9/320") == Rational(-9, 320));
  CHECK(parse_rational(rational_str(Rational(-77, 6))) == Rational(-77, 6));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thetacov/errors.hpp"
#include "thetacov/qseries.hpp"

using namespace thetacov;

TEST_CASE("Eisenstein expansions") {
  PowerSeries e2 = eisenstein(2, 6);
  Rational want2[] = {{-1, 24}, 1, 3, 4, 7, 6, 12};
  for (int n = 0; n <= 6; ++n) CHECK(e2[n] == want2[n]);
  PowerSeries e4 = eisenstein(4, 4);
  Rational want4[] = {{1, 240}, 1, 9, 28, 73};
  for (int n = 0; n <= 4; ++n) CHECK(e4[n] == want4[n]);
  CHECK(eisenstein(6, 0)[0] == Rational(-1, 504));
}

TEST_CASE("pentagonal product equals the signed strict sum") {
  int N = 50;
  CHECK(euler_function(N) == strict_signed_sum(N));
  PowerSeries one(N);
  one[0] = 1;
  CHECK(euler_function(N) * euler_function(N).inverse() == one);
}

TEST_CASE("series arithmetic") {
  PowerSeries f(4), g(4);
  f[0] = 1; f[1] = -2; f[3] = Rational(1, 2);
  g[1] = 3; g[2] = 1;
  PowerSeries h = f * g;
  CHECK(h[0] == 0);
  CHECK(h[1] == 3);
  CHECK(h[2] == -5);
  CHECK(h[3] == -2);
  CHECK(h[4] == Rational(3, 2));
  CHECK(f.derivative_qdq()[3] == Rational(3, 2));
  CHECK((f - f) == PowerSeries(4));
}

TEST_CASE("brackets of low power sums") {
  int N = 30;
  PPoly one = PPoly::constant(1);
  PowerSeries b1 = bracket(one, N);
  for (int n = 1; n <= N; ++n) CHECK(b1[n] == 0);
  CHECK(b1[0] == 1);
  CHECK(bracket(PPoly::pk(1), N) == eisenstein(2, N).scaled(-1));
  CHECK(bracket(PPoly::pk(3), N) == eisenstein(4, N).scaled(-1));
}

TEST_CASE("one-branch-point series starts at its smallest cover") {
  PowerSeries f = f_m_series({{3}}, 8);
  for (int n = 0; n <= 2; ++n) CHECK(f[n] == 0);
  CHECK(f[3] == -3);
  // dividing by (q)_inf shifts the raw masses: -6 + p(1) * -3
  CHECK(f[4] == -9);
  CHECK(signed_mass_via_characters({{3}}, 3) == -3);
  CHECK(signed_mass_via_characters({{3}}, 4) == -6);
  CHECK(signed_mass_via_characters({}, 0) == 1);
  CHECK(signed_mass_via_characters({}, 1) == -1);
}

TEST_CASE("quasimodular basis dimensions") {
  CHECK(qm_basis(0).size() == 1);
  CHECK(qm_basis(2).size() == 2);
  CHECK(qm_basis(4).size() == 4);
  CHECK(qm_basis(6).size() == 7);
  CHECK(qm_basis(8).size() == 11);
}

TEST_CASE("fit recovers an exact combination") {
  int N = 20;
  PowerSeries s = eisenstein(2, N) * eisenstein(2, N)
                 - eisenstein(4, N).scaled(Rational(7, 2));
  QuasimodularForm qm = qm_fit(s, 4);
  CHECK(qm.coeff.at({2, 0, 0}) == 1);
  CHECK(qm.coeff.at({0, 1, 0}) == Rational(-7, 2));
  CHECK(qm.coeff.count({0, 0, 0}) == 0);
  CHECK(qm.expand(N) == s);
}

TEST_CASE("fit failure pinpoints the first bad coefficient") {
  int N = 20;
  PowerSeries s = eisenstein(2, N);
  s[10] += 1;
  CHECK_THROWS_AS(qm_fit(s, 2), NotQuasimodular);
  try {
    qm_fit(s, 2);
  } catch (const NotQuasimodular& e) {
    CHECK(e.index == 10);
  }
  PowerSeries tiny(4);
  CHECK_THROWS_AS(qm_fit(tiny, 8), ResourceLimit);
}

TEST_CASE("monomial names") {
  CHECK(QuasimodularForm::monomial_name({0, 0, 0}) == "1");
  CHECK(QuasimodularForm::monomial_name({1, 0, 0}) == "E2");
  CHECK(QuasimodularForm::monomial_name({2, 1, 0}) == "E2^2 E4");
  CHECK(QuasimodularForm::monomial_name({0, 0, 3}) == "E6^3");
}

TEST_CASE("cumulant identity for the logarithm") {
  int N = 24;
  for (const Partition& mu : {Partition{1}, Partition{3}, Partition{1, 1}, Partition{3, 1}})
    CHECK(verify_log_identity(mu, N));
}

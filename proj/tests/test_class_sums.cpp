#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thetacov/characters.hpp"
#include "thetacov/errors.hpp"

#include <algorithm>

using namespace thetacov;

namespace {

// the spectrum the central characters predict: each strict lambda of d
// contributes f_mu(lambda), twice when ell(lambda) is odd
std::vector<Rational> predicted(int d, const Partition& mu) {
  std::vector<Rational> v;
  for (const auto& lam : strict_partitions(d)) {
    Rational f = central_character(mu, lam);
    v.push_back(f);
    if (length_of(lam) % 2 == 1) v.push_back(f);
  }
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("frozen spectra") {
  CHECK(class_sum_eigenvalues(3, {3}) == std::vector<Rational>{-4, 2, 2});
  CHECK(class_sum_eigenvalues(4, {3}) == std::vector<Rational>{-4, 8, 8});
}

TEST_CASE("identity class acts as one") {
  for (int d = 1; d <= 4; ++d) {
    auto eig = class_sum_eigenvalues(d, {});
    for (const auto& e : eig) CHECK(e == 1);
    CHECK(eig == predicted(d, {}));
  }
}

TEST_CASE("multiplicity rule matches the character table") {
  for (int d = 3; d <= 5; ++d)
    for (const auto& mu : odd_partitions_up_to(d)) {
      if (strip_ones(mu) != mu) continue;
      CHECK(class_sum_eigenvalues(d, mu) == predicted(d, mu));
    }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(class_sum_eigenvalues(3, {2}), InvalidRamification);
  CHECK_THROWS_AS(class_sum_eigenvalues(3, {5}), InvalidRamification);
  CHECK_THROWS_AS(class_sum_eigenvalues(6, {3}), ResourceLimit);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thetacov/errors.hpp"
#include "thetacov/partitions.hpp"

using namespace thetacov;

TEST_CASE("partition counting") {
  int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n)
    CHECK(partitions_of(n).size() == static_cast<size_t>(p[n]));
  int q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  for (int n = 0; n <= 10; ++n)
    CHECK(strict_partitions(n).size() == static_cast<size_t>(q[n]));
}

TEST_CASE("generation order and validity") {
  auto ps = partitions_of(4);
  CHECK(ps.front() == Partition{4});
  CHECK(ps.back() == Partition{1, 1, 1, 1});
  for (const auto& p : ps) CHECK(is_partition(p));
  for (const auto& s : strict_partitions(9)) CHECK(is_strict(s));
}

TEST_CASE("odd partitions up to a bound") {
  auto odd = odd_partitions_up_to(5);
  // empty, (1), (1,1), (3), (1,1,1), (3,1), (1^4), (5), (3,1,1), (1^5)
  CHECK(odd.size() == 10);
  CHECK(odd.front() == Partition{});
  for (const auto& p : odd) {
    CHECK(all_parts_odd(p));
    CHECK(size_of(p) <= 5);
  }
}

TEST_CASE("padding and stripping") {
  CHECK(pad_with_ones({3}, 5) == Partition{3, 1, 1});
  CHECK(pad_with_ones({}, 3) == Partition{1, 1, 1});
  CHECK(strip_ones({3, 1, 1}) == Partition{3});
  CHECK(strip_ones({1, 1}) == Partition{});
}

TEST_CASE("centralizer orders and class sizes") {
  CHECK(z_mu({1, 1, 1}) == 6);
  CHECK(z_mu({3}) == 3);
  CHECK(z_mu({2, 1}) == 2);
  CHECK(class_size({3, 1}, 4) == 8);
  CHECK(class_size({2, 2}, 4) == 3);
  // class sizes of S4 sum to 24
  Integer total = 0;
  for (const auto& mu : partitions_of(4)) total += class_size(mu, 4);
  CHECK(total == 24);
}

TEST_CASE("ramification data validation") {
  CHECK_NOTHROW(RamificationData(5, {{3}, {5}}));
  CHECK_THROWS_AS(RamificationData(3, {{2}}), InvalidRamification);
  CHECK_THROWS_AS(RamificationData(3, {{5}}), InvalidRamification);
  CHECK_THROWS_AS(RamificationData(-1, {}), InvalidRamification);
  CHECK_THROWS_AS(RamificationData(3, {{1, 3}}), InvalidRamification);
  // fixed points are dropped, pure-1 profiles disappear
  RamificationData m(5, {{3, 1, 1}, {1, 1}});
  CHECK(m.profiles.size() == 1);
  CHECK(m.profiles[0] == Partition{3});
}

TEST_CASE("Euler characteristic and weight") {
  using Profiles = std::vector<Partition>;
  CHECK(euler_characteristic(Profiles{}) == 0);
  CHECK(euler_characteristic(Profiles{{3}}) == -2);
  CHECK(euler_characteristic(Profiles{{3}, {3}}) == -4);
  CHECK(euler_characteristic(Profiles{{5}}) == -4);
  CHECK(weight(Profiles{}) == 0);
  CHECK(weight(Profiles{{3}}) == 4);
  CHECK(weight(Profiles{{3, 3}, {5}}) == 14);
}

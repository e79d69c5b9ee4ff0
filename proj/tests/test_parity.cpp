#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thetacov/parity.hpp"

using namespace thetacov;

TEST_CASE("degree one cover is odd") {
  MonodromyTuple t;
  t.d = 1;
  t.a = t.b = Perm::identity(1);
  ParityReport r = parity_of_cover(t);
  REQUIRE(r.comps.size() == 1);
  // four lifts, q = 0 once (A = B = +1) and q = 1 three times
  CHECK(r.comps[0].lift_count == 4);
  CHECK(r.comps[0].q_count[0] == 1);
  CHECK(r.comps[0].q_count[1] == 3);
  CHECK(r.comps[0].arf_sum == -2);
  CHECK(r.parity == 1);
  CHECK(signed_mass(RamificationData(1, {})) == -1);
}

TEST_CASE("frozen signed masses") {
  CHECK(signed_mass(RamificationData(0, {})) == 1);
  CHECK(signed_mass(RamificationData(3, {})) == 0);
  CHECK(signed_mass(RamificationData(3, {{3}})) == -3);
  CHECK(signed_mass(RamificationData(4, {{3}})) == -6);
}

TEST_CASE("all three branched covers at d = 3 are odd") {
  ParityMasses pm = parity_masses(RamificationData(3, {{3}}));
  CHECK(pm.tuples == 18);
  CHECK(pm.even == 0);
  CHECK(pm.odd == 3);
  CHECK(pm.signed_sum == -3);
}

TEST_CASE("lift counts and Arf sums per component") {
  RamificationData m(4, {{3}});
  enumerate_tuples(m, [&](const MonodromyTuple& t) {
    ParityReport r = parity_of_cover(t);
    for (const auto& c : r.comps) {
      CHECK(c.lift_count == (1ll << (c.d_c - 1 + 2 * c.genus)));
      long long mag = c.arf_sum < 0 ? -c.arf_sum : c.arf_sum;
      CHECK(mag == (1ll << (c.genus + c.d_c - 1)));
    }
  });
}

TEST_CASE("whole-tuple lift count splits over components") {
  RamificationData m(4, {{3}});
  enumerate_tuples(m, [&](const MonodromyTuple& t) {
    long long direct = enumerate_b_lifts(t, [](const BLift&) {});
    long long expect = 1;
    for (const auto& c : parity_of_cover(t).comps)
      expect <<= c.d_c - 1 + 2 * c.genus;
    CHECK(direct == expect);
  });
}

TEST_CASE("alternating sum reproduces the Arf parity") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<std::vector<Partition>> profs = {{}};
    if (d >= 3) profs.push_back({{3}});
    for (const auto& p : profs) {
      RamificationData m(d, p);
      enumerate_tuples(m, [&](const MonodromyTuple& t) {
        Rational v = signed_mass_via_alternating_sum(t);
        int parity = parity_of_cover(t).parity;
        CHECK(v == (parity ? -1 : 1));
      });
    }
  }
}

TEST_CASE("q is constant on diagonal conjugation orbits") {
  RamificationData m(3, {{3}});
  enumerate_tuples(m, [&](const MonodromyTuple& t) {
    enumerate_b_lifts(t, [&](const BLift& l) {
      int q0 = q_of_lift(l);
      for (uint64_t w = 0; w < 8; ++w) {
        SignedPerm dg{Perm::identity(3), w};  // diagonal, its own inverse
        BLift moved;
        moved.A = dg * l.A * dg;
        moved.B = dg * l.B * dg;
        for (const auto& dlt : l.D) moved.D.push_back(dg * dlt * dg);
        CHECK(q_of_lift(moved) == q0);
      }
    });
  });
}

TEST_CASE("parity masses are degree-0 clean and parallel safe") {
  ParityMasses z = parity_masses(RamificationData(0, {}));
  CHECK(z.tuples == 1);
  CHECK(z.even == 1);
  CHECK(z.odd == 0);
  EnumOptions four;
  four.jobs = 4;
  ParityMasses a = parity_masses(RamificationData(4, {{3}}));
  ParityMasses b = parity_masses(RamificationData(4, {{3}}), four);
  CHECK(a.tuples == b.tuples);
  CHECK(a.even == b.even);
  CHECK(a.odd == b.odd);
  CHECK(a.signed_sum == b.signed_sum);
}

#include "thetacov/verify.hpp"

#include "thetacov/covers.hpp"
#include "thetacov/errors.hpp"
#include "thetacov/parity.hpp"
#include "thetacov/qseries.hpp"
#include "thetacov/sergeev.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace thetacov {

namespace {

std::string profiles_str(const std::vector<Partition>& ps) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ",";
    os << "(";
    for (size_t j = 0; j < ps[i].size(); ++j) {
      if (j) os << ",";
      os << ps[i][j];
    }
    os << ")";
  }
  os << ")";
  return os.str();
}

// The family the displayed identities are exercised on.
std::vector<std::vector<Partition>> standard_family() {
  return {{}, {{3}}, {{5}}, {{3, 3}}, {{3}, {3}}};
}

bool family_fits(const std::vector<Partition>& ps, int d) {
  for (const auto& mu : ps)
    if (size_of(mu) > d) return false;
  return true;
}

std::vector<CheckResult> suite_mass_agreement(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (const auto& ps : standard_family()) {
    int cap = ps.size() >= 2 ? std::min(opt.dmax, 5) : opt.dmax;
    for (int d = 0; d <= cap; ++d) {
      if (!family_fits(ps, d)) continue;
      RamificationData M(d, ps);
      EnumOptions eo;
      eo.jobs = opt.jobs;
      Rational lhs = signed_mass(M, eo);
      Rational rhs = signed_mass_via_characters(M.profiles, d);
      CheckResult c;
      std::ostringstream os;
      os << "signed mass, M=" << profiles_str(ps) << ", d=" << d;
      c.name = os.str();
      c.pass = lhs == rhs;
      c.detail = "covers " + rational_str(lhs) + ", characters " + rational_str(rhs);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> suite_lift_structure(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  int dmax = std::min(opt.dmax, 5);
  for (const auto& ps : standard_family()) {
    for (int d = 1; d <= dmax; ++d) {
      if (!family_fits(ps, d)) continue;
      RamificationData M(d, ps);
      long long bad_count = 0, bad_arf = 0, bad_chi = 0, tuples = 0;
      int chi_M = euler_characteristic(M);
      enumerate_tuples(M, [&](const MonodromyTuple& t) {
        ++tuples;
        ParityReport rep = parity_of_cover(t);
        int chi = 0;
        for (const auto& cp : rep.comps) {
          chi += 2 - 2 * cp.genus;
          if (cp.lift_count != 1LL << (cp.d_c - 1 + 2 * cp.genus)) ++bad_count;
          long long want = 1LL << (cp.genus + cp.d_c - 1);
          if (cp.arf_sum != want && cp.arf_sum != -want) ++bad_arf;
        }
        if (chi != chi_M) ++bad_chi;
      });
      CheckResult c;
      std::ostringstream os;
      os << "lift counts and Arf sums, M=" << profiles_str(ps) << ", d=" << d;
      c.name = os.str();
      c.pass = bad_count == 0 && bad_arf == 0 && bad_chi == 0;
      std::ostringstream det;
      det << tuples << " tuples, " << bad_count << " bad counts, " << bad_arf
          << " bad Arf sums, " << bad_chi << " Euler mismatches";
      c.detail = det.str();
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> suite_burnside(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  int dmax = std::min(opt.dmax, 6);
  for (const auto& ps : standard_family()) {
    for (int d = 0; d <= dmax; ++d) {
      if (!family_fits(ps, d)) continue;
      if (ps.size() >= 2 && d > 5) continue;
      RamificationData M(d, ps);
      EnumOptions eo;
      eo.jobs = opt.jobs;
      Rational direct = mass(M, eo);
      Rational burnside = mass_via_burnside(M);
      CheckResult c;
      std::ostringstream os;
      os << "mass, M=" << profiles_str(ps) << ", d=" << d;
      c.name = os.str();
      c.pass = direct == burnside;
      c.detail = "enumerated " + rational_str(direct) + ", characters " +
                 rational_str(burnside);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> suite_oracle(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  int dmax = std::min(opt.dmax, 5);
  for (int d = 1; d <= dmax; ++d) {
    std::vector<Partition> mus{{}};
    for (const auto& nu : odd_partitions_up_to(d))
      if (!nu.empty() && nu[0] >= 3 && strip_ones(nu) == nu) mus.push_back(nu);
    for (const auto& mu : mus) {
      std::vector<Rational> got = class_sum_eigenvalues(d, mu);
      std::vector<Rational> want;
      for (const auto& lam : strict_partitions(d)) {
        Rational f = central_character(mu, lam);
        want.push_back(f);
        if (length_of(lam) % 2 == 1) want.push_back(f);
      }
      std::sort(want.begin(), want.end());
      CheckResult c;
      std::ostringstream os;
      os << "class sum spectrum, d=" << d << ", mu=" << profiles_str({mu});
      c.name = os.str();
      c.pass = got == want;
      std::ostringstream det;
      det << got.size() << " eigenvalues";
      if (!c.pass) det << ", multiset mismatch";
      c.detail = det.str();
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<CheckResult> suite_euler(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  int N = opt.N;
  PowerSeries prod = euler_function(N);
  {
    CheckResult c;
    c.name = "pentagonal product equals signed strict-partition sum";
    c.pass = prod == strict_signed_sum(N);
    c.detail = "order " + std::to_string(N);
    out.push_back(std::move(c));
  }
  {
    PowerSeries one(N);
    one[0] = 1;
    CheckResult c;
    c.name = "product times its inverse is 1";
    c.pass = prod * prod.inverse() == one;
    c.detail = "order " + std::to_string(N);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> suite_log_identity(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  std::vector<Partition> mus{{1}, {3}, {1, 1}, {3, 1}};
  for (const auto& mu : mus) {
    CheckResult c;
    c.name = "cumulant is an Eisenstein derivative, mu=" + profiles_str({mu});
    c.pass = verify_log_identity(mu, opt.N);
    c.detail = "order " + std::to_string(opt.N);
    out.push_back(std::move(c));
  }
  return out;
}

// Random valid tuples: draw the handle, then make the branch data from the
// commutator so the relation holds by construction.
struct TupleSampler {
  std::mt19937_64 rng;
  explicit TupleSampler(uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) {
    return static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)) + lo;
  }

  Perm random_perm(int d) {
    Perm p = Perm::identity(d);
    for (int i = d - 1; i > 0; --i) {
      int j = uniform(0, i);
      std::swap(p.img[i], p.img[j]);
    }
    return p;
  }

  // nullopt-style: returns false when the draw cannot be completed
  bool draw(MonodromyTuple& t) {
    int d = uniform(2, 5);
    int r = uniform(0, 2);
    t.d = d;
    t.a = random_perm(d);
    t.b = random_perm(d);
    t.branch.clear();
    Perm c = t.a * t.b * t.a.inverse() * t.b.inverse();
    if (r == 0) {
      if (!c.is_identity()) return false;
      return true;
    }
    if (r == 1) {
      if (!all_parts_odd(c.cycle_type())) return false;
      t.branch.push_back(c);
      return true;
    }
    Perm g1 = random_perm(d);
    if (!all_parts_odd(g1.cycle_type())) return false;
    Perm g2 = g1.inverse() * c;
    if (!all_parts_odd(g2.cycle_type())) return false;
    t.branch.push_back(g1);
    t.branch.push_back(g2);
    return true;
  }

  MonodromyTuple tuple() {
    MonodromyTuple t;
    while (!draw(t)) {
    }
    return t;
  }

  // one uniformly drawn B-lift of t, by rejection on the solved last branch
  bool draw_lift(const MonodromyTuple& t, BLift& psi) {
    int d = t.d;
    int r = static_cast<int>(t.branch.size());
    uint64_t top = uint64_t{1} << d;
    psi.A = SignedPerm{t.a, rng() % top};
    psi.B = SignedPerm{t.b, rng() % top};
    SignedPerm K = psi.A * psi.B * psi.A.inverse() * psi.B.inverse();
    psi.D.assign(r, SignedPerm::pure(Perm::identity(d)));
    if (r == 0) return K.is_identity();
    SignedPerm prefix = SignedPerm::pure(Perm::identity(d));
    for (int i = 0; i + 1 < r; ++i) {
      const auto masks = positive_sign_masks(t.branch[i]);
      psi.D[i] = SignedPerm{t.branch[i], masks[rng() % masks.size()]};
      prefix = prefix * psi.D[i];
    }
    SignedPerm last = prefix.inverse() * K;
    if (!all_cycles_positive(last)) return false;
    psi.D[r - 1] = last;
    return true;
  }

  BLift lift(const MonodromyTuple& t) {
    BLift psi;
    while (!draw_lift(t, psi)) {
    }
    return psi;
  }
};

std::vector<CheckResult> suite_arf_welldef(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  TupleSampler s(opt.seed);
  int trials = opt.trials;

  {
    // q is constant on diagonal conjugation orbits of the lift
    int bad = 0;
    for (int i = 0; i < trials; ++i) {
      MonodromyTuple t = s.tuple();
      BLift psi = s.lift(t);
      uint64_t w = s.rng() % (uint64_t{1} << t.d);
      SignedPerm W{Perm::identity(t.d), w};
      BLift conj = psi;
      conj.A = W * psi.A * W.inverse();
      conj.B = W * psi.B * W.inverse();
      for (auto& D : conj.D) D = W * D * W.inverse();
      if (q_of_lift(psi) != q_of_lift(conj)) ++bad;
    }
    out.push_back({"q invariant under diagonal conjugation of the lift",
                   bad == 0, std::to_string(trials) + " trials"});
  }
  {
    // parity is a class function: simultaneous relabeling of the sheets
    int bad = 0;
    for (int i = 0; i < trials; ++i) {
      MonodromyTuple t = s.tuple();
      Perm h = s.random_perm(t.d);
      MonodromyTuple u = t;
      auto cnj = [&](const Perm& g) { return h * g * h.inverse(); };
      u.a = cnj(t.a);
      u.b = cnj(t.b);
      for (size_t k = 0; k < t.branch.size(); ++k) u.branch[k] = cnj(t.branch[k]);
      if (parity_of_cover(t).parity != parity_of_cover(u).parity) ++bad;
    }
    out.push_back({"parity invariant under sheet relabeling", bad == 0,
                   std::to_string(trials) + " trials"});
  }
  {
    // parity is stable when adjacent branch points are braided past each
    // other, (g1, g2) -> (g2, g2^{-1} g1 g2)
    int bad = 0, used = 0;
    for (int i = 0; i < trials; ++i) {
      MonodromyTuple t = s.tuple();
      if (t.branch.size() < 2) continue;
      ++used;
      MonodromyTuple u = t;
      u.branch[0] = t.branch[1];
      u.branch[1] = t.branch[1].inverse() * t.branch[0] * t.branch[1];
      if (parity_of_cover(t).parity != parity_of_cover(u).parity) ++bad;
    }
    out.push_back({"parity invariant under branch reordering", bad == 0,
                   std::to_string(used) + " braidable draws"});
  }
  {
    // the eps power ignores which preimage of the handles was chosen
    int bad = 0;
    for (int i = 0; i < trials; ++i) {
      MonodromyTuple t = s.tuple();
      BLift psi = s.lift(t);
      std::vector<SergeevElem> ds;
      for (const auto& D : psi.D) ds.push_back(canonical_lift(D));
      SergeevElem A = SergeevElem::lift0(psi.A), B = SergeevElem::lift0(psi.B);
      SergeevElem Af = A, Bf = B;
      Af.eps ^= (s.rng() & 1) != 0;
      Bf.eps ^= (s.rng() & 1) != 0;
      if (epsilon_power({{A, B}}, ds) != epsilon_power({{Af, Bf}}, ds)) ++bad;
    }
    out.push_back({"eps power ignores the handle preimage choice", bad == 0,
                   std::to_string(trials) + " trials"});
  }
  {
    // canonical lift commutes with conjugation
    int bad = 0;
    for (int i = 0; i < trials; ++i) {
      int d = s.uniform(2, 5);
      // draw a liftable element: random odd-type permutation, positive signs
      Perm g = s.random_perm(d);
      if (!all_parts_odd(g.cycle_type())) {
        --i;
        continue;
      }
      const auto masks = positive_sign_masks(g);
      SignedPerm b{g, masks[s.rng() % masks.size()]};
      SignedPerm h{s.random_perm(d), s.rng() % (uint64_t{1} << d)};
      SignedPerm hbh = h * b * h.inverse();
      SergeevElem lhs = canonical_lift(hbh);
      SergeevElem rhs = conj(SergeevElem::lift0(h), canonical_lift(b));
      if (!(lhs == rhs)) ++bad;
    }
    out.push_back({"canonical lift is conjugation equivariant", bad == 0,
                   std::to_string(trials) + " trials"});
  }
  return out;
}

} // namespace

std::vector<std::string> verify_suite_names() {
  return {"mass-agreement", "lift-structure", "burnside", "oracle",
          "euler",    "log-identity", "arf-welldef"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const VerifyOptions& opt) {
  if (suite == "mass-agreement") return suite_mass_agreement(opt);
  if (suite == "lift-structure") return suite_lift_structure(opt);
  if (suite == "burnside") return suite_burnside(opt);
  if (suite == "oracle") return suite_oracle(opt);
  if (suite == "euler") return suite_euler(opt);
  if (suite == "log-identity") return suite_log_identity(opt);
  if (suite == "arf-welldef") return suite_arf_welldef(opt);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

} // namespace thetacov

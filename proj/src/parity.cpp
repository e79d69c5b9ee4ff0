#include "thetacov/parity.hpp"
#include "thetacov/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace thetacov {

namespace {

// Canonical branch lifts and the handle commutator are reused across the
// inner sign loops; the enumeration visits lifts grouped by handle signs,
// so a depth-one memo suffices for the commutator.
struct LiftScorer {
  std::vector<std::map<uint64_t, SergeevElem>> dcache;
  SergeevElem khat;
  uint64_t last_a = 0, last_b = 0;
  bool have = false;

  explicit LiftScorer(size_t r) : dcache(r) {}

  const SergeevElem& delta(size_t i, const SignedPerm& D) {
    auto it = dcache[i].find(D.signs);
    if (it == dcache[i].end())
      it = dcache[i].emplace(D.signs, canonical_lift(D)).first;
    return it->second;
  }

  int eps_of(const BLift& psi) {
    if (!have || psi.A.signs != last_a || psi.B.signs != last_b) {
      khat = commutator(SergeevElem::lift0(psi.A), SergeevElem::lift0(psi.B));
      last_a = psi.A.signs;
      last_b = psi.B.signs;
      have = true;
    }
    SergeevElem p = SergeevElem::pure(Perm::identity(psi.A.g.deg()));
    for (size_t i = 0; i < psi.D.size(); ++i) p = p * delta(i, psi.D[i]);
    if (p.xi != khat.xi || !(p.g == khat.g))
      throw RelationViolation("lift does not close up the surface relation");
    return khat.eps ^ p.eps;
  }

  int q_of(const BLift& psi) {
    int u = psi.A.in_B0() && psi.B.in_B0() ? 0 : 1;
    return (u + eps_of(psi)) & 1;
  }
};

} // namespace

long long enumerate_b_lifts(const MonodromyTuple& t,
                            const std::function<void(const BLift&)>& visit,
                            int max_d) {
  if (t.d > max_d) throw ResourceLimit("lift enumeration degree bound exceeded");
  int d = t.d;
  int r = static_cast<int>(t.branch.size());
  BLift psi;
  psi.D.resize(r);
  if (d == 0) {
    psi.A = SignedPerm::pure(Perm::identity(0));
    psi.B = psi.A;
    psi.D.assign(r, psi.A);
    visit(psi);
    return 1;
  }

  std::vector<std::vector<uint64_t>> free_masks;
  for (int i = 0; i + 1 < r; ++i) free_masks.push_back(positive_sign_masks(t.branch[i]));

  long long count = 0;
  uint64_t top = uint64_t{1} << d;
  for (uint64_t sa = 0; sa < top; ++sa) {
    psi.A = SignedPerm{t.a, sa};
    for (uint64_t sb = 0; sb < top; ++sb) {
      psi.B = SignedPerm{t.b, sb};
      SignedPerm K = psi.A * psi.B * psi.A.inverse() * psi.B.inverse();
      if (r == 0) {
        if (!K.is_identity()) continue;
        visit(psi);
        ++count;
        continue;
      }
      // [A,B] = D_1 ... D_r with the last factor solved
      std::function<void(int, const SignedPerm&)> rec =
          [&](int k, const SignedPerm& prefix) {
            if (k == r - 1) {
              SignedPerm last = prefix.inverse() * K;
              if (!(last.g == t.branch[r - 1]))
                throw std::logic_error("solved branch lift left its class");
              if (!all_cycles_positive(last)) return;
              psi.D[r - 1] = last;
              visit(psi);
              ++count;
              return;
            }
            for (uint64_t m : free_masks[k]) {
              psi.D[k] = SignedPerm{t.branch[k], m};
              rec(k + 1, prefix * psi.D[k]);
            }
          };
      rec(0, SignedPerm::pure(Perm::identity(d)));
    }
  }
  return count;
}

int q_of_lift(const BLift& psi) {
  LiftScorer scorer(psi.D.size());
  return scorer.q_of(psi);
}

ParityReport parity_of_cover(const MonodromyTuple& t) {
  ParityReport rep;
  for (const ComponentData& comp : components(t)) {
    ComponentParity cp;
    cp.d_c = comp.restricted.d;
    cp.genus = comp.genus;
    LiftScorer scorer(comp.restricted.branch.size());
    enumerate_b_lifts(comp.restricted, [&](const BLift& psi) {
      ++cp.q_count[scorer.q_of(psi)];
    });
    cp.lift_count = cp.q_count[0] + cp.q_count[1];
    cp.arf_sum = cp.q_count[0] - cp.q_count[1];
    long long want = 1LL << (cp.genus + cp.d_c - 1);
    if (cp.arf_sum != want && cp.arf_sum != -want)
      throw std::logic_error("component Arf sum is not +-2^{g+d-1}");
    cp.parity = cp.arf_sum > 0 ? 0 : 1;
    rep.parity ^= cp.parity;
    rep.comps.push_back(cp);
  }
  return rep;
}

ParityMasses parity_masses(const RamificationData& M, const EnumOptions& opt) {
  if (M.degree > opt.max_d)
    throw ResourceLimit("degree exceeds the enumeration bound");
  if (static_cast<int>(M.profiles.size()) > opt.max_r)
    throw ResourceLimit("more branch points than the enumeration bound");

  ParityMasses out;
  out.even = out.odd = out.signed_sum = Rational(0);
  int d = M.degree;
  int r = static_cast<int>(M.profiles.size());
  if (d == 0) {
    out.tuples = 1;
    out.even = Rational(1);
    out.signed_sum = Rational(1);
    return out;
  }

  std::vector<Partition> padded;
  for (const auto& mu : M.profiles) padded.push_back(pad_with_ones(mu, d));
  std::vector<std::vector<Perm>> cls;
  for (int i = 0; i + 1 < r; ++i) cls.push_back(permutations_of_type(d, padded[i]));
  Partition last = r > 0 ? padded[r - 1] : Partition{};

  std::vector<Perm> sd = all_permutations(d);
  long long wtuples = 0, weven = 0, wodd = 0;

  // parity is invariant under simultaneous conjugation, so the handle's
  // first coordinate only needs one representative per class
  for (const Partition& tau : partitions_of(d)) {
    Perm a = representative_of_type(d, tau);
    long long w = class_size(tau, d).get_si();
    long long n = static_cast<long long>(sd.size());
    std::vector<std::array<long long, 3>> part(
        static_cast<size_t>(opt.jobs > 0 ? opt.jobs : 1), {0, 0, 0});
    parallel_chunks(n, opt.jobs, [&](long long lo, long long hi, int tid) {
      auto& acc = part[tid];
      for (long long i = lo; i < hi; ++i) {
        detail::visit_handle_tuples(a, sd[i], cls, last, r, [&](MonodromyTuple& t) {
          if (opt.connected_only && !is_connected(t)) return;
          ++acc[0];
          ++acc[parity_of_cover(t).parity ? 2 : 1];
        });
      }
    });
    for (const auto& acc : part) {
      wtuples += w * acc[0];
      weven += w * acc[1];
      wodd += w * acc[2];
    }
  }
  Rational dfact{factorial(d)};
  out.tuples = wtuples;
  out.even = Rational(static_cast<long>(weven)) / dfact;
  out.odd = Rational(static_cast<long>(wodd)) / dfact;
  out.signed_sum = Rational(static_cast<long>(weven - wodd)) / dfact;
  out.even.canonicalize();
  out.odd.canonicalize();
  out.signed_sum.canonicalize();
  return out;
}

Rational signed_mass(const RamificationData& M, const EnumOptions& opt) {
  return parity_masses(M, opt).signed_sum;
}

Rational signed_mass_via_alternating_sum(const MonodromyTuple& t) {
  int d = t.d;
  if (d == 0) return Rational(1);
  int chi = 0;
  for (const auto& comp : components(t)) chi += 2 - 2 * comp.genus;

  long long n_b = 0, n_b0 = 0, n_c = 0, n_c0 = 0;
  LiftScorer scorer(t.branch.size());
  enumerate_b_lifts(t, [&](const BLift& psi) {
    bool even = psi.A.in_B0() && psi.B.in_B0();
    int eps = scorer.eps_of(psi);
    ++n_b;
    if (even) ++n_b0;
    if (eps == 0) {
      n_c += 4;
      if (even) n_c0 += 4;
    }
  });

  Rational dfact{factorial(d)};
  Rational h_b = Rational(static_cast<long>(n_b)) / (pow2(d) * dfact);
  Rational h_b0 = Rational(static_cast<long>(n_b0)) / (pow2(d - 1) * dfact);
  Rational h_c = Rational(static_cast<long>(n_c)) / (pow2(d + 1) * dfact);
  Rational h_c0 = Rational(static_cast<long>(n_c0)) / (pow2(d) * dfact);
  Rational v = pow2(chi / 2) * dfact * (h_b - h_b0 - h_c + h_c0);
  v.canonicalize();
  if (!(v == Rational(1) || v == Rational(-1)))
    throw std::logic_error("alternating lift sum did not collapse to a sign");
  return v;
}

} // namespace thetacov

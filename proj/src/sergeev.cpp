#include "thetacov/sergeev.hpp"
#include "thetacov/errors.hpp"

#include <algorithm>
#include <bit>

namespace thetacov {

SignedPerm SignedPerm::pure(const Perm& g) { return SignedPerm{g, 0}; }

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
  return SignedPerm{g * o.g, signs ^ g.apply_mask(o.signs)};
}

SignedPerm SignedPerm::inverse() const {
  Perm gi = g.inverse();
  return SignedPerm{gi, gi.apply_mask(signs)};
}

bool SignedPerm::operator==(const SignedPerm& o) const {
  return signs == o.signs && g == o.g;
}

bool SignedPerm::is_identity() const { return signs == 0 && g.is_identity(); }

bool SignedPerm::in_B0() const { return std::popcount(signs) % 2 == 0; }

std::vector<std::pair<int, int>> SignedPerm::signed_cycle_data() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : g.cycles()) {
    int flips = 0;
    for (int x : c)
      if (signs >> x & 1) ++flips;
    out.emplace_back(static_cast<int>(c.size()), flips % 2 == 0 ? 1 : -1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second > b.second;
  });
  return out;
}

bool SignedPerm::conjugate_to_pure_odd() const {
  for (const auto& [len, sign] : signed_cycle_data())
    if (len % 2 == 0 || sign != 1) return false;
  return true;
}

SergeevElem SergeevElem::pure(const Perm& g) { return SergeevElem{0, 0, g}; }

SergeevElem SergeevElem::lift0(const SignedPerm& b) {
  return SergeevElem{0, b.signs, b.g};
}

// Push xi_T through g from the right: g xi_T = eps^{inv} xi_{g(T)} g where
// inv counts the index inversions g produces on T, because reordering the
// transported generators back into ascending order costs one eps per swap.
// Merging xi_S xi_{g(T)} then costs one eps per strictly descending pair
// across the two words, and equal indices cancel by xi^2 = 1.
SergeevElem SergeevElem::operator*(const SergeevElem& o) const {
  uint64_t gT = g.apply_mask(o.xi);
  int e = eps + o.eps + g.inversions_on(o.xi);
  uint64_t s = xi;
  uint64_t t = gT;
  while (s) {
    int i = std::countr_zero(s);
    s &= s - 1;
    e += std::popcount(t & ((uint64_t{1} << i) - 1));
  }
  return SergeevElem{static_cast<uint8_t>(e & 1), xi ^ gT, g * o.g};
}

SergeevElem SergeevElem::inverse() const {
  Perm gi = g.inverse();
  uint64_t T = gi.apply_mask(xi);
  int k = std::popcount(xi);
  int e = eps + g.inversions_on(T) + k * (k - 1) / 2;
  return SergeevElem{static_cast<uint8_t>(e & 1), T, gi};
}

bool SergeevElem::operator==(const SergeevElem& o) const {
  return eps == o.eps && xi == o.xi && g == o.g;
}

bool SergeevElem::is_identity() const {
  return eps == 0 && xi == 0 && g.is_identity();
}

int SergeevElem::degree() const { return std::popcount(xi) % 2; }

SignedPerm SergeevElem::project() const { return SignedPerm{g, xi}; }

SergeevElem conj(const SergeevElem& h, const SergeevElem& x) {
  return h * x * h.inverse();
}

SergeevElem commutator(const SergeevElem& x, const SergeevElem& y) {
  return x * y * x.inverse() * y.inverse();
}

SergeevElem canonical_lift(const SignedPerm& b) {
  if (!b.conjugate_to_pure_odd())
    throw NotCanonicallyLiftable("element has an even or negative cycle");
  // Solve U xor g(U) = S cycle by cycle; the per-cycle even sign count is
  // exactly the consistency condition for the walk to close up.
  uint64_t U = 0;
  for (const auto& c : b.g.cycles()) {
    int u = 0;
    for (size_t i = 1; i < c.size(); ++i) {
      u ^= static_cast<int>(b.signs >> c[i] & 1);
      U |= static_cast<uint64_t>(u) << c[i];
    }
  }
  SergeevElem h{0, U, Perm::identity(b.g.deg())};
  return h.inverse() * SergeevElem::pure(b.g) * h;
}

bool all_cycles_positive(const SignedPerm& b) {
  for (const auto& c : b.g.cycles()) {
    uint64_t m = 0;
    for (int x : c) m |= uint64_t{1} << x;
    if (std::popcount(b.signs & m) % 2 != 0) return false;
  }
  return true;
}

std::vector<uint64_t> positive_sign_masks(const Perm& g) {
  std::vector<uint64_t> out{0};
  for (const auto& c : g.cycles()) {
    int L = static_cast<int>(c.size());
    std::vector<uint64_t> evens;
    evens.reserve(size_t{1} << (L - 1));
    for (int s = 0; s < (1 << L); ++s) {
      if (std::popcount(static_cast<unsigned>(s)) % 2 != 0) continue;
      uint64_t m = 0;
      for (int i = 0; i < L; ++i)
        if (s >> i & 1) m |= uint64_t{1} << c[i];
      evens.push_back(m);
    }
    std::vector<uint64_t> next;
    next.reserve(out.size() * evens.size());
    for (uint64_t u : out)
      for (uint64_t e : evens) next.push_back(u | e);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int epsilon_power(const std::vector<std::pair<SergeevElem, SergeevElem>>& handles,
                  const std::vector<SergeevElem>& deltas) {
  if (handles.empty() && deltas.empty())
    throw RelationViolation("no lifts supplied");
  int d = handles.empty() ? deltas[0].g.deg() : handles[0].first.g.deg();
  SergeevElem h = SergeevElem::pure(Perm::identity(d));
  for (const auto& [a, b] : handles) h = h * commutator(a, b);
  SergeevElem p = SergeevElem::pure(Perm::identity(d));
  for (const auto& del : deltas) p = p * del;
  // both sides project to the same element of B(d) exactly when the
  // underlying relation holds; the discrepancy is then central
  if (p.xi != h.xi || !(p.g == h.g))
    throw RelationViolation("lifts do not satisfy the surface relation");
  return h.eps ^ p.eps;
}

} // namespace thetacov

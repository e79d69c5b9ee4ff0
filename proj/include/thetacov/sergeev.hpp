#pragma once

#include "thetacov/permutation.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace thetacov {

// Element of the hyperoctahedral group B(d) = S(d) x (Z/2)^d, written as a
// permutation with a sign vector. Multiplication twists the signs by the
// left factor's permutation: (g,S)(h,T) = (gh, S xor g(T)).
struct SignedPerm {
  Perm g;
  uint64_t signs = 0;

  static SignedPerm pure(const Perm& g);

  SignedPerm operator*(const SignedPerm& o) const;
  SignedPerm inverse() const;
  bool operator==(const SignedPerm& o) const;
  bool is_identity() const;

  // Even total number of sign flips. Index two subgroup B0 < B(d).
  bool in_B0() const;

  // For each cycle of g, its length and the product of signs over its
  // support, sorted by length descending then sign. Conjugation invariant.
  std::vector<std::pair<int, int>> signed_cycle_data() const;

  // All cycle lengths odd and every cycle sign +1. Exactly these elements
  // admit a distinguished lift to the Sergeev group.
  bool conjugate_to_pure_odd() const;
};

// Element of the Sergeev group C(d), a central Z/2 extension of B(d) by eps.
// Normal form eps^e xi_S g where xi_S is the ascending product of Clifford
// generators over the bit set S, written to the left of the permutation.
// Relations: xi_i^2 = 1, xi_i xi_j = eps xi_j xi_i (i != j), g xi_i g^{-1} =
// xi_{g(i)}, eps central of order 2.
struct SergeevElem {
  uint8_t eps = 0;
  uint64_t xi = 0;
  Perm g;

  static SergeevElem pure(const Perm& g);
  // The eps-exponent-zero preimage of a signed permutation.
  static SergeevElem lift0(const SignedPerm& b);

  SergeevElem operator*(const SergeevElem& o) const;
  SergeevElem inverse() const;
  bool operator==(const SergeevElem& o) const;
  bool is_identity() const;

  // Z/2 grading, the parity of |xi|.
  int degree() const;

  SignedPerm project() const;
};

SergeevElem conj(const SergeevElem& h, const SergeevElem& x); // h x h^{-1}
SergeevElem commutator(const SergeevElem& x, const SergeevElem& y);

// The distinguished preimage of an element conjugate to a pure odd-cycle
// permutation: straighten the signs cycle by cycle with a diagonal
// conjugator, then transport the pure lift back. Independent of the chosen
// conjugator. Throws NotCanonicallyLiftable otherwise.
SergeevElem canonical_lift(const SignedPerm& b);

// Given lifts of the handle pairs and of the branch elements, compare
// prod [A_j, B_j] against prod delta_i. When the projections satisfy the
// surface relation the two products agree up to a central eps^t; returns t,
// else RelationViolation.
int epsilon_power(const std::vector<std::pair<SergeevElem, SergeevElem>>& handles,
                  const std::vector<SergeevElem>& deltas);

// Every sign on each cycle support multiplies to +1.
bool all_cycles_positive(const SignedPerm& b);

// The 2^{d - #cycles} sign vectors with even intersection against every
// cycle of g, ascending.
std::vector<uint64_t> positive_sign_masks(const Perm& g);

} // namespace thetacov

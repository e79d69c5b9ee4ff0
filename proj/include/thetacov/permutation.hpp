#pragma once

#include "thetacov/partitions.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace thetacov {

// Hard ceiling on the degree of anything we enumerate elementwise. Sign
// vectors and xi words live in 64-bit masks, so the group theory itself
// would allow more, but tuple enumeration is super-exponential long before
// that matters.
inline constexpr int kMaxDegree = 16;

// Permutation of {0..d-1}. Composition acts on the left: (g*h)(x) = g(h(x)).
struct Perm {
  int8_t d = 0;
  std::array<int8_t, kMaxDegree> img{};

  static Perm identity(int d);

  int deg() const { return d; }
  int operator()(int i) const { return img[static_cast<size_t>(i)]; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool operator==(const Perm& o) const;
  bool is_identity() const;

  // Cycles ordered by smallest element, each cycle starting at its smallest.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;

  // Image of a subset given as a bit mask.
  uint64_t apply_mask(uint64_t mask) const;
  // Number of pairs i < j inside mask with images out of order, i.e. the
  // inversions of the restriction of this permutation to mask.
  int inversions_on(uint64_t mask) const;
};

// All of S(d) in lexicographic order of image arrays.
std::vector<Perm> all_permutations(int d);

// All permutations of cycle type mu_hat (|mu_hat| = d), lexicographic.
std::vector<Perm> permutations_of_type(int d, const Partition& mu_hat);

// A fixed representative with consecutive blocks as cycles.
Perm representative_of_type(int d, const Partition& mu_hat);

} // namespace thetacov

#pragma once

#include "thetacov/numbers.hpp"

#include <vector>

namespace thetacov {

// Parts in weakly decreasing order, each >= 1. The empty vector is the
// empty partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
bool is_strict(const Partition& p);
bool all_parts_odd(const Partition& p);

int size_of(const Partition& p);  // |p|, the sum of parts
int length_of(const Partition& p);

// All partitions of n, lexicographically descending: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Partitions of n into distinct parts, same order.
std::vector<Partition> strict_partitions(int n);

// Partitions into odd parts with size <= bound, grouped by size ascending,
// lexicographically descending within a size. Includes the empty partition.
std::vector<Partition> odd_partitions_up_to(int bound);

// mu with 1s appended until the size reaches d.
Partition pad_with_ones(const Partition& mu, int d);

// Parts equal to 1 removed.
Partition strip_ones(const Partition& mu);

// Order of the centralizer of a permutation of cycle type mu, prod k^{r_k} r_k!.
Integer z_mu(const Partition& mu);

// Number of permutations in S(d) of cycle type mu_hat, |mu_hat| = d.
Integer class_size(const Partition& mu_hat, int d);

// Ramification data for coverings of the torus: a degree and a list of
// branch point profiles. Profiles are stored reduced (fixed points dropped)
// and must have all parts odd. Empty profiles disappear entirely, so r is
// the number of genuinely ramified branch points.
struct RamificationData {
  int degree = 0;
  std::vector<Partition> profiles;

  RamificationData(int d, std::vector<Partition> raw_profiles);
};

// 2 - 2g of the covering surface by Riemann-Hurwitz, sum of (length - size)
// over reduced profiles. Degree independent. Throws InvalidRamification on
// an even part.
int euler_characteristic(const std::vector<Partition>& profiles);
int euler_characteristic(const RamificationData& M);

// sum of |mu| + length(mu) over reduced profiles, the weight of the
// associated generating series.
int weight(const std::vector<Partition>& profiles);

} // namespace thetacov

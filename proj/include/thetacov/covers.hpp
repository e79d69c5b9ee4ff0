#pragma once

#include "thetacov/partitions.hpp"
#include "thetacov/permutation.hpp"

#include <functional>
#include <vector>

namespace thetacov {

// Monodromy of a degree d covering of the torus branched over r points:
// a pair (a, b) for the handle and one permutation per branch point with
// the prescribed cycle type, subject to [a,b] = g_1 ... g_r. The group
// generated need not be transitive; covers here may be disconnected.
struct MonodromyTuple {
  int d = 0;
  Perm a, b;
  std::vector<Perm> branch;
};

struct ComponentData {
  std::vector<int> support;            // sheet indices, ascending
  MonodromyTuple restricted;           // relabeled to {0..d_c-1}
  int genus = 0;
  std::vector<Partition> reduced_profiles;
};

struct EnumOptions {
  int max_d = 8;
  int max_r = 2;
  bool connected_only = false;
  int jobs = 1;
};

// Visit every monodromy tuple for M, in a fixed deterministic order. The
// last branch permutation is solved from the relation rather than
// enumerated. d = 0 yields the single empty tuple.
void enumerate_tuples(const RamificationData& M,
                      const std::function<void(const MonodromyTuple&)>& visit,
                      const EnumOptions& opt = {});

long long count_tuples(const RamificationData& M, const EnumOptions& opt = {});

// #tuples / d!, the automorphism-weighted number of covers.
Rational mass(const RamificationData& M, const EnumOptions& opt = {});

// The same mass through the character sum over partitions lambda of d of
// prod_i |C_{mu_i}| chi^lambda(mu_i) / dim(lambda), no enumeration involved.
Rational mass_via_burnside(const RamificationData& M);

std::vector<ComponentData> components(const MonodromyTuple& t);
bool is_connected(const MonodromyTuple& t);

// Helper shared by the parallel drivers: deterministic chunked reduce over
// [0, n). Each job folds its own accumulator; partials merge in index order.
void parallel_chunks(long long n, int jobs,
                     const std::function<void(long long, long long, int)>& run);

namespace detail {
// Visit every branch completion of a fixed handle pair: the leading r-1
// branch permutations run over the supplied classes, the last is solved
// from the relation and kept when its type matches last_type.
void visit_handle_tuples(const Perm& a, const Perm& b,
                         const std::vector<std::vector<Perm>>& leading_classes,
                         const Partition& last_type, int r,
                         const std::function<void(MonodromyTuple&)>& visit);
} // namespace detail

} // namespace thetacov

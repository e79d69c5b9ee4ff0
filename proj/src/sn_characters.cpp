#include "thetacov/sn_characters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace thetacov {

namespace {

// Remove a border strip of length k from every legal position, recursing on
// the remaining parts of mu. Beta-number form: removing a k-strip is moving
// a bead from b to b-k, with sign from the beads jumped over.
long long mn(const Partition& lambda, const Partition& mu, size_t idx,
             std::map<std::pair<Partition, size_t>, long long>& memo) {
  if (lambda.empty()) return 1;
  auto key = std::make_pair(lambda, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int k = mu[idx];
  int L = static_cast<int>(lambda.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);

  long long total = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[i];
    if (b < k) continue;
    int target = b - k;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int c : beta)
      if (c > target && c < b) ++height;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    Partition nl;
    for (int j = 0; j < L; ++j) {
      int part = nb[j] - (L - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    long long sub = mn(nl, mu, idx + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

} // namespace

long long sn_character(const Partition& lambda, const Partition& mu) {
  if (!is_partition(lambda) || !is_partition(mu))
    throw std::invalid_argument("sn_character: bad partition");
  if (size_of(lambda) != size_of(mu))
    throw std::invalid_argument("sn_character: |lambda| != |mu|");
  std::map<std::pair<Partition, size_t>, long long> memo;
  return mn(lambda, mu, 0, memo);
}

Integer sn_dimension(const Partition& lambda) {
  // hook length formula
  int L = length_of(lambda);
  Integer hooks = 1;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int arm = lambda[i] - 1 - j;
      int leg = 0;
      for (int r = i + 1; r < L; ++r)
        if (lambda[r] > j) ++leg;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(size_of(lambda)) / hooks;
}

} // namespace thetacov

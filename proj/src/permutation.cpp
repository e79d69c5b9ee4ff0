#include "thetacov/permutation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace thetacov {

Perm Perm::identity(int d) {
  if (d < 0 || d > kMaxDegree) throw std::invalid_argument("degree out of range");
  Perm p;
  p.d = d;
  for (int i = 0; i < d; ++i) p.img[i] = i;
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  Perm r;
  r.d = d;
  for (int i = 0; i < d; ++i) r.img[i] = img[o.img[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.d = d;
  for (int i = 0; i < d; ++i) r.img[img[i]] = i;
  return r;
}

bool Perm::operator==(const Perm& o) const {
  if (d != o.d) return false;
  for (int i = 0; i < d; ++i)
    if (img[i] != o.img[i]) return false;
  return true;
}

bool Perm::is_identity() const {
  for (int i = 0; i < d; ++i)
    if (img[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < d; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int x = i;
    do {
      seen[x] = true;
      cyc.push_back(x);
      x = img[x];
    } while (x != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

Partition Perm::cycle_type() const {
  Partition t;
  for (const auto& c : cycles()) t.push_back(c.size());
  std::sort(t.rbegin(), t.rend());
  return t;
}

uint64_t Perm::apply_mask(uint64_t mask) const {
  uint64_t out = 0;
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    out |= uint64_t{1} << img[i];
  }
  return out;
}

int Perm::inversions_on(uint64_t mask) const {
  int inv = 0;
  for (uint64_t m = mask; m;) {
    int i = std::countr_zero(m);
    m &= m - 1;
    for (uint64_t n = m; n;) {
      int j = std::countr_zero(n);
      n &= n - 1;
      if (img[i] > img[j]) ++inv;
    }
  }
  return inv;
}

std::vector<Perm> all_permutations(int d) {
  if (d < 0 || d > kMaxDegree) throw std::invalid_argument("degree out of range");
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = i;
  std::vector<Perm> out;
  do {
    Perm p;
    p.d = d;
    for (int i = 0; i < d; ++i) p.img[i] = v[i];
    out.push_back(p);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Perm> permutations_of_type(int d, const Partition& mu_hat) {
  if (size_of(mu_hat) != d)
    throw std::invalid_argument("permutations_of_type: |mu| must equal d");
  Partition want = mu_hat;
  std::sort(want.rbegin(), want.rend());
  std::vector<Perm> out;
  for (const Perm& p : all_permutations(d))
    if (p.cycle_type() == want) out.push_back(p);
  return out;
}

Perm representative_of_type(int d, const Partition& mu_hat) {
  if (size_of(mu_hat) != d)
    throw std::invalid_argument("representative_of_type: |mu| must equal d");
  Perm p = Perm::identity(d);
  int base = 0;
  for (int k : mu_hat) {
    for (int i = 0; i < k; ++i) p.img[base + i] = base + (i + 1) % k;
    base += k;
  }
  return p;
}

} // namespace thetacov

#include "thetacov/partitions.hpp"
#include "thetacov/errors.hpp"

#include <algorithm>
#include <numeric>

namespace thetacov {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool is_strict(const Partition& p) {
  if (!is_partition(p)) return false;
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  return true;
}

bool all_parts_odd(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int k) { return k % 2 == 1; });
}

int size_of(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

int length_of(const Partition& p) { return static_cast<int>(p.size()); }

namespace {

void gen_parts(int n, int maxpart, Partition& cur, std::vector<Partition>& out,
               bool strict) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  int top = std::min(n, maxpart);
  for (int k = top; k >= 1; --k) {
    cur.push_back(k);
    gen_parts(n - k, strict ? k - 1 : k, cur, out, strict);
    cur.pop_back();
  }
}

void gen_odd(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  int top = std::min(n, maxpart);
  if (top % 2 == 0) --top;
  for (int k = top; k >= 1; k -= 2) {
    cur.push_back(k);
    gen_odd(n - k, k, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  Partition cur;
  gen_parts(n, n, cur, out, false);
  return out;
}

std::vector<Partition> strict_partitions(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  Partition cur;
  gen_parts(n, n, cur, out, true);
  return out;
}

std::vector<Partition> odd_partitions_up_to(int bound) {
  std::vector<Partition> out;
  for (int n = 0; n <= bound; ++n) {
    Partition cur;
    gen_odd(n, n, cur, out);
  }
  return out;
}

Partition pad_with_ones(const Partition& mu, int d) {
  int s = size_of(mu);
  if (s > d) throw InvalidRamification("profile larger than the degree");
  Partition out = mu;
  out.insert(out.end(), d - s, 1);
  return out;
}

Partition strip_ones(const Partition& mu) {
  Partition out;
  for (int k : mu)
    if (k != 1) out.push_back(k);
  return out;
}

Integer z_mu(const Partition& mu) {
  Integer z = 1;
  int run = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    z *= mu[i];
    ++run;
    if (i + 1 == mu.size() || mu[i + 1] != mu[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

Integer class_size(const Partition& mu_hat, int d) {
  if (size_of(mu_hat) != d)
    throw std::invalid_argument("class_size: |mu| must equal d");
  return factorial(d) / z_mu(mu_hat);
}

RamificationData::RamificationData(int d, std::vector<Partition> raw_profiles)
    : degree(d) {
  if (d < 0) throw InvalidRamification("negative degree");
  for (auto& mu : raw_profiles) {
    if (!is_partition(mu)) throw InvalidRamification("profile is not a partition");
    if (!all_parts_odd(mu)) throw InvalidRamification("profile has an even part");
    if (size_of(mu) > d) throw InvalidRamification("profile larger than the degree");
    Partition red = strip_ones(mu);
    if (!red.empty()) profiles.push_back(std::move(red));
  }
}

int euler_characteristic(const std::vector<Partition>& profiles) {
  int chi = 0;
  for (const auto& mu : profiles) {
    if (!all_parts_odd(mu)) throw InvalidRamification("profile has an even part");
    Partition red = strip_ones(mu);
    chi += length_of(red) - size_of(red);
  }
  return chi;
}

int euler_characteristic(const RamificationData& M) {
  return euler_characteristic(M.profiles);
}

int weight(const std::vector<Partition>& profiles) {
  int w = 0;
  for (const auto& mu : profiles) {
    Partition red = strip_ones(mu);
    w += size_of(red) + length_of(red);
  }
  return w;
}

} // namespace thetacov

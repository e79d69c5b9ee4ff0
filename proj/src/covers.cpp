#include "thetacov/covers.hpp"
#include "thetacov/errors.hpp"
#include "thetacov/sn_characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace thetacov {

namespace {

void check_bounds(const RamificationData& M, const EnumOptions& opt) {
  if (M.degree > opt.max_d)
    throw ResourceLimit("degree exceeds the enumeration bound");
  if (static_cast<int>(M.profiles.size()) > opt.max_r)
    throw ResourceLimit("more branch points than the enumeration bound");
}

} // namespace

void parallel_chunks(long long n, int jobs,
                     const std::function<void(long long, long long, int)>& run) {
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(std::min<long long>(jobs, std::max<long long>(n, 1)));
  if (jobs == 1) {
    run(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  long long step = (n + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    long long lo = t * step, hi = std::min(n, lo + step);
    if (lo >= hi) break;
    pool.emplace_back(run, lo, hi, t);
  }
  for (auto& th : pool) th.join();
}

namespace detail {

void visit_handle_tuples(const Perm& a, const Perm& b,
                         const std::vector<std::vector<Perm>>& leading_classes,
                         const Partition& last_type, int r,
                         const std::function<void(MonodromyTuple&)>& visit) {
  MonodromyTuple t;
  t.d = a.deg();
  t.a = a;
  t.b = b;
  t.branch.resize(r);
  Perm c = a * b * a.inverse() * b.inverse();
  if (r == 0) {
    if (c.is_identity()) visit(t);
    return;
  }
  // residual = (g_1 ... g_k)^{-1} [a,b]; the remaining branch permutations
  // must multiply to it
  std::function<void(int, const Perm&)> rec = [&](int k, const Perm& residual) {
    if (k == r - 1) {
      if (residual.cycle_type() != last_type) return;
      t.branch[r - 1] = residual;
      visit(t);
      return;
    }
    for (const Perm& g : leading_classes[k]) {
      t.branch[k] = g;
      rec(k + 1, g.inverse() * residual);
    }
  };
  rec(0, c);
}

} // namespace detail

void enumerate_tuples(const RamificationData& M,
                      const std::function<void(const MonodromyTuple&)>& visit,
                      const EnumOptions& opt) {
  check_bounds(M, opt);
  int d = M.degree;
  int r = static_cast<int>(M.profiles.size());

  if (d == 0) {
    MonodromyTuple t;
    t.d = 0;
    t.a = t.b = Perm::identity(0);
    t.branch.assign(r, Perm::identity(0));
    visit(t);
    return;
  }

  std::vector<Partition> padded;
  padded.reserve(r);
  for (const auto& mu : M.profiles) padded.push_back(pad_with_ones(mu, d));

  std::vector<Perm> sd = all_permutations(d);
  std::vector<std::vector<Perm>> cls;
  for (int i = 0; i + 1 < r; ++i) cls.push_back(permutations_of_type(d, padded[i]));
  Partition last = r > 0 ? padded[r - 1] : Partition{};

  auto emit = [&](MonodromyTuple& t) {
    if (!opt.connected_only || is_connected(t)) visit(t);
  };
  for (const Perm& a : sd)
    for (const Perm& b : sd) detail::visit_handle_tuples(a, b, cls, last, r, emit);
}

long long count_tuples(const RamificationData& M, const EnumOptions& opt) {
  long long n = 0;
  enumerate_tuples(M, [&](const MonodromyTuple&) { ++n; }, opt);
  return n;
}

Rational mass(const RamificationData& M, const EnumOptions& opt) {
  Rational m(static_cast<long>(count_tuples(M, opt)));
  m /= Rational(factorial(M.degree));
  m.canonicalize();
  return m;
}

Rational mass_via_burnside(const RamificationData& M) {
  if (M.degree > 10) throw ResourceLimit("burnside degree bound is 10");
  int d = M.degree;
  Rational total(0);
  for (const Partition& lam : partitions_of(d)) {
    Rational term(1);
    Integer dim = sn_dimension(lam);
    for (const auto& mu : M.profiles) {
      Partition mh = pad_with_ones(mu, d);
      Rational f(class_size(mh, d) * static_cast<long>(sn_character(lam, mh)));
      f /= Rational(dim);
      term *= f;
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

void unite_orbit(DisjointSets& ds, const Perm& g) {
  for (int i = 0; i < g.deg(); ++i) ds.unite(i, g(i));
}

} // namespace

std::vector<ComponentData> components(const MonodromyTuple& t) {
  std::vector<ComponentData> out;
  if (t.d == 0) return out;
  DisjointSets ds(t.d);
  unite_orbit(ds, t.a);
  unite_orbit(ds, t.b);
  for (const auto& g : t.branch) unite_orbit(ds, g);

  std::vector<std::vector<int>> groups(t.d);
  for (int i = 0; i < t.d; ++i) groups[ds.find(i)].push_back(i);

  for (int root = 0; root < t.d; ++root) {
    const auto& sup = groups[root];
    if (sup.empty()) continue;
    ComponentData c;
    c.support = sup;
    int dc = static_cast<int>(sup.size());
    std::array<int, kMaxDegree> pos{};
    for (int i = 0; i < dc; ++i) pos[sup[i]] = i;
    auto restrict_perm = [&](const Perm& g) {
      Perm r = Perm::identity(dc);
      for (int i = 0; i < dc; ++i) r.img[i] = pos[g(sup[i])];
      return r;
    };
    c.restricted.d = dc;
    c.restricted.a = restrict_perm(t.a);
    c.restricted.b = restrict_perm(t.b);
    int cycles_total = 0;
    for (const auto& g : t.branch) {
      Perm rg = restrict_perm(g);
      cycles_total += static_cast<int>(rg.cycles().size());
      Partition red = strip_ones(rg.cycle_type());
      if (!red.empty()) c.reduced_profiles.push_back(red);
      c.restricted.branch.push_back(rg);
    }
    // Riemann-Hurwitz over the torus: 2 - 2g = sum (cycles - d_c) per branch
    int twice = static_cast<int>(t.branch.size()) * dc - cycles_total;
    if (twice % 2 != 0)
      throw std::logic_error("odd branching datum slipped past validation");
    c.genus = 1 + twice / 2;
    out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const MonodromyTuple& t) {
  if (t.d == 0) return false;
  DisjointSets ds(t.d);
  unite_orbit(ds, t.a);
  unite_orbit(ds, t.b);
  for (const auto& g : t.branch) unite_orbit(ds, g);
  int root = ds.find(0);
  for (int i = 1; i < t.d; ++i)
    if (ds.find(i) != root) return false;
  return true;
}

} // namespace thetacov

#include "thetacov/qseries.hpp"
#include "thetacov/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace thetacov {

namespace {

int common_order(const PowerSeries& x, const PowerSeries& y) {
  return std::min(x.order(), y.order());
}

} // namespace

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries r(common_order(*this, o));
  for (int n = 0; n <= r.order(); ++n) {
    r[n] = a[n] + o.a[n];
    r[n].canonicalize();
  }
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  PowerSeries r(common_order(*this, o));
  for (int n = 0; n <= r.order(); ++n) {
    r[n] = a[n] - o.a[n];
    r[n].canonicalize();
  }
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  PowerSeries r(common_order(*this, o));
  for (int i = 0; i <= r.order(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (o.a[j] == 0) continue;
      r[i + j] += a[i] * o.a[j];
    }
  }
  for (int n = 0; n <= r.order(); ++n) r[n].canonicalize();
  return r;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
  PowerSeries r(order());
  for (int n = 0; n <= order(); ++n) {
    r[n] = a[n] * c;
    r[n].canonicalize();
  }
  return r;
}

PowerSeries PowerSeries::inverse() const {
  if (a[0] == 0) throw std::invalid_argument("series has no inverse");
  PowerSeries r(order());
  r[0] = 1 / a[0];
  for (int n = 1; n <= order(); ++n) {
    Rational s(0);
    for (int k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
    r[n].canonicalize();
  }
  return r;
}

PowerSeries PowerSeries::derivative_qdq() const {
  PowerSeries r(order());
  for (int n = 0; n <= order(); ++n) r[n] = a[n] * n;
  return r;
}

bool PowerSeries::operator==(const PowerSeries& o) const {
  if (order() != o.order()) return false;
  for (int n = 0; n <= order(); ++n)
    if (!(a[n] == o.a[n])) return false;
  return true;
}

PowerSeries eisenstein(int k, int N) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("eisenstein wants even k >= 2");
  PowerSeries e(N);
  e[0] = zeta_neg(k - 1) / 2;
  e[0].canonicalize();
  for (int n = 1; n <= N; ++n) {
    Integer s = 0;
    for (int m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m),
                    static_cast<unsigned long>(k - 1));
      s += p;
    }
    e[n] = Rational(s);
  }
  return e;
}

PowerSeries euler_function(int N) {
  // Euler's pentagonal expansion; terms q^{j(3j +- 1)/2} with sign (-1)^j
  PowerSeries p(N);
  p[0] = 1;
  for (int j = 1;; ++j) {
    long g1 = static_cast<long>(j) * (3L * j - 1) / 2;
    long g2 = static_cast<long>(j) * (3L * j + 1) / 2;
    if (g1 > N && g2 > N) break;
    Rational sgn(j % 2 == 1 ? -1 : 1);
    if (g1 <= N) p[static_cast<int>(g1)] += sgn;
    if (g2 <= N) p[static_cast<int>(g2)] += sgn;
  }
  return p;
}

PowerSeries strict_signed_sum(int N) {
  PowerSeries s(N);
  for (int n = 0; n <= N; ++n)
    for (const auto& lam : strict_partitions(n))
      s[n] += Rational(length_of(lam) % 2 == 0 ? 1 : -1);
  return s;
}

PowerSeries bracket(const PPoly& f, int N) {
  PowerSeries s(N);
  for (int n = 0; n <= N; ++n) {
    for (const auto& lam : strict_partitions(n)) {
      Rational v = f.eval(lam);
      s[n] += length_of(lam) % 2 == 0 ? v : -v;
    }
    s[n].canonicalize();
  }
  return s * euler_function(N).inverse();
}

PowerSeries f_m_series(const std::vector<Partition>& profiles, int N) {
  int chi = euler_characteristic(profiles);
  PowerSeries s(N);
  for (int n = 0; n <= N; ++n) {
    for (const auto& lam : strict_partitions(n)) {
      Rational v(1);
      for (const auto& mu : profiles) v *= central_character(mu, lam);
      s[n] += length_of(lam) % 2 == 0 ? v : -v;
    }
    s[n].canonicalize();
  }
  return (s * euler_function(N).inverse()).scaled(pow2(chi / 2));
}

Rational signed_mass_via_characters(const std::vector<Partition>& profiles, int d) {
  int chi = euler_characteristic(profiles);
  Rational s(0);
  for (const auto& lam : strict_partitions(d)) {
    Rational v(1);
    for (const auto& mu : profiles) v *= central_character(mu, lam);
    s += length_of(lam) % 2 == 0 ? v : -v;
  }
  s *= pow2(chi / 2);
  s.canonicalize();
  return s;
}

PowerSeries QuasimodularForm::expand(int N) const {
  PowerSeries e2 = eisenstein(2, N), e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  PowerSeries total(N);
  for (const auto& [m, c] : coeff) {
    PowerSeries t(N);
    t[0] = 1;
    for (int i = 0; i < m[0]; ++i) t = t * e2;
    for (int i = 0; i < m[1]; ++i) t = t * e4;
    for (int i = 0; i < m[2]; ++i) t = t * e6;
    total = total + t.scaled(c);
  }
  return total;
}

std::string QuasimodularForm::monomial_name(const std::array<int, 3>& m) {
  static const char* base[3] = {"E2", "E4", "E6"};
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += base[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::array<int, 3>> qm_basis(int w) {
  std::vector<std::array<int, 3>> out;
  for (int wt = 0; wt <= w; wt += 2)
    for (int a = 0; 2 * a <= wt; ++a)
      for (int b = 0; 2 * a + 4 * b <= wt; ++b) {
        int rem = wt - 2 * a - 4 * b;
        if (rem % 6 == 0 && 2 * a + 4 * b + rem == wt) {
          int c = rem / 6;
          out.push_back({a, b, c});
        }
      }
  return out;
}

QuasimodularForm qm_fit(const PowerSeries& s, int w, int slack) {
  if (w < 0 || w % 2 != 0)
    throw std::invalid_argument("weight bound must be even and >= 0");
  std::vector<std::array<int, 3>> basis = qm_basis(w);
  int dim = static_cast<int>(basis.size());
  if (s.order() + 1 < dim + slack)
    throw ResourceLimit("series too short for a trustworthy fit");

  int N = s.order();
  std::vector<PowerSeries> cols;
  {
    QuasimodularForm one;
    for (const auto& m : basis) {
      one.coeff.clear();
      one.coeff[m] = 1;
      cols.push_back(one.expand(N));
    }
  }

  // eliminate with pivots on the earliest q-power available
  std::vector<std::vector<Rational>> rows(N + 1, std::vector<Rational>(dim + 1));
  for (int n = 0; n <= N; ++n) {
    for (int j = 0; j < dim; ++j) rows[n][j] = cols[j][n];
    rows[n][dim] = s[n];
  }
  std::vector<int> pivot_of(dim, -1);
  int next = 0;
  for (int j = 0; j < dim && next <= N; ++j) {
    int p = next;
    while (p <= N && rows[p][j] == 0) ++p;
    if (p > N) continue;
    std::swap(rows[p], rows[next]);
    for (int i = 0; i <= N; ++i) {
      if (i == next || rows[i][j] == 0) continue;
      Rational f = rows[i][j] / rows[next][j];
      for (int k = j; k <= dim; ++k) rows[i][k] -= f * rows[next][k];
    }
    pivot_of[j] = next;
    ++next;
  }

  QuasimodularForm out;
  out.weight = w;
  std::vector<Rational> x(dim, Rational(0));
  for (int j = 0; j < dim; ++j) {
    if (pivot_of[j] < 0)
      throw std::logic_error("Eisenstein monomials came out dependent");
    x[j] = rows[pivot_of[j]][dim] / rows[pivot_of[j]][j];
    x[j].canonicalize();
    if (!(x[j] == 0)) out.coeff[basis[j]] = x[j];
  }

  // residual check against every supplied coefficient; report the first
  // failing power in the original indexing
  PowerSeries fit = out.expand(N);
  for (int n = 0; n <= N; ++n)
    if (!(fit[n] == s[n])) throw NotQuasimodular(n);
  return out;
}

namespace {

void set_partitions_rec(size_t i, size_t n, std::vector<std::vector<size_t>>& cur,
                        const std::function<void(const std::vector<std::vector<size_t>>&)>& emit) {
  if (i == n) {
    emit(cur);
    return;
  }
  for (auto& block : cur) {
    block.push_back(i);
    set_partitions_rec(i + 1, n, cur, emit);
    block.pop_back();
  }
  cur.push_back({i});
  set_partitions_rec(i + 1, n, cur, emit);
  cur.pop_back();
}

} // namespace

PowerSeries joint_cumulant(const Partition& mu, int N) {
  if (mu.empty()) throw std::invalid_argument("cumulant of an empty index set");
  size_t n = mu.size();
  std::map<Partition, PowerSeries> moments;
  auto moment = [&](const Partition& nu) -> const PowerSeries& {
    auto it = moments.find(nu);
    if (it != moments.end()) return it->second;
    PPoly f = PPoly::constant(Rational(1));
    for (int k : nu) f = f * PPoly::pk(k);
    return moments.emplace(nu, bracket(f, N)).first->second;
  };

  PowerSeries total(N);
  std::vector<std::vector<size_t>> cur;
  set_partitions_rec(0, n, cur, [&](const std::vector<std::vector<size_t>>& pi) {
    PowerSeries prod(N);
    prod[0] = 1;
    for (const auto& block : pi) {
      Partition nu;
      for (size_t i : block) nu.push_back(mu[i]);
      std::sort(nu.rbegin(), nu.rend());
      prod = prod * moment(nu);
    }
    long w = 1;
    for (size_t k = 1; k < pi.size(); ++k) w *= static_cast<long>(k);
    Rational coef(w);
    if (pi.size() % 2 == 0) coef = -coef;
    total = total + prod.scaled(coef);
  });
  return total;
}

bool verify_log_identity(const Partition& mu, int N) {
  if (!all_parts_odd(mu) || mu.empty())
    throw InvalidRamification("profile must be nonempty with odd parts");
  int ell = length_of(mu);
  int k = size_of(mu) - ell + 2;
  PowerSeries rhs = eisenstein(k, N).scaled(Rational(-1));
  for (int i = 1; i < ell; ++i) rhs = rhs.derivative_qdq();
  return joint_cumulant(mu, N) == rhs;
}

} // namespace thetacov

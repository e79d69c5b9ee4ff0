#include "thetacov/characters.hpp"
#include "thetacov/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace thetacov {

PPoly PPoly::constant(const Rational& c) {
  PPoly p;
  if (c != 0) p.terms.emplace(Partition{}, c);
  return p;
}

PPoly PPoly::pk(int k) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("p_k wants odd positive k");
  PPoly p;
  p.terms.emplace(Partition{k}, Rational(1));
  return p;
}

PPoly PPoly::operator+(const PPoly& o) const {
  PPoly r = *this;
  for (const auto& [m, c] : o.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) {
      r.terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

PPoly PPoly::operator-(const PPoly& o) const { return *this + o.scaled(Rational(-1)); }

PPoly PPoly::operator*(const PPoly& o) const {
  PPoly r;
  for (const auto& [m1, c1] : terms) {
    for (const auto& [m2, c2] : o.terms) {
      Partition m;
      m.reserve(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(),
                 std::back_inserter(m), std::greater<int>());
      Rational c = c1 * c2;
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        r.terms.emplace(std::move(m), c);
      } else {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  }
  return r;
}

PPoly PPoly::scaled(const Rational& c) const {
  PPoly r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms) r.terms.emplace(m, v * c);
  return r;
}

int PPoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, size_of(m));
  return d;
}

Rational PPoly::coeff(const Partition& mono) const {
  auto it = terms.find(mono);
  return it == terms.end() ? Rational(0) : it->second;
}

Rational PPoly::eval(const Partition& strict_lambda) const {
  Rational total(0);
  for (const auto& [m, c] : terms) {
    Rational v = c;
    for (int k : m) v *= p_eval(k, strict_lambda);
    total += v;
  }
  total.canonicalize();
  return total;
}

Rational p_eval(int k, const Partition& lambda) {
  if (k < 1 || k % 2 == 0)
    throw std::invalid_argument("p_eval wants odd positive k");
  Rational s(0);
  for (int part : lambda) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part),
                  static_cast<unsigned long>(k));
    s += Rational(p);
  }
  s -= zeta_neg(k) / 2;
  s.canonicalize();
  return s;
}

namespace {

std::mutex table_mtx;

// deque keeps earlier rows addressable while new ones are appended; a
// vector would invalidate references held across the unsequenced calls in
// the two-row products
std::deque<PPoly>& q_row_cache() {
  static std::deque<PPoly> rows{PPoly::constant(Rational(1))};
  return rows;
}

// r q_r = 2 sum_{k odd <= r} p_k q_{r-k}, from differentiating the
// generating series.
const PPoly& q_row_locked(int r) {
  auto& rows = q_row_cache();
  while (static_cast<int>(rows.size()) <= r) {
    int m = static_cast<int>(rows.size());
    PPoly acc;
    for (int k = 1; k <= m; k += 2)
      acc = acc + PPoly::pk(k) * rows[m - k];
    rows.push_back(acc.scaled(Rational(2, m)));
  }
  return rows[r];
}

std::map<std::pair<int, int>, PPoly>& two_row_cache() {
  static std::map<std::pair<int, int>, PPoly> c;
  return c;
}

// Q_{(a,b)} = q_a q_b + 2 sum_{i>=1} (-1)^i q_{a+i} q_{b-i}, truncated at
// i = b; Q_{(a,0)} = q_a.
const PPoly& two_row_locked(int a, int b) {
  auto& cache = two_row_cache();
  auto it = cache.find({a, b});
  if (it != cache.end()) return it->second;
  PPoly r;
  if (b == 0) {
    r = q_row_locked(a);
  } else {
    r = q_row_locked(a) * q_row_locked(b);
    for (int i = 1; i <= b; ++i) {
      PPoly t = q_row_locked(a + i) * q_row_locked(b - i);
      r = (i % 2 == 1) ? r - t.scaled(Rational(2)) : r + t.scaled(Rational(2));
    }
  }
  return cache.emplace(std::make_pair(a, b), std::move(r)).first->second;
}

std::map<Partition, PPoly>& pf_cache() {
  static std::map<Partition, PPoly> c;
  return c;
}

// Pfaffian expansion along the first row of the skew matrix M_{ij} =
// Q_{(v_i, v_j)}; v has even length, strictly decreasing, possibly ending
// in a 0 pad.
const PPoly& pfaffian_locked(const Partition& v) {
  auto& cache = pf_cache();
  auto it = cache.find(v);
  if (it != cache.end()) return it->second;
  PPoly r;
  if (v.empty()) {
    r = PPoly::constant(Rational(1));
  } else {
    for (size_t j = 1; j < v.size(); ++j) {
      Partition rest;
      for (size_t i = 1; i < v.size(); ++i)
        if (i != j) rest.push_back(v[i]);
      PPoly t = two_row_locked(v[0], v[j]) * pfaffian_locked(rest);
      r = (j % 2 == 1) ? r + t : r - t;
    }
  }
  return cache.emplace(v, std::move(r)).first->second;
}

} // namespace

const PPoly& q_row(int r) {
  if (r < 0) throw std::invalid_argument("q_row wants r >= 0");
  std::lock_guard<std::mutex> lock(table_mtx);
  return q_row_locked(r);
}

const PPoly& q_function(const Partition& strict_lambda) {
  if (!is_strict(strict_lambda))
    throw std::invalid_argument("q_function wants a strict partition");
  if (size_of(strict_lambda) > 32)
    throw ResourceLimit("q_function size bound is 32");
  std::lock_guard<std::mutex> lock(table_mtx);
  Partition v = strict_lambda;
  if (v.size() % 2 == 1) v.push_back(0);
  return pfaffian_locked(v);
}

Rational central_character(const Partition& mu_reduced, const Partition& lambda) {
  if (!all_parts_odd(mu_reduced))
    throw InvalidRamification("profile has an even part");
  if (!is_strict(lambda))
    throw std::invalid_argument("central_character wants a strict partition");
  Partition mu = strip_ones(mu_reduced);
  int n = size_of(lambda);
  if (size_of(mu) > n) return Rational(0);
  Partition mu_hat = pad_with_ones(mu, n);
  const PPoly& Q = q_function(lambda);
  Rational num = Q.coeff(mu_hat);
  Rational den = Q.coeff(Partition(n, 1));
  // the p_{1^n} coefficient of Q_lambda is positive, so den never vanishes
  Rational f = pow2(n - length_of(mu_hat)) * num / den;
  f.canonicalize();
  return f;
}

PPoly interpolate_f_as_polynomial(const Partition& mu_reduced, int margin) {
  if (!all_parts_odd(mu_reduced))
    throw InvalidRamification("profile has an even part");
  Partition mu = strip_ones(mu_reduced);
  int w = size_of(mu);
  if (w > 9) throw ResourceLimit("interpolation size bound is 9");
  if (margin < 1) throw std::invalid_argument("margin must be positive");

  std::vector<Partition> basis = odd_partitions_up_to(w);
  size_t cols = basis.size();

  std::vector<Partition> samples;
  for (int n = 0; n <= w + margin; ++n)
    for (const auto& lam : strict_partitions(n)) samples.push_back(lam);

  // rows: sum_nu x_nu p_nu(lambda) = f_mu(lambda)
  std::vector<std::vector<Rational>> rows;
  for (const auto& lam : samples) {
    std::vector<Rational> row(cols + 1);
    for (size_t j = 0; j < cols; ++j) {
      Rational v(1);
      for (int k : basis[j]) v *= p_eval(k, lam);
      row[j] = v;
    }
    row[cols] = central_character(mu, lam);
    rows.push_back(std::move(row));
  }

  // exact Gaussian elimination, pivoting on the earliest usable sample
  std::vector<size_t> pivot_row(cols, SIZE_MAX);
  size_t next = 0;
  for (size_t j = 0; j < cols && next < rows.size(); ++j) {
    size_t p = next;
    while (p < rows.size() && rows[p][j] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][j] == 0) continue;
      Rational f = rows[i][j] / rows[next][j];
      for (size_t k = j; k <= cols; ++k) rows[i][k] -= f * rows[next][k];
    }
    pivot_row[j] = next;
    ++next;
  }

  std::vector<Rational> x(cols, Rational(0));
  for (size_t j = 0; j < cols; ++j) {
    if (pivot_row[j] == SIZE_MAX)
      throw PolynomialityFailure("sample set does not determine the coefficients");
    x[j] = rows[pivot_row[j]][cols] / rows[pivot_row[j]][j];
    x[j].canonicalize();
  }
  for (size_t i = next; i < rows.size(); ++i)
    if (rows[i][cols] != 0)
      throw PolynomialityFailure("values are not polynomial in the p_k");

  PPoly out;
  for (size_t j = 0; j < cols; ++j)
    if (x[j] != 0) out.terms.emplace(basis[j], x[j]);

  // cross-checks: residual on every sample, and the top term is exactly
  // p_mu / z_mu with nothing else in top degree
  for (const auto& lam : samples)
    if (out.eval(lam) != central_character(mu, lam))
      throw PolynomialityFailure("interpolant fails a residual check");
  Rational lead = out.coeff(mu);
  Rational want = Rational(1) / Rational(z_mu(mu));
  want.canonicalize();
  if (lead != want)
    throw PolynomialityFailure("leading coefficient is not 1/z_mu");
  for (const auto& [m, c] : out.terms)
    if (size_of(m) == w && m != mu)
      throw PolynomialityFailure("stray top-degree monomial in interpolant");
  return out;
}

} // namespace thetacov

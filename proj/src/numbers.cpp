#include "thetacov/numbers.hpp"
#include "thetacov/errors.hpp"

#include <mutex>
#include <vector>

namespace thetacov {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(1, p);
  r.canonicalize();
  return r;
}

Rational bernoulli(int n) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Rational s(0);
    for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
    s /= Rational(-(m + 1));
    s.canonicalize();
    cache.push_back(s);
  }
  return cache[n];
}

Rational zeta_neg(int n) {
  if (n < 0) throw std::invalid_argument("zeta_neg wants n >= 0");
  Rational r = bernoulli(n + 1) / Rational(n + 1);
  if (n % 2 == 1) r = -r;
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

} // namespace thetacov

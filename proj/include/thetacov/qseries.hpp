#pragma once

#include "thetacov/characters.hpp"
#include "thetacov/partitions.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace thetacov {

// q-expansion truncated at a fixed order, exact rational coefficients.
struct PowerSeries {
  std::vector<Rational> a;  // coefficients of q^0 .. q^N

  PowerSeries() : a(1, Rational(0)) {}
  explicit PowerSeries(int N) : a(N + 1, Rational(0)) {}

  int order() const { return static_cast<int>(a.size()) - 1; }
  const Rational& operator[](int n) const { return a[n]; }
  Rational& operator[](int n) { return a[n]; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scaled(const Rational& c) const;
  PowerSeries inverse() const;  // needs an invertible constant term
  PowerSeries derivative_qdq() const;
  bool operator==(const PowerSeries& o) const;
};

// E_k = zeta(1-k)/2 + sum_{n>=1} sigma_{k-1}(n) q^n, k even >= 2.
PowerSeries eisenstein(int k, int N);

// prod_{n>=1} (1 - q^n).
PowerSeries euler_function(int N);

// sum over strict partitions of (-1)^{ell} q^{|lambda|}, the expansion the
// product above must reproduce.
PowerSeries strict_signed_sum(int N);

// <f> = (1/(q)_inf) sum_{strict lambda} (-1)^{ell} f(lambda) q^{|lambda|}.
PowerSeries bracket(const PPoly& f, int N);

// F_M = 2^{chi/2} <prod_i f_{mu_i}>, the generating series whose q^d
// coefficient matches the signed mass after multiplying back by (q)_inf.
PowerSeries f_m_series(const std::vector<Partition>& profiles, int N);

Rational signed_mass_via_characters(const std::vector<Partition>& profiles, int d);

struct QuasimodularForm {
  int weight = 0;
  // exponent triple (a, b, c) for E2^a E4^b E6^c -> coefficient
  std::map<std::array<int, 3>, Rational> coeff;

  PowerSeries expand(int N) const;
  static std::string monomial_name(const std::array<int, 3>& m);
};

// Basis exponents with 2a + 4b + 6c <= w, weight then lex ascending.
std::vector<std::array<int, 3>> qm_basis(int w);

// Exact fit of s as a polynomial in E2, E4, E6 of mixed weight <= w. The
// series must carry at least `slack` coefficients beyond the basis size;
// every available coefficient is residual-checked. NotQuasimodular carries
// the first failing q-power.
QuasimodularForm qm_fit(const PowerSeries& s, int w, int slack = 8);

// Joint cumulant of the brackets of the p_{mu_i} over set partitions of the
// index set, with the Moebius weights (-1)^{|pi|-1} (|pi|-1)!.
PowerSeries joint_cumulant(const Partition& mu, int N);

// The cumulant must equal -(q d/dq)^{ell-1} E_{|mu| - ell + 2} exactly.
bool verify_log_identity(const Partition& mu, int N);

} // namespace thetacov

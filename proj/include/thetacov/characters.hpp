#pragma once

#include "thetacov/partitions.hpp"

#include <map>
#include <vector>

namespace thetacov {

// Polynomial in the odd power sums p_1, p_3, p_5, ... with rational
// coefficients. A monomial is the multiset of its indices, stored as a
// partition with odd parts; the empty partition is the constant monomial.
struct PPoly {
  std::map<Partition, Rational> terms;

  static PPoly constant(const Rational& c);
  static PPoly pk(int k);

  PPoly operator+(const PPoly& o) const;
  PPoly operator-(const PPoly& o) const;
  PPoly operator*(const PPoly& o) const;
  PPoly scaled(const Rational& c) const;
  bool operator==(const PPoly& o) const { return terms == o.terms; }

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // max monomial size, 0 when constant or zero
  Rational coeff(const Partition& mono) const;

  // Value on a strict partition under the supersymmetric specialization of
  // the p_k.
  Rational eval(const Partition& strict_lambda) const;
};

// Supersymmetric odd power sum: sum of lambda_i^k minus zeta(-k)/2, so that
// p_1(empty) = 1/24. k must be odd and positive.
Rational p_eval(int k, const Partition& lambda);

// Coefficient polynomials q_r of the generating series
// sum q_r z^r = exp(2 sum_{k odd} p_k z^k / k).
const PPoly& q_row(int r);

// Schur Q-function of a strict partition, expanded in the odd power sums.
// Two-row case by the classical alternating formula, general case by the
// Pfaffian recursion. Cached. |lambda| is capped at 32.
const PPoly& q_function(const Partition& strict_lambda);

// Central character attached to the strict partition lambda on the class
// with reduced odd profile mu: 2^{|lambda| - ell(mu-hat)} times the ratio of
// the p_{mu-hat} and p_{1^{|lambda|}} coefficients of Q_lambda. Zero when
// |mu| exceeds |lambda|; even parts are rejected.
Rational central_character(const Partition& mu_reduced, const Partition& lambda);

// Expresses the central character map lambda -> value for fixed mu as a
// polynomial in the supersymmetric p_k, by exact interpolation on all
// strict partitions of size up to |mu| + margin, with consistency checks:
// full residual pass, leading term p_mu / z_mu, no other top-degree terms.
PPoly interpolate_f_as_polynomial(const Partition& mu_reduced, int margin = 6);

// Eigenvalues (with multiplicity, ascending) of left multiplication by the
// sum of distinguished lifts of the positive pure-type class of mu-hat,
// acting on the class-sum span of the spin quotient of the group algebra.
// d <= 5.
std::vector<Rational> class_sum_eigenvalues(int d, const Partition& mu_reduced);

} // namespace thetacov

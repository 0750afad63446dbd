#pragma once

#include <vector>

#include "ckdse/algebra.hpp"

namespace ckdse::dse {

// Truncated solution of X = B+(P(X)): homogeneous components a_1..a_N,
// each a linear combination of single trees.
struct DseSolution {
  TruncatedSeries series;
  Mode mode;
  int weight_cap = 0;
  std::vector<AlgebraElement> components;  // components[n-1] = a_n

  const AlgebraElement& a(int n) const;
  // a_1 + ... + a_N.
  AlgebraElement sum() const;
  // 1 + a_1 + ... + a_N.
  AlgebraElement sum_with_unit() const;
};

// Unique truncated solution; memoized per (coefficients, N, mode).
// Requires P(0) = 1 and N >= 1; coefficients beyond the stored order
// count as zero.
const DseSolution& solve(const TruncatedSeries& p, int weight_cap, Mode mode);

// Closed form for the coefficient of a planar tree t in the solution for
// the (alpha,beta) family: alpha^{|t|-1} [t]_beta! / t!.
Rational closed_coeff(const Tree& t, const Rational& alpha, const Rational& beta);

// L_P(x) = B+(P'(X_P) x), truncated at weight_cap.
AlgebraElement lp_apply(const TruncatedSeries& p, const DseSolution& sol,
                        const AlgebraElement& x, int weight_cap);

// Graded components b_0..b_N of (Id - L_P)^{-1}(1), computed as the
// fixed point Y = 1 + L_P(Y).
std::vector<AlgebraElement> lp_inverse_one(const TruncatedSeries& p, int weight_cap,
                                           Mode mode);

// b_n = B-(a_{n+1}(alpha,beta)) for n = 0..N, planar.
std::vector<AlgebraElement> b_generators(const Rational& alpha, const Rational& beta,
                                         int weight_cap);

// Graded components c_0..c_N of Z(1,beta) = Y(1,beta)^gamma with
// gamma = (beta+1)/(beta'+1). Requires beta, beta' != -1.
std::vector<AlgebraElement> c_generators(const Rational& beta,
                                         const Rational& beta_prime, int weight_cap);

}  // namespace ckdse::dse

#pragma once

#include <vector>

#include "ckdse/rational.hpp"

namespace ckdse {

// Formal power series over Q truncated at a fixed order: coefficients
// p_0..p_N. Mixed-order arithmetic truncates to the smaller order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const;
  void set(int k, Rational value);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(int order) const;  // pads with zeros if larger

 private:
  std::vector<Rational> coeffs_;
};

// Equal as formal series: coefficients match, trailing zeros ignored.
bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
inline bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
  return !(a == b);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);

TruncatedSeries derivative(const TruncatedSeries& s);

// Q_k(lambda) = lambda(lambda+1)...(lambda+k-1)/k!, the coefficients of
// (1-h)^{-lambda}. Q_0 = 1.
Rational q_poly(int k, const Rational& lambda);

// Binomial coefficient C(gamma, k) for rational gamma.
Rational binomial(const Rational& gamma, int k);

// Series of (1+h)^gamma up to the given order.
TruncatedSeries binomial_series(const Rational& gamma, int order);

TruncatedSeries exp_series(int order);

// The series solving (1 - alpha*beta*h) P' = alpha P with P(0) = 1:
// p_{n+1} = alpha (1+n*beta)/(n+1) p_n, equivalently p_n = alpha^n [n]_beta!/n!.
TruncatedSeries solve_family(const Rational& alpha, const Rational& beta, int order);

// s^gamma for s with constant term 1. Throws otherwise.
TruncatedSeries binomial_power(const TruncatedSeries& s, const Rational& gamma,
                               int order);

// (p o q)(h) = p(q(h)); requires q(0) = 0.
TruncatedSeries compose(const TruncatedSeries& p, const TruncatedSeries& q,
                        int order);

std::string to_string(const TruncatedSeries& s);

}  // namespace ckdse

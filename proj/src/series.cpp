#include "ckdse/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ckdse {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs p_0");
}

const Rational& TruncatedSeries::operator[](int k) const {
  static const Rational zero(0);
  if (k < 0 || k > order()) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set(int k, Rational value) {
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient index");
  coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries r(order);
  for (int k = 0; k <= order && k <= this->order(); ++k) r.set(k, (*this)[k]);
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::max(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (int k = 0; k <= n; ++k) r.set(k, a[k] + b[k]);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (int k = 0; k <= n; ++k) r.set(k, a[k] - b[k]);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (is_zero(b[j])) continue;
      r.set(i + j, r[i + j] + a[i] * b[j]);
    }
  }
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r.set(k, c * a[k]);
  return r;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  TruncatedSeries r(std::max(0, s.order() - 1));
  for (int k = 1; k <= s.order(); ++k) r.set(k - 1, Rational(k) * s[k]);
  return r;
}

Rational q_poly(int k, const Rational& lambda) {
  if (k < 0) throw std::invalid_argument("q_poly: k must be >= 0");
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= (lambda + i);
  return r / Rational(factorial(static_cast<unsigned long>(k)));
}

Rational binomial(const Rational& gamma, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= (gamma - i);
  return r / Rational(factorial(static_cast<unsigned long>(k)));
}

TruncatedSeries binomial_series(const Rational& gamma, int order) {
  TruncatedSeries r(order);
  for (int k = 0; k <= order; ++k) r.set(k, binomial(gamma, k));
  return r;
}

TruncatedSeries exp_series(int order) {
  TruncatedSeries r(order);
  for (int k = 0; k <= order; ++k)
    r.set(k, Rational(1) / Rational(factorial(static_cast<unsigned long>(k))));
  return r;
}

TruncatedSeries solve_family(const Rational& alpha, const Rational& beta,
                             int order) {
  TruncatedSeries r(order);
  r.set(0, Rational(1));
  for (int n = 0; n < order; ++n)
    r.set(n + 1, alpha * (Rational(1) + Rational(n) * beta) / Rational(n + 1) * r[n]);
  return r;
}

TruncatedSeries binomial_power(const TruncatedSeries& s, const Rational& gamma,
                               int order) {
  if (s[0] != 1)
    throw std::invalid_argument("binomial_power: constant term must be 1");
  // s = 1 - u with val(u) >= 1, and s^gamma = sum Q_k(-gamma) u^k.
  TruncatedSeries u(order);
  for (int k = 1; k <= order; ++k) u.set(k, -s[k]);
  TruncatedSeries r(order);
  TruncatedSeries upow(order);
  upow.set(0, Rational(1));
  for (int k = 0; k <= order; ++k) {
    if (k > 0) upow = upow * u;
    Rational c = q_poly(k, -gamma);
    if (is_zero(c)) continue;
    r = r + c * upow;
  }
  return r;
}

TruncatedSeries compose(const TruncatedSeries& p, const TruncatedSeries& q,
                        int order) {
  if (q[0] != 0)
    throw std::invalid_argument("compose: inner series needs q(0) = 0");
  TruncatedSeries r(order);
  TruncatedSeries qpow(order);
  qpow.set(0, Rational(1));
  for (int k = 0; k <= order; ++k) {
    if (k > 0) qpow = qpow * q.truncated(order);
    if (k <= p.order() && !is_zero(p[k])) r = r + p[k] * qpow;
  }
  return r;
}

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    if (k) out += ",";
    out += to_string(s[k]);
  }
  return out;
}

}  // namespace ckdse

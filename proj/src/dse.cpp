#include "ckdse/dse.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace ckdse::dse {

const AlgebraElement& DseSolution::a(int n) const {
  if (n < 1 || n > weight_cap)
    throw std::out_of_range("DseSolution: component index");
  return components[static_cast<std::size_t>(n - 1)];
}

AlgebraElement DseSolution::sum() const {
  AlgebraElement x(mode);
  for (const AlgebraElement& an : components) x += an;
  return x;
}

AlgebraElement DseSolution::sum_with_unit() const {
  return AlgebraElement::one(mode) + sum();
}

namespace {

DseSolution solve_fresh(const TruncatedSeries& p, int weight_cap, Mode mode) {
  if (p[0] != 1) throw std::invalid_argument("dse::solve: P(0) must be 1");
  if (weight_cap < 1) throw std::invalid_argument("dse::solve: weight cap >= 1");
  DseSolution sol{p.truncated(std::max(p.order(), weight_cap)), mode, weight_cap, {}};
  AlgebraElement x(mode);
  for (int n = 1; n <= weight_cap; ++n) {
    // a_n = B+ of the weight-(n-1) part of P(X), which only needs a_1..a_{n-1}.
    AlgebraElement px = substitute_series(sol.series, x, n - 1);
    AlgebraElement an = b_plus_element(px.graded_component(n - 1));
    x += an;
    sol.components.push_back(std::move(an));
  }
  return sol;
}

struct SolveKey {
  std::vector<Rational> coeffs;
  int cap;
  int mode;
};

struct SolveKeyLess {
  bool operator()(const SolveKey& a, const SolveKey& b) const {
    if (a.cap != b.cap) return a.cap < b.cap;
    if (a.mode != b.mode) return a.mode < b.mode;
    if (a.coeffs.size() != b.coeffs.size())
      return a.coeffs.size() < b.coeffs.size();
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
      if (int c = cmp(a.coeffs[k], b.coeffs[k]); c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace

const DseSolution& solve(const TruncatedSeries& p, int weight_cap, Mode mode) {
  static std::map<SolveKey, DseSolution, SolveKeyLess> cache;
  static std::mutex mu;
  // Normalize the key so trailing zero coefficients do not split entries.
  std::vector<Rational> coeffs = p.coeffs();
  while (coeffs.size() > 1 && is_zero(coeffs.back())) coeffs.pop_back();
  SolveKey key{std::move(coeffs), weight_cap, static_cast<int>(mode)};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  DseSolution sol = solve_fresh(p, weight_cap, mode);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(sol)).first->second;
}

Rational closed_coeff(const Tree& t, const Rational& alpha, const Rational& beta) {
  Rational apow = 1;
  for (int k = 1; k < t.weight(); ++k) apow *= alpha;
  return apow * beta_factorial(t, beta) / Rational(tree_factorial(t));
}

AlgebraElement lp_apply(const TruncatedSeries& p, const DseSolution& sol,
                        const AlgebraElement& x, int weight_cap) {
  if (sol.mode != x.mode())
    throw std::invalid_argument("lp_apply: mode mismatch");
  AlgebraElement pprime = substitute_series(derivative(p), sol.sum(), weight_cap - 1);
  AlgebraElement inner = product(pprime, x).truncated(weight_cap - 1);
  return b_plus_element(inner);
}

std::vector<AlgebraElement> lp_inverse_one(const TruncatedSeries& p, int weight_cap,
                                           Mode mode) {
  const DseSolution& sol = solve(p, std::max(1, weight_cap), mode);
  std::vector<AlgebraElement> b;
  b.push_back(AlgebraElement::one(mode));
  AlgebraElement y = b[0];
  for (int n = 1; n <= weight_cap; ++n) {
    AlgebraElement bn = lp_apply(p, sol, y, n).graded_component(n);
    y += bn;
    b.push_back(std::move(bn));
  }
  return b;
}

std::vector<AlgebraElement> b_generators(const Rational& alpha, const Rational& beta,
                                         int weight_cap) {
  const DseSolution& sol =
      solve(solve_family(alpha, beta, weight_cap + 1), weight_cap + 1, Mode::planar);
  std::vector<AlgebraElement> b;
  for (int n = 0; n <= weight_cap; ++n) b.push_back(b_minus_element(sol.a(n + 1)));
  return b;
}

std::vector<AlgebraElement> c_generators(const Rational& beta,
                                         const Rational& beta_prime, int weight_cap) {
  if (beta_prime == -1)
    throw std::invalid_argument("c_generators: beta' = -1 (exponent undefined)");
  if (beta == -1)
    throw std::invalid_argument("c_generators: beta = -1 (gamma = 0 not invertible)");
  Rational gamma = (beta + 1) / (beta_prime + 1);
  std::vector<AlgebraElement> b = b_generators(Rational(1), beta, weight_cap);
  AlgebraElement y(Mode::planar);
  for (const AlgebraElement& bn : b) y += bn;
  AlgebraElement z = element_power(y, gamma, weight_cap);
  std::vector<AlgebraElement> c;
  for (int n = 0; n <= weight_cap; ++n) c.push_back(z.graded_component(n));
  return c;
}

}  // namespace ckdse::dse

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ckdse/series.hpp"

using namespace ckdse;

namespace {

TruncatedSeries from_ints(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.push_back(Rational(c));
  return TruncatedSeries(std::move(v));
}

// Deterministic small rationals for property checks.
struct Rng {
  std::mt19937 gen{20240311};
  Rational rat(int lo = -4, int hi = 4, int den_max = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, den_max);
    return rational(num(gen), den(gen));
  }
  TruncatedSeries series(int order, bool unit_constant = false) {
    TruncatedSeries s(order);
    s.set(0, unit_constant ? Rational(1) : rat());
    for (int k = 1; k <= order; ++k) s.set(k, rat());
    return s;
  }
};

}  // namespace

TEST_CASE("q_poly") {
  CHECK(q_poly(0, rational(13, 7)) == 1);
  for (int k = 0; k <= 8; ++k) CHECK(q_poly(k, Rational(1)) == 1);
  CHECK(q_poly(2, Rational(3)) == 6);
  CHECK(q_poly(3, rational(1, 2)) == rational(5, 16));
}

TEST_CASE("solve_family closed forms") {
  CHECK(solve_family(Rational(0), rational(7, 2), 6) == from_ints({1}));
  TruncatedSeries exp1 = solve_family(Rational(1), Rational(0), 6);
  for (int n = 0; n <= 6; ++n)
    CHECK(exp1[n] == Rational(1) / Rational(factorial(static_cast<unsigned long>(n))));
  TruncatedSeries geom = solve_family(Rational(1), Rational(1), 6);
  for (int n = 0; n <= 6; ++n) CHECK(geom[n] == 1);
  // p_n = alpha^n [n]_beta!/n! against the recursion route.
  Rational alpha = rational(3, 2), beta = rational(-2, 5);
  TruncatedSeries p = solve_family(alpha, beta, 7);
  Rational apow = 1, bfac = 1;
  for (int n = 0; n <= 7; ++n) {
    CHECK(p[n] == apow * bfac / Rational(factorial(static_cast<unsigned long>(n))));
    apow *= alpha;
    bfac *= Rational(1) + beta * n;
  }
}

TEST_CASE("solve_family satisfies its differential system") {
  Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    Rational alpha = rng.rat(), beta = rng.rat();
    TruncatedSeries p = solve_family(alpha, beta, 8);
    // (n+1) p_{n+1} - alpha beta n p_n = alpha p_n.
    for (int n = 0; n < 8; ++n)
      CHECK(Rational(n + 1) * p[n + 1] - alpha * beta * n * p[n] == alpha * p[n]);
  }
}

TEST_CASE("binomial_power basics") {
  TruncatedSeries one_minus_h = from_ints({1, -1});
  TruncatedSeries inv = binomial_power(one_minus_h, Rational(-1), 3);
  CHECK(inv == from_ints({1, 1, 1, 1}));

  Rational lam = rational(5, 2);
  TruncatedSeries glam = binomial_power(one_minus_h, -lam, 5);
  for (int k = 0; k <= 5; ++k) CHECK(glam[k] == q_poly(k, lam));

  TruncatedSeries sq = from_ints({1, 2, 1});  // (1+h)^2
  CHECK(binomial_power(sq, rational(1, 2), 6) == from_ints({1, 1}));

  CHECK_THROWS_AS(binomial_power(from_ints({2, 1}), Rational(2), 3),
                  std::invalid_argument);
}

TEST_CASE("binomial_power group law and identity exponent") {
  Rng rng;
  for (int trial = 0; trial < 12; ++trial) {
    TruncatedSeries s = rng.series(8, true);
    Rational g = rng.rat(-3, 3, 2), d = rng.rat(-3, 3, 2);
    TruncatedSeries lhs = binomial_power(binomial_power(s, g, 8), d, 8);
    TruncatedSeries rhs = binomial_power(s, g * d, 8);
    CHECK(lhs == rhs);
    CHECK(binomial_power(s, Rational(1), 8) == s);
  }
}

TEST_CASE("compose") {
  TruncatedSeries p = from_ints({1, 2, 3, 4});
  TruncatedSeries h = from_ints({0, 1});
  CHECK(compose(p, h, 3) == p);

  TruncatedSeries geom = from_ints({1, 1, 1, 1});
  TruncatedSeries q = from_ints({0, 1, 1});  // h + h^2
  CHECK(compose(geom, q, 3) == from_ints({1, 1, 2, 3}));

  CHECK_THROWS_AS(compose(geom, from_ints({1, 1}), 3), std::invalid_argument);
}

TEST_CASE("derivative and arithmetic") {
  TruncatedSeries p = from_ints({5, 1, 0, 2});
  CHECK(derivative(p) == from_ints({1, 0, 6}));
  TruncatedSeries q = from_ints({1, 1});
  CHECK(p * q == (q * p).truncated(1));  // min-order truncation
  CHECK((p + q).order() == 1);
  CHECK((p + q)[1] == 2);
}

TEST_CASE("series string form") {
  CHECK(to_string(solve_family(Rational(1), rational(1, 2), 3)) == "1,1,3/4,1/2");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ckdse/tree.hpp"

using namespace ckdse;

namespace {

// Independent counting oracle for rooted trees:
// a(n+1) = (1/n) sum_{k=1..n} (sum_{d|k} d a(d)) a(n-k+1).
std::vector<long> rooted_tree_counts(int max_weight) {
  std::vector<long> a(static_cast<std::size_t>(max_weight) + 1, 0);
  a[1] = 1;
  for (int n = 1; n < max_weight; ++n) {
    long total = 0;
    for (int k = 1; k <= n; ++k) {
      long inner = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) inner += d * a[static_cast<std::size_t>(d)];
      total += inner * a[static_cast<std::size_t>(n - k + 1)];
    }
    REQUIRE(total % n == 0);
    a[static_cast<std::size_t>(n + 1)] = total / n;
  }
  return a;
}

long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace

TEST_CASE("enumeration counts match the counting oracles up to weight 7") {
  std::vector<long> rooted = rooted_tree_counts(7);
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_trees(n, Mode::commutative).size() ==
          static_cast<std::size_t>(rooted[static_cast<std::size_t>(n)]));
    CHECK(enumerate_trees(n, Mode::planar).size() ==
          static_cast<std::size_t>(catalan(n - 1)));
  }
  CHECK(enumerate_trees(0, Mode::planar).empty());
  CHECK(enumerate_trees(6, Mode::commutative).size() == 20);
}

TEST_CASE("enumeration is duplicate-free and canonical") {
  for (Mode mode : {Mode::planar, Mode::commutative}) {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::string> seen;
      for (const Tree& t : enumerate_trees(n, mode)) {
        CHECK(t.weight() == n);
        CHECK(canonicalize(t, mode) == t);
        CHECK(seen.insert(to_text(t)).second);
      }
    }
  }
}

TEST_CASE("canonicalize sorts heavier siblings first") {
  Tree leaf;
  Tree l2 = ladder(2);
  Tree light_first = b_plus(Forest({leaf, l2}));   // planar B+(t1 t2)
  Tree heavy_first = b_plus(Forest({l2, leaf}));   // planar B+(t2 t1)
  CHECK(light_first != heavy_first);
  CHECK(canonicalize(light_first, Mode::commutative) == heavy_first);
  CHECK(canonicalize(heavy_first, Mode::commutative) == heavy_first);
  CHECK(canonicalize(ladder(2), Mode::commutative) == ladder(2));
}

TEST_CASE("canonicalize is idempotent and weight-preserving") {
  for (int n = 1; n <= 6; ++n) {
    for (const Tree& t : enumerate_trees(n, Mode::planar)) {
      Tree c = canonicalize(t, Mode::commutative);
      CHECK(c.weight() == t.weight());
      CHECK(canonicalize(c, Mode::commutative) == c);
      CHECK(canonicalize(t, Mode::planar) == t);
    }
  }
}

TEST_CASE("b_plus and b_minus are mutually inverse") {
  CHECK(b_plus(Forest()) == Tree());
  CHECK(b_plus(Forest({ladder(2), Tree()})).weight() == 4);
  CHECK(b_minus(ladder(4)) == Forest::single(ladder(3)));
  for (Mode mode : {Mode::planar, Mode::commutative}) {
    for (int n = 0; n <= 5; ++n) {
      std::set<std::string> images;
      for (const Forest& f : enumerate_forests(n, mode)) {
        Tree t = b_plus(f);
        CHECK(t.weight() == n + 1);
        CHECK(b_minus(t) == f);
        CHECK(images.insert(to_text(t)).second);
      }
      // Forests of weight n biject with trees of weight n+1.
      CHECK(images.size() == enumerate_trees(n + 1, mode).size());
    }
  }
}

TEST_CASE("tree factorial") {
  Tree leaf;
  CHECK(tree_factorial(leaf) == 1);
  Tree corolla3 = b_plus(Forest({leaf, leaf}));
  CHECK(tree_factorial(corolla3) == 2);
  Tree corolla4 = b_plus(Forest({leaf, leaf, leaf}));
  CHECK(tree_factorial(corolla4) == 6);
  CHECK(tree_factorial(ladder(5)) == 1);
  // Multiplicative over concatenation.
  Forest f({corolla3, corolla4, ladder(2)});
  CHECK(tree_factorial(f) == 12);
}

TEST_CASE("beta factorial") {
  Tree leaf;
  Tree corolla3 = b_plus(Forest({leaf, leaf}));
  CHECK(beta_factorial(corolla3, Rational(1)) == 2);
  CHECK(beta_factorial(corolla3, Rational(-1)) == 0);
  CHECK(beta_factorial(corolla3, rational(1, 2)) == rational(3, 2));
  for (int n = 1; n <= 6; ++n) {
    for (const Forest& f : enumerate_forests(n, Mode::commutative)) {
      CHECK(beta_factorial(f, Rational(0)) == 1);
      CHECK(beta_factorial(f, Rational(1)) == Rational(tree_factorial(f)));
    }
  }
}

TEST_CASE("ladders") {
  CHECK(ladder(1) == Tree());
  CHECK(ladder(2) == b_plus(Forest::single(Tree())));
  CHECK(ladder(4).weight() == 4);
  CHECK(is_ladder(ladder(6)));
  CHECK_FALSE(is_ladder(b_plus(Forest({Tree(), Tree()}))));
  CHECK_THROWS_AS(ladder(0), std::invalid_argument);
  // The unique fertility <= 1 tree of its weight.
  for (int n = 1; n <= 6; ++n) {
    int count = 0;
    for (const Tree& t : enumerate_trees(n, Mode::planar))
      if (is_ladder(t)) ++count;
    CHECK(count == 1);
  }
}

TEST_CASE("decorations order and validation") {
  CHECK_THROWS_AS(Decoration::triple(0, 1, 1), std::invalid_argument);
  Decoration a = Decoration::triple(1, 2, 1);
  Decoration b = Decoration::triple(1, 2, 2);
  CHECK(a < b);
  CHECK(Decoration::unit().is_unit());
  Tree decorated({}, a);
  CHECK(decorated.weight() == 1);
  CHECK(to_text(decorated) == "[1,(2,1)]");
}

TEST_CASE("forest ordering is weight-major and total") {
  std::vector<Forest> fs = enumerate_forests(4, Mode::planar);
  for (std::size_t k = 1; k < fs.size(); ++k)
    CHECK(compare(fs[k - 1], fs[k]) < 0);
  CHECK(Forest().weight() == 0);
  CHECK(compare(Forest(), Forest::single(Tree())) < 0);
}

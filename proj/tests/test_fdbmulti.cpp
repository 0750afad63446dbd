#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ckdse/fdbmulti.hpp"

using namespace ckdse;
using fdb::Word;

namespace {

Tree node(int i, int u1, int u2, std::vector<Tree> children = {}) {
  return Tree(std::move(children), Decoration::triple(i, u1, u2));
}

}  // namespace

TEST_CASE("single letters are scalars") {
  CHECK(fdb::y_element(1, Word{1}, 2) == AlgebraElement::one(Mode::planar));
  CHECK(fdb::y_element(1, Word{2}, 2).is_zero());
  CHECK_THROWS_AS(fdb::y_element(1, Word{3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(fdb::y_element(3, Word{1}, 2), std::invalid_argument);
}

TEST_CASE("two letters give a single decorated node") {
  AlgebraElement y = fdb::y_element(2, Word{1, 2}, 2);
  CHECK(y == AlgebraElement::from_tree(node(2, 1, 2), Mode::planar));
}

TEST_CASE("three letters expand as the two-term letter sum") {
  int d = 2;
  Word w{1, 2, 1};
  for (int i = 1; i <= d; ++i) {
    AlgebraElement expected(Mode::planar);
    for (int a = 1; a <= d; ++a) {
      // root (i,(a,u3)) over (a,(u1,u2)), plus root (i,(u1,a)) over (a,(u2,u3))
      expected.add_term(
          Forest::single(node(i, a, w[2], {node(a, w[0], w[1])})), Rational(1));
      expected.add_term(
          Forest::single(node(i, w[0], a, {node(a, w[1], w[2])})), Rational(1));
    }
    CHECK(fdb::y_element(i, w, d) == expected);
  }
}

TEST_CASE("y elements are homogeneous of weight |w| - 1") {
  for (int d : {1, 2, 3}) {
    for (int len = 2; len <= 4; ++len) {
      Word w;
      for (int k = 0; k < len; ++k) w.push_back(1 + (k % d));
      AlgebraElement y = fdb::y_element(1, w, d);
      REQUIRE_FALSE(y.is_zero());
      CHECK(*y.valuation() == len - 1);
      CHECK(y.max_weight() == len - 1);
    }
  }
}

TEST_CASE("multivariable coproduct law, spot checks") {
  CHECK(fdb::verify_multi_coproduct(1, Word{1, 2}, 2));
  CHECK(fdb::verify_multi_coproduct(1, Word{1, 2, 1}, 2));
  CHECK(fdb::verify_multi_coproduct(2, Word{1, 2, 1}, 2));
  CHECK(fdb::verify_multi_coproduct(1, Word{2, 1, 1, 2}, 2));
  CHECK(fdb::verify_multi_coproduct(1, Word{1, 1, 1, 1}, 1));
  CHECK(fdb::verify_multi_coproduct(2, Word{1, 2, 3}, 3));
}

TEST_CASE("admissibility patterns") {
  CHECK(fdb::is_admissible(node(1, 2, 2)));
  CHECK(fdb::is_admissible(node(1, 1, 2, {node(1, 2, 2)})));   // child carries u1
  CHECK(fdb::is_admissible(node(1, 1, 2, {node(2, 1, 1)})));   // child carries u2
  CHECK_FALSE(fdb::is_admissible(node(1, 1, 2, {node(3, 1, 1)})));
  CHECK(fdb::is_admissible(
      node(1, 1, 2, {node(1, 2, 2), node(2, 1, 1)})));
  CHECK_FALSE(fdb::is_admissible(
      node(1, 1, 2, {node(2, 1, 1), node(1, 2, 2)})));  // pair order matters
  // Fertility 3 is never admissible.
  CHECK_FALSE(fdb::is_admissible(
      node(1, 1, 1, {node(1, 1, 1), node(1, 1, 1), node(1, 1, 1)})));
  CHECK_THROWS_AS(fdb::is_admissible(Tree()), std::invalid_argument);
}

TEST_CASE("word reading rules") {
  CHECK(fdb::words_of(node(1, 2, 3)) == std::set<Word>{Word{2, 3}});

  // Both fertility-1 patterns match when the pair entries coincide.
  Tree ambiguous = node(1, 2, 2, {node(2, 3, 1)});
  CHECK(fdb::words_of(ambiguous) == std::set<Word>{Word{3, 1, 2}, Word{2, 3, 1}});

  // Unambiguous single-pattern cases.
  Tree append = node(1, 2, 3, {node(2, 1, 1)});  // child carries u1: append u2
  CHECK(fdb::words_of(append) == std::set<Word>{Word{1, 1, 3}});
  Tree prepend = node(1, 2, 3, {node(3, 1, 1)});
  CHECK(fdb::words_of(prepend) == std::set<Word>{Word{2, 1, 1}});

  // Fertility 2 concatenates left then right.
  Tree two = node(1, 1, 2, {node(1, 3, 4), node(2, 5, 6)});
  CHECK(fdb::words_of(two) == std::set<Word>{Word{3, 4, 5, 6}});

  CHECK_THROWS_AS(fdb::words_of(node(1, 1, 2, {node(3, 1, 1)})),
                  std::invalid_argument);
}

TEST_CASE("generic reconstruction equals the recursion") {
  CHECK(fdb::generic_reconstruct(1, Word{1, 2}, 3) ==
        fdb::y_element(1, Word{1, 2}, 3));
  for (int i = 1; i <= 3; ++i)
    CHECK(fdb::generic_reconstruct(i, Word{1, 2, 3}, 3) ==
          fdb::y_element(i, Word{1, 2, 3}, 3));
  CHECK(fdb::generic_reconstruct(2, Word{1, 2, 3, 4}, 4) ==
        fdb::y_element(2, Word{1, 2, 3, 4}, 4));
  CHECK_THROWS_AS(fdb::generic_reconstruct(1, Word{1, 1}, 2),
                  std::invalid_argument);
}

TEST_CASE("the four-letter generic element has the five displayed shapes") {
  // For D=4 and w=1234: one fertility-2 shape plus four ladders, summed
  // over the free internal letters.
  AlgebraElement y = fdb::y_element(1, Word{1, 2, 3, 4}, 4);
  int fertility2_terms = 0;
  for (const auto& [f, c] : y.terms()) {
    REQUIRE(f.size() == 1);
    CHECK(c == 1);
    if (f.trees()[0].fertility() == 2) ++fertility2_terms;
  }
  CHECK(fertility2_terms == 16);  // alpha, beta free in (1,(alpha,beta))
}

TEST_CASE("non-generic words specialize the generic expansion") {
  // Y^i_{aaa} over any alphabet: two letter sums with the doubly-matched
  // tree appearing twice.
  for (int d : {1, 2}) {
    for (int a = 1; a <= d; ++a) {
      for (int i = 1; i <= d; ++i) {
        AlgebraElement expected(Mode::planar);
        for (int al = 1; al <= d; ++al) {
          expected.add_term(Forest::single(node(i, al, a, {node(al, a, a)})),
                            Rational(1));
          expected.add_term(Forest::single(node(i, a, al, {node(al, a, a)})),
                            Rational(1));
        }
        AlgebraElement y = fdb::y_element(i, Word{a, a, a}, d);
        CHECK(y == expected);
        CHECK(y.coefficient(node(i, a, a, {node(a, a, a)})) == 2);
      }
    }
  }
}

TEST_CASE("admissible tree enumeration is consistent with filtering") {
  for (int weight = 1; weight <= 3; ++weight) {
    for (const Tree& t : fdb::admissible_trees(weight, 2)) {
      CHECK(t.weight() == weight);
      CHECK(fdb::is_admissible(t));
    }
  }
  CHECK(fdb::admissible_trees(1, 2).size() == 8);  // D^3 single nodes
}

TEST_CASE("D = 1 reduction to the squared-series equation") {
  CHECK(fdb::d1_reduction(4));
  // Weight-2 component explicitly: Y_2 = 2 B+(t1).
  AlgebraElement y2 = fdb::strip_decorations(fdb::y_element(1, Word{1, 1, 1}, 1));
  CHECK(y2 == Rational(2) * AlgebraElement::from_tree(ladder(2), Mode::planar));
}

TEST_CASE("decoration stripping") {
  Tree dec = node(1, 2, 2, {node(2, 1, 1)});
  CHECK(fdb::strip_decorations(dec) == ladder(2));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <tuple>

#include "ckdse/algebra.hpp"

using namespace ckdse;

namespace {

const Tree kLeaf;
const Tree kL2 = ladder(2);
const Tree kL3 = ladder(3);
const Tree kCorolla3 = b_plus(Forest({kLeaf, kLeaf}));

AlgebraElement tree_elem(const Tree& t, Mode mode) {
  return AlgebraElement::from_tree(t, mode);
}

// (Id x B+) on a tensor, for the cocycle identity check.
TensorElement id_otimes_bplus(const TensorElement& x) {
  TensorElement r(x.mode());
  for (const auto& [k, c] : x.terms())
    r.add_term(k.first, Forest::single(b_plus(k.second)), c);
  return r;
}

// Triple tensor expansion keyed by (F,G,H), for coassociativity.
using TripleKey = std::tuple<std::string, std::string, std::string>;
std::map<TripleKey, Rational> expand_left(const TensorElement& x, int cap) {
  std::map<TripleKey, Rational> out;
  for (const auto& [k, c] : x.terms()) {
    TensorElement d = coproduct(AlgebraElement::from_forest(k.first, x.mode()), cap);
    for (const auto& [dk, dc] : d.terms()) {
      TripleKey key{to_text(dk.first), to_text(dk.second), to_text(k.second)};
      out[key] += dc * c;
      if (is_zero(out[key])) out.erase(key);
    }
  }
  return out;
}
std::map<TripleKey, Rational> expand_right(const TensorElement& x, int cap) {
  std::map<TripleKey, Rational> out;
  for (const auto& [k, c] : x.terms()) {
    TensorElement d = coproduct(AlgebraElement::from_forest(k.second, x.mode()), cap);
    for (const auto& [dk, dc] : d.terms()) {
      TripleKey key{to_text(k.first), to_text(dk.first), to_text(dk.second)};
      out[key] += dc * c;
      if (is_zero(out[key])) out.erase(key);
    }
  }
  return out;
}

struct Rng {
  std::mt19937 gen{777214};
  const Forest& pick_forest(Mode mode, int weight) {
    static std::map<std::pair<int, int>, std::vector<Forest>> pools;
    auto& pool = pools[{static_cast<int>(mode), weight}];
    if (pool.empty()) pool = enumerate_forests(weight, mode);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(gen)];
  }
  AlgebraElement element(Mode mode, int max_weight, int terms, int min_weight = 0) {
    std::uniform_int_distribution<int> w(min_weight, max_weight);
    std::uniform_int_distribution<int> c(-3, 3);
    AlgebraElement x(mode);
    for (int k = 0; k < terms; ++k)
      x.add_term(pick_forest(mode, w(gen)), Rational(c(gen)));
    return x;
  }
};

}  // namespace

TEST_CASE("product basics") {
  for (Mode mode : {Mode::planar, Mode::commutative}) {
    AlgebraElement dot = tree_elem(kLeaf, mode);
    AlgebraElement sq = product(dot, dot);
    CHECK(sq.coefficient(Forest({kLeaf, kLeaf})) == 1);
    CHECK(sq.terms().size() == 1);
    CHECK(product(AlgebraElement::one(mode), dot) == dot);
  }
  // Bilinearity keeps planar order.
  AlgebraElement two_dots = Rational(2) * tree_elem(kLeaf, Mode::planar);
  AlgebraElement three_l2 = Rational(3) * tree_elem(kL2, Mode::planar);
  AlgebraElement prod = product(two_dots, three_l2);
  CHECK(prod.coefficient(Forest({kLeaf, kL2})) == 6);
  CHECK(prod.coefficient(Forest({kL2, kLeaf})) == 0);

  // Commutative mode merges either order onto the canonical key.
  AlgebraElement a = tree_elem(kL2, Mode::commutative);
  AlgebraElement b = tree_elem(kLeaf, Mode::commutative);
  CHECK(product(a, b) == product(b, a));

  CHECK_THROWS_AS(product(tree_elem(kLeaf, Mode::planar), b), std::invalid_argument);
}

TEST_CASE("coproduct of the single vertex and of ladders") {
  for (Mode mode : {Mode::planar, Mode::commutative}) {
    TensorElement d = coproduct(kLeaf, mode);
    CHECK(d.terms().size() == 2);
    CHECK(d.coefficient(Forest::single(kLeaf), Forest()) == 1);
    CHECK(d.coefficient(Forest(), Forest::single(kLeaf)) == 1);
    // Delta(l_n) = sum l_i x l_{n-i}.
    TensorElement dl = coproduct(ladder(4), mode);
    CHECK(dl.terms().size() == 5);
    CHECK(dl.coefficient(Forest::single(kL2), Forest::single(kL2)) == 1);
  }
}

TEST_CASE("coproduct matches the worked weight-4 expansions") {
  // B+(t2 t1), planar: the left factor of the all-root cut keeps order.
  Tree t42 = b_plus(Forest({kL2, kLeaf}));
  TensorElement d = coproduct(t42, Mode::planar);
  CHECK(d.terms().size() == 7);
  CHECK(d.coefficient(Forest({kL2, kLeaf}), Forest::single(kLeaf)) == 1);
  CHECK(d.coefficient(Forest({kLeaf, kL2}), Forest::single(kLeaf)) == 0);
  Tree t43 = b_plus(Forest({kLeaf, kL2}));
  TensorElement d43 = coproduct(t43, Mode::planar);
  CHECK(d43.coefficient(Forest({kLeaf, kL2}), Forest::single(kLeaf)) == 1);
  CHECK(d43.coefficient(Forest::single(kLeaf), Forest::single(kCorolla3)) == 1);

  // B+(B+(t1 t1)): 2 t1 x t3-ladder term from the two symmetric cuts.
  Tree t44 = b_plus(Forest::single(kCorolla3));
  TensorElement d44 = coproduct(t44, Mode::commutative);
  CHECK(d44.coefficient(Forest::single(kLeaf), Forest::single(kL3)) == 2);
  CHECK(d44.coefficient(Forest({kLeaf, kLeaf}), Forest::single(kL2)) == 1);
}

TEST_CASE("cut enumeration oracle agrees with the recursion") {
  for (Mode mode : {Mode::planar, Mode::commutative})
    for (int n = 1; n <= 5; ++n)
      for (const Tree& t : enumerate_trees(n, mode))
        CHECK(coproduct(t, mode) == coproduct_by_cuts(t, mode));
}

TEST_CASE("cut oracle explicit cases") {
  TensorElement d2 = coproduct_by_cuts(kL2, Mode::commutative);
  CHECK(d2.terms().size() == 3);
  CHECK(d2.coefficient(Forest::single(kLeaf), Forest::single(kLeaf)) == 1);

  TensorElement d31 = coproduct_by_cuts(kCorolla3, Mode::commutative);
  CHECK(d31.coefficient(Forest::single(kLeaf), Forest::single(kL2)) == 2);
  CHECK(d31.coefficient(Forest({kLeaf, kLeaf}), Forest::single(kLeaf)) == 1);
  CHECK(d31.terms().size() == 4);
}

TEST_CASE("coassociativity on all trees of weight <= 5") {
  for (Mode mode : {Mode::planar, Mode::commutative}) {
    for (int n = 1; n <= 5; ++n) {
      for (const Tree& t : enumerate_trees(n, mode)) {
        TensorElement d = coproduct(t, mode);
        CHECK(expand_left(d, n) == expand_right(d, n));
      }
    }
  }
}

TEST_CASE("coproduct is multiplicative on random forest pairs") {
  Rng rng;
  for (int trial = 0; trial < 24; ++trial) {
    Mode mode = trial % 2 ? Mode::planar : Mode::commutative;
    std::uniform_int_distribution<int> w(0, 3);
    const Forest& f = rng.pick_forest(mode, w(rng.gen));
    const Forest& g = rng.pick_forest(mode, w(rng.gen));
    AlgebraElement a = AlgebraElement::from_forest(f, mode);
    AlgebraElement b = AlgebraElement::from_forest(g, mode);
    int cap = f.weight() + g.weight();
    CHECK(coproduct(product(a, b), cap) ==
          product(coproduct(a, cap), coproduct(b, cap)).truncated(cap));
  }
}

TEST_CASE("grafting cocycle identity on forests of weight <= 5") {
  for (Mode mode : {Mode::planar, Mode::commutative}) {
    for (int n = 0; n <= 5; ++n) {
      for (const Forest& f : enumerate_forests(n, mode)) {
        AlgebraElement x = AlgebraElement::from_forest(f, mode);
        TensorElement lhs = coproduct(b_plus_element(x));
        TensorElement rhs = id_otimes_bplus(coproduct(x, n));
        rhs.add_term(Forest::single(b_plus(f)), Forest(), Rational(1));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("counit axioms") {
  CHECK(counit(AlgebraElement::one(Mode::planar)) == 1);
  CHECK(counit(tree_elem(kLeaf, Mode::planar)) == 0);
  AlgebraElement mixed = Rational(3) * AlgebraElement::one(Mode::commutative) +
                         Rational(2) * tree_elem(kL2, Mode::commutative);
  CHECK(counit(mixed) == 3);
  for (Mode mode : {Mode::planar, Mode::commutative}) {
    for (int n = 1; n <= 6; ++n) {
      for (const Tree& t : enumerate_trees(n, mode)) {
        TensorElement d = coproduct(t, mode);
        CHECK(contract_counit_left(d) == tree_elem(t, mode));
        CHECK(contract_counit_right(d) == tree_elem(t, mode));
      }
    }
  }
}

TEST_CASE("z functional is an eps-derivation") {
  CHECK(z_functional(tree_elem(kLeaf, Mode::planar)) == 1);
  CHECK(z_functional(AlgebraElement::from_forest(Forest({kLeaf, kLeaf}),
                                                 Mode::planar)) == 0);
  Rng rng;
  for (int trial = 0; trial < 24; ++trial) {
    Mode mode = trial % 2 ? Mode::planar : Mode::commutative;
    AlgebraElement a = rng.element(mode, 2, 3);
    AlgebraElement b = rng.element(mode, 2, 3);
    CHECK(z_functional(product(a, b)) ==
          z_functional(a) * counit(b) + counit(a) * z_functional(b));
  }
}

TEST_CASE("abelianize merges sibling orders") {
  Tree t42 = b_plus(Forest({kL2, kLeaf}));
  Tree t43 = b_plus(Forest({kLeaf, kL2}));
  AlgebraElement x = tree_elem(t42, Mode::planar) + tree_elem(t43, Mode::planar);
  AlgebraElement ab = abelianize(x);
  CHECK(ab.terms().size() == 1);
  CHECK(ab.coefficient(canonicalize(t42, Mode::commutative)) == 2);
  CHECK(abelianize(AlgebraElement::one(Mode::planar)) ==
        AlgebraElement::one(Mode::commutative));
}

TEST_CASE("abelianize is an algebra and truncated coalgebra morphism") {
  Rng rng;
  for (int trial = 0; trial < 12; ++trial) {
    AlgebraElement a = rng.element(Mode::planar, 3, 3);
    AlgebraElement b = rng.element(Mode::planar, 3, 3);
    CHECK(abelianize(product(a, b)) == product(abelianize(a), abelianize(b)));
  }
  for (int n = 1; n <= 5; ++n) {
    for (const Tree& t : enumerate_trees(n, Mode::planar)) {
      CHECK(abelianize(coproduct(t, Mode::planar)) ==
            coproduct(canonicalize(t, Mode::commutative), Mode::commutative));
    }
  }
}

TEST_CASE("substitute_series") {
  AlgebraElement dot = tree_elem(kLeaf, Mode::planar);
  TruncatedSeries one_plus_h({Rational(1), Rational(1)});
  CHECK(substitute_series(one_plus_h, dot, 4) ==
        AlgebraElement::one(Mode::planar) + dot);

  TruncatedSeries geom({Rational(1), Rational(1), Rational(1)});
  AlgebraElement g = substitute_series(geom, dot, 2);
  CHECK(g.coefficient(Forest()) == 1);
  CHECK(g.coefficient(Forest::single(kLeaf)) == 1);
  CHECK(g.coefficient(Forest({kLeaf, kLeaf})) == 1);

  CHECK_THROWS_AS(substitute_series(geom, AlgebraElement::one(Mode::planar), 3),
                  std::invalid_argument);
}

TEST_CASE("series substitution is compatible with composition") {
  Rng rng;
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Mode mode = trial % 2 ? Mode::planar : Mode::commutative;
    TruncatedSeries p(5), q(5);
    p.set(0, Rational(c(rng.gen)));
    for (int k = 1; k <= 5; ++k) {
      p.set(k, Rational(c(rng.gen)));
      q.set(k, Rational(c(rng.gen)));
    }
    AlgebraElement x = rng.element(mode, 3, 3, 1);  // val >= 1
    AlgebraElement lhs = substitute_series(compose(p, q, 5), x, 5);
    AlgebraElement rhs = substitute_series(p, substitute_series(q, x, 5), 5);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("element_power") {
  AlgebraElement dot = tree_elem(kLeaf, Mode::planar);
  AlgebraElement base = AlgebraElement::one(Mode::planar) + dot;
  AlgebraElement sq = element_power(base, Rational(2), 2);
  CHECK(sq == product(base, base).truncated(2));
  AlgebraElement root = element_power(sq, rational(1, 2), 2);
  CHECK(root == base);
  CHECK_THROWS_AS(element_power(dot, Rational(2), 2), std::invalid_argument);
}

TEST_CASE("valuation and grading") {
  AlgebraElement x(Mode::commutative);
  CHECK_FALSE(x.valuation().has_value());
  x.add_term(Forest::single(kL3), Rational(1));
  x.add_term(Forest::single(kLeaf), rational(1, 2));
  CHECK(x.valuation() == 1);
  CHECK(x.max_weight() == 3);
  CHECK(x.graded_component(1) == rational(1, 2) * tree_elem(kLeaf, Mode::commutative));
  CHECK(x.graded_component(2).is_zero());
  CHECK(x.truncated(2).terms().size() == 1);
}

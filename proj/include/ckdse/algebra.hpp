#pragma once

#include <map>
#include <optional>
#include <utility>

#include "ckdse/series.hpp"
#include "ckdse/tree.hpp"

namespace ckdse {

// Finite Q-linear combination of forests, graded by weight. Zero
// coefficients are never stored; in commutative mode every key is a
// canonical forest.
class AlgebraElement {
 public:
  using TermMap = std::map<Forest, Rational, ForestLess>;

  explicit AlgebraElement(Mode mode) : mode_(mode) {}
  static AlgebraElement zero(Mode mode) { return AlgebraElement(mode); }
  static AlgebraElement one(Mode mode);
  static AlgebraElement from_forest(Forest f, Mode mode, Rational coeff = 1);
  static AlgebraElement from_tree(Tree t, Mode mode, Rational coeff = 1);

  Mode mode() const { return mode_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Forest& f) const;
  Rational coefficient(const Tree& t) const;

  // Least weight carrying a nonzero term; empty for the zero element.
  std::optional<int> valuation() const;
  int max_weight() const;
  AlgebraElement graded_component(int n) const;
  AlgebraElement truncated(int weight_cap) const;

  // Adds coeff * f, canonicalizing the forest for this element's mode.
  void add_term(const Forest& f, const Rational& coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);

 private:
  Mode mode_;
  TermMap terms_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(const Rational& c, AlgebraElement a);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
bool operator==(const AlgebraElement& a, const AlgebraElement& b);
inline bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
  return !(a == b);
}

// Free (mode-dependent) product: forest concatenation, bilinear.
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);

// Coefficient of the empty forest.
Rational counit(const AlgebraElement& x);

// Coefficient of the single-vertex forest; an eps-derivation.
Rational z_functional(const AlgebraElement& x);

// Forgets the planar structure: canonicalizes every forest, merges.
AlgebraElement abelianize(const AlgebraElement& x);

// Termwise B+ / B-. b_minus_element requires every term to be a single
// tree (the algebra-level inverse of b_plus on Vect(T)).
AlgebraElement b_plus_element(const AlgebraElement& x,
                              Decoration root = Decoration::unit());
AlgebraElement b_minus_element(const AlgebraElement& x);

// sum_k p_k x^k truncated at weight_cap; requires val(x) >= 1.
AlgebraElement substitute_series(const TruncatedSeries& p, const AlgebraElement& x,
                                 int weight_cap);

// x^gamma for x with weight-0 part exactly 1 (rational exponent).
AlgebraElement element_power(const AlgebraElement& x, const Rational& gamma,
                             int weight_cap);

// Finite Q-linear combination of pairs of forests (truncation of the
// completed tensor square).
class TensorElement {
 public:
  using Key = std::pair<Forest, Forest>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (int c = compare(a.first, b.first); c != 0) return c < 0;
      return compare(a.second, b.second) < 0;
    }
  };
  using TermMap = std::map<Key, Rational, KeyLess>;

  explicit TensorElement(Mode mode) : mode_(mode) {}
  static TensorElement zero(Mode mode) { return TensorElement(mode); }

  Mode mode() const { return mode_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Forest& left, const Forest& right) const;
  void add_term(const Forest& left, const Forest& right, const Rational& coeff);

  TensorElement truncated(int total_weight_cap) const;
  TensorElement bigraded_component(int left_weight, int right_weight) const;

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  TensorElement& operator*=(const Rational& c);

 private:
  Mode mode_;
  TermMap terms_;
};

TensorElement operator+(TensorElement a, const TensorElement& b);
TensorElement operator-(TensorElement a, const TensorElement& b);
TensorElement operator*(const Rational& c, TensorElement a);
bool operator==(const TensorElement& a, const TensorElement& b);
inline bool operator!=(const TensorElement& a, const TensorElement& b) {
  return !(a == b);
}

// Componentwise product (F1 x G1)(F2 x G2) = F1F2 x G1G2.
TensorElement product(const TensorElement& a, const TensorElement& b);

TensorElement tensor_of(const AlgebraElement& left, const AlgebraElement& right);

TensorElement abelianize(const TensorElement& x);

// Coproduct by the grafting cocycle Delta(B+(F)) = B+(F) x 1 +
// (Id x B+) Delta(F), memoized per tree. Exact on trees; the cap drops
// terms of total weight above it.
TensorElement coproduct(const Tree& t, Mode mode);
TensorElement coproduct(const AlgebraElement& x, int weight_cap);
TensorElement coproduct(const AlgebraElement& x);  // cap = max weight

// Independent oracle: enumerates all edge subsets of a single tree,
// keeps the admissible ones, assembles P^c x R^c directly.
TensorElement coproduct_by_cuts(const Tree& t, Mode mode);

// Counit contractions (eps x Id) / (Id x eps) for coalgebra checks.
AlgebraElement contract_counit_left(const TensorElement& x);
AlgebraElement contract_counit_right(const TensorElement& x);

std::string to_text(const AlgebraElement& x);
std::string to_text(const TensorElement& x);

}  // namespace ckdse

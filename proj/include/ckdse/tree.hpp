#pragma once

#include <vector>

#include "ckdse/rational.hpp"

namespace ckdse {

enum class Mode { planar, commutative };

const char* to_string(Mode mode);

// Vertex label. Unit (undecorated) for the one-variable theory; a triple
// i,(u1,u2) with entries in 1..D for the multivariable construction.
struct Decoration {
  int i = 0;  // 0 means unit decoration
  int u1 = 0;
  int u2 = 0;

  bool is_unit() const { return i == 0; }
  static Decoration unit() { return {}; }
  static Decoration triple(int i, int u1, int u2);

  friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

// Rooted tree with ordered children. Planar trees are represented
// directly; commutative (non-planar) trees are the canonical forms in
// which every child list is sorted, heavier subtrees first.
class Tree {
 public:
  Tree() : weight_(1) {}
  explicit Tree(std::vector<Tree> children, Decoration dec = Decoration::unit());

  int weight() const { return weight_; }
  int fertility() const { return static_cast<int>(children_.size()); }
  const std::vector<Tree>& children() const { return children_; }
  const Decoration& decoration() const { return dec_; }

 private:
  Decoration dec_;
  std::vector<Tree> children_;
  int weight_;
};

// Canonical total order: heavier first, then decoration, then the child
// lists lexicographically. Returns <0 when a precedes b.
int compare(const Tree& a, const Tree& b);
inline bool tree_less(const Tree& a, const Tree& b) { return compare(a, b) < 0; }
inline bool operator==(const Tree& a, const Tree& b) { return compare(a, b) == 0; }
inline bool operator!=(const Tree& a, const Tree& b) { return compare(a, b) != 0; }

// Word (planar) or, once canonicalized, monomial (commutative) of trees.
// The empty forest is the algebra unit.
class Forest {
 public:
  Forest() : weight_(0) {}
  explicit Forest(std::vector<Tree> trees);
  static Forest single(Tree t);

  int weight() const { return weight_; }
  bool empty() const { return trees_.empty(); }
  std::size_t size() const { return trees_.size(); }
  const std::vector<Tree>& trees() const { return trees_; }
  Forest concat(const Forest& other) const;

 private:
  std::vector<Tree> trees_;
  int weight_;
};

// Weight first, then tree lists lexicographically under the tree order.
int compare(const Forest& a, const Forest& b);
inline bool forest_less(const Forest& a, const Forest& b) { return compare(a, b) < 0; }
inline bool operator==(const Forest& a, const Forest& b) { return compare(a, b) == 0; }
inline bool operator!=(const Forest& a, const Forest& b) { return compare(a, b) != 0; }

struct TreeLess {
  bool operator()(const Tree& a, const Tree& b) const { return tree_less(a, b); }
};
struct ForestLess {
  bool operator()(const Forest& a, const Forest& b) const { return forest_less(a, b); }
};

// Sorts child lists recursively in commutative mode; identity in planar
// mode. Two planar trees canonicalize identically iff they differ only
// by sibling reordering.
Tree canonicalize(const Tree& t, Mode mode);
Forest canonicalize(const Forest& f, Mode mode);

// All distinct trees of the given weight, deterministic order (the
// canonical total order). weight <= 0 yields the empty list.
const std::vector<Tree>& enumerate_trees(int weight, Mode mode);

// All distinct forests of the given weight; weight 0 yields {1}.
std::vector<Forest> enumerate_forests(int weight, Mode mode);

// Grafts the trees of f on a new common root.
Tree b_plus(const Forest& f, Decoration root = Decoration::unit());

// Deletes the root; inverse of b_plus.
Forest b_minus(const Tree& t);

// Product over vertices of (fertility)!.
Integer tree_factorial(const Tree& t);
Integer tree_factorial(const Forest& f);

// Product over vertices of [fertility]_beta! where [i]_beta = 1+beta(i-1).
Rational beta_factorial(const Tree& t, const Rational& beta);
Rational beta_factorial(const Forest& f, const Rational& beta);

// Deformed factorial [n]_beta! = prod_{i=1..n} (1 + beta(i-1)).
Rational beta_int_factorial(int n, const Rational& beta);

// The unique tree of weight n with every fertility <= 1.
Tree ladder(int n);

bool is_ladder(const Tree& t);

// Compact bracket notation, e.g. "[[][]]"; decorated vertices print as
// [i,(u1,u2) ...].
std::string to_text(const Tree& t);
std::string to_text(const Forest& f);

}  // namespace ckdse

#pragma once

#include <set>
#include <vector>

#include "ckdse/algebra.hpp"

namespace ckdse::fdb {

// Non-empty word over the alphabet {1..D}.
using Word = std::vector<int>;

std::string to_string(const Word& w);

// The element Y_w^i of the algebra of planar trees decorated by
// {1..D}^3: delta_{i,w} for |w| = 1, otherwise the sum over all letter
// pairs and two-block splittings of B+_{i,(a,b)}(Y^a_{w1} Y^b_{w2}).
// Homogeneous of weight |w| - 1.
AlgebraElement y_element(int i, const Word& w, int d);

// Delta(Y_w^i) = sum over k, letter tuples and k-block splittings of
// Y^{a_1}_{w1}...Y^{a_k}_{wk} x Y^i_{a_1...a_k}.
bool verify_multi_coproduct(int i, const Word& w, int d);

// Fertility <= 2 everywhere, with the three decoration patterns: a
// fertility-1 child carries first entry a or b of its parent's pair
// (a,b); fertility-2 children carry a on the left and b on the right.
bool is_admissible(const Tree& t);

// All words reachable by the inductive reading rules; both branches are
// explored when the two fertility-1 patterns overlap (a = b).
std::set<Word> words_of(const Tree& t);

// For a word with pairwise distinct letters: the sum of admissible trees
// t with w(t) = w and root decoration i,(a,b). Must equal y_element.
AlgebraElement generic_reconstruct(int i, const Word& w, int d);

// All admissible decorated trees of the given weight over {1..D}^3.
const std::vector<Tree>& admissible_trees(int weight, int d);

Tree strip_decorations(const Tree& t);
AlgebraElement strip_decorations(const AlgebraElement& x);

// With D = 1, Y_n = Y^1_{1...1} (n+1 letters) reproduces the components
// of the Dyson-Schwinger solution for P = (1+h)^2, up to weight_cap.
bool d1_reduction(int weight_cap);

}  // namespace ckdse::fdb

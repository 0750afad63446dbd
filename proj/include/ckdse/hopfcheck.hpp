#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ckdse/dse.hpp"

namespace ckdse::hopf {

// Per-degree reduced echelon bases (over Q, in the forest basis) of the
// span of all monomials in a set of homogeneous generators. The echelon
// form is unique per degree, so spans compare by direct equality.
class GradedSpan {
 public:
  GradedSpan(Mode mode, int weight_cap);

  Mode mode() const { return mode_; }
  int weight_cap() const { return weight_cap_; }
  int dim(int degree) const;
  const std::vector<AlgebraElement>& basis(int degree) const;

  void set_basis(int degree, std::vector<AlgebraElement> rows);

 private:
  Mode mode_;
  int weight_cap_;
  std::vector<std::vector<AlgebraElement>> basis_;
};

bool operator==(const GradedSpan& a, const GradedSpan& b);

// Echelonized span of all products of the generators, degree by degree
// up to the cap. Generators must be homogeneous of weight >= 1 (zero
// elements are ignored).
GradedSpan graded_span(const std::vector<AlgebraElement>& generators,
                       int weight_cap);

struct Membership {
  bool member;
  TensorElement residual;  // x minus its best representation in Span x Span
};

// Exact solve of x against the product basis {u x v} of the span.
Membership tensor_membership(const TensorElement& x, const GradedSpan& span);

// Outcome of a Hopf-subalgebra check at finite truncation order.
struct HopfVerdict {
  bool pass = false;
  Mode mode = Mode::planar;
  int weight_cap = 0;
  std::optional<int> failing_weight;
  std::optional<TensorElement> residual;
  std::optional<Rational> candidate_alpha;  // (p_1, 2 p_2/p_1^2 - 1), p_1 != 0
  std::optional<Rational> candidate_beta;
  std::optional<bool> matches_family;
};

// Solves X = B+(P(X)) and tests Delta(a_n) against Span x Span for all
// n <= weight_cap. The coproduct of a homogeneous a_n is exact, so no
// information is lost at this order.
HopfVerdict is_hopf(const TruncatedSeries& p, int weight_cap, Mode mode);

// Delta(X_{1,beta}) = X x 1 + sum_n (1 - beta X)^{-n(1/beta+1)+1} x a_n,
// checked in the planar algebra and its abelianization. beta != 0.
bool verify_coproduct_closed_form(const Rational& beta, int weight_cap);

// Delta(Y(1,beta)) = sum_n Y^{n(beta+1)+1} x b_n(1,beta). beta != 0.
bool verify_b_coproduct(const Rational& beta, int weight_cap);

// Delta(Z(1,beta)) = sum_l Z^{l(beta'+1)+1} x c_l(1,beta) with
// Z = Y^{(beta+1)/(beta'+1)}; the computational heart of the
// isomorphism between the beta and beta' subalgebras.
bool verify_c_coproduct(const Rational& beta, const Rational& beta_prime,
                        int weight_cap);

// Do the (alpha,beta) and (alpha',beta') generator families span the
// same graded subalgebra up to the cap?
bool spans_equal(const Rational& alpha, const Rational& beta,
                 const Rational& alpha_prime, const Rational& beta_prime,
                 int weight_cap);

// Structure constants lambda_{i,j} of the dual Lie algebra of the
// (1,beta) subalgebra, read off from the generator-monomial expansion of
// Delta(X_{1,beta}) by exact solve. Expected value: (i-j)(1+beta).
std::map<std::pair<int, int>, Rational> bracket_constants(const Rational& beta,
                                                          int weight_cap);

// Bracket of the dual primitives of the one-variable Faa di Bruno model
// K[Y_1,Y_2,...] with Delta(Y) = sum Y^{n+1} x Y_n; equals j - i.
long fdb_bracket(int i, int j);

// The weight-4 generator here carries coefficient 2 on B+(t2 t1), not
// the Connes-Moscovici coefficient 3.
bool connes_moscovici_distinct();

// sum over compositions a_1+..+a_n = k of prod Q_{a_i}(X_i) equals
// Q_k(X_1+..+X_n); certified on an integer grid exceeding the degree.
bool verify_poly_lemma(int n, int k);

}  // namespace ckdse::hopf

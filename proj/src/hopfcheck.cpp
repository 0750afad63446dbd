#include "ckdse/hopfcheck.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ckdse::hopf {

namespace {

// Reduced echelon row space over exact rationals with representation
// tracking: every row satisfies row.vec = sum_id row.coords[id] * column_id.
template <class K, class Less>
class RowSpace {
 public:
  using Vec = std::map<K, Rational, Less>;
  using Coords = std::map<int, Rational>;
  struct Row {
    Vec vec;
    Coords coords;
  };

  const std::vector<Row>& rows() const { return rows_; }

  // Returns false when the column is already in the span.
  bool insert(Vec v, int id) {
    Coords coords{{id, Rational(1)}};
    eliminate(v, coords);
    if (v.empty()) return false;
    Rational lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    for (auto& [i, c] : coords) c /= lead;
    const K pivot = v.begin()->first;
    for (Row& row : rows_) {
      auto it = row.vec.find(pivot);
      if (it == row.vec.end()) continue;
      Rational f = it->second;
      axpy(row.vec, -f, v);
      axpy(row.coords, -f, coords);
    }
    auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), pivot,
        [](const Row& r, const K& key) { return Less{}(r.vec.begin()->first, key); });
    rows_.insert(pos, Row{std::move(v), std::move(coords)});
    return true;
  }

  // Splits target into (residual, coords) with
  // target = residual + sum coords[id] * column_id.
  std::pair<Vec, Coords> reduce(Vec target) const {
    Coords rep;
    for (const Row& row : rows_) {
      auto it = target.find(row.vec.begin()->first);
      if (it == target.end()) continue;
      Rational f = it->second;
      axpy(target, -f, row.vec);
      axpy(rep, f, row.coords);
    }
    return {std::move(target), std::move(rep)};
  }

 private:
  template <class M>
  static void axpy(M& dst, const Rational& f, const M& src) {
    if (is_zero(f)) return;
    for (const auto& [k, c] : src) {
      auto [it, inserted] = dst.emplace(k, f * c);
      if (!inserted) {
        it->second += f * c;
        if (is_zero(it->second)) dst.erase(it);
      }
    }
  }

  // Reduce v by the current rows, updating the representation.
  void eliminate(Vec& v, Coords& coords) const {
    for (const Row& row : rows_) {
      auto it = v.find(row.vec.begin()->first);
      if (it == v.end()) continue;
      Rational f = it->second;
      axpy(v, -f, row.vec);
      axpy(coords, -f, row.coords);
    }
  }

  std::vector<Row> rows_;  // sorted by pivot, reduced echelon form
};

using ForestSpace = RowSpace<Forest, ForestLess>;
using TensorSpace = RowSpace<TensorElement::Key, TensorElement::KeyLess>;

AlgebraElement element_from_vec(const ForestSpace::Vec& v, Mode mode) {
  AlgebraElement e(mode);
  for (const auto& [f, c] : v) e.add_term(f, c);
  return e;
}

}  // namespace

GradedSpan::GradedSpan(Mode mode, int weight_cap)
    : mode_(mode), weight_cap_(weight_cap),
      basis_(static_cast<std::size_t>(weight_cap) + 1) {
  basis_[0].push_back(AlgebraElement::one(mode));
}

int GradedSpan::dim(int degree) const {
  return static_cast<int>(basis(degree).size());
}

const std::vector<AlgebraElement>& GradedSpan::basis(int degree) const {
  static const std::vector<AlgebraElement> empty;
  if (degree < 0 || degree > weight_cap_) return empty;
  return basis_[static_cast<std::size_t>(degree)];
}

void GradedSpan::set_basis(int degree, std::vector<AlgebraElement> rows) {
  basis_[static_cast<std::size_t>(degree)] = std::move(rows);
}

bool operator==(const GradedSpan& a, const GradedSpan& b) {
  if (a.mode() != b.mode() || a.weight_cap() != b.weight_cap()) return false;
  for (int d = 0; d <= a.weight_cap(); ++d)
    if (!(a.basis(d) == b.basis(d))) return false;
  return true;
}

namespace {

// All products of generators of total weight `remaining`, appended to the
// row space. Commutative mode only enumerates non-decreasing index words.
void span_products(const std::vector<AlgebraElement>& gens,
                   const std::vector<int>& weights, Mode mode, int remaining,
                   std::size_t start, const AlgebraElement& acc,
                   ForestSpace& rs, int& next_id) {
  for (std::size_t g = (mode == Mode::commutative ? start : 0); g < gens.size();
       ++g) {
    if (weights[g] > remaining) continue;
    AlgebraElement next = product(acc, gens[g]);
    if (weights[g] == remaining) {
      ForestSpace::Vec v(next.terms().begin(), next.terms().end());
      rs.insert(std::move(v), next_id++);
    } else {
      span_products(gens, weights, mode, remaining - weights[g], g, next, rs,
                    next_id);
    }
  }
}

}  // namespace

GradedSpan graded_span(const std::vector<AlgebraElement>& generators,
                       int weight_cap) {
  if (generators.empty())
    throw std::invalid_argument("graded_span: no generators");
  Mode mode = generators.front().mode();
  std::vector<AlgebraElement> gens;
  std::vector<int> weights;
  for (const AlgebraElement& g : generators) {
    if (g.mode() != mode) throw std::invalid_argument("graded_span: mode mismatch");
    if (g.is_zero()) continue;
    if (*g.valuation() != g.max_weight())
      throw std::invalid_argument("graded_span: generator is not homogeneous");
    if (g.max_weight() < 1)
      throw std::invalid_argument("graded_span: generator of weight 0");
    gens.push_back(g);
    weights.push_back(g.max_weight());
  }
  GradedSpan span(mode, weight_cap);
  for (int d = 1; d <= weight_cap; ++d) {
    ForestSpace rs;
    int id = 0;
    span_products(gens, weights, mode, d, 0, AlgebraElement::one(mode), rs, id);
    std::vector<AlgebraElement> rows;
    for (const auto& row : rs.rows()) rows.push_back(element_from_vec(row.vec, mode));
    span.set_basis(d, std::move(rows));
  }
  return span;
}

Membership tensor_membership(const TensorElement& x, const GradedSpan& span) {
  if (x.mode() != span.mode())
    throw std::invalid_argument("tensor_membership: mode mismatch");
  // Collect the bidegrees actually present.
  std::vector<std::pair<int, int>> bidegrees;
  for (const auto& [k, c] : x.terms()) {
    std::pair<int, int> bd{k.first.weight(), k.second.weight()};
    if (std::find(bidegrees.begin(), bidegrees.end(), bd) == bidegrees.end())
      bidegrees.push_back(bd);
  }
  TensorElement residual(x.mode());
  for (auto [i, j] : bidegrees) {
    TensorElement piece = x.bigraded_component(i, j);
    if (i > span.weight_cap() || j > span.weight_cap()) {
      residual += piece;
      continue;
    }
    TensorSpace rs;
    int id = 0;
    for (const AlgebraElement& u : span.basis(i))
      for (const AlgebraElement& v : span.basis(j)) {
        TensorElement col = tensor_of(u, v);
        TensorSpace::Vec cv(col.terms().begin(), col.terms().end());
        rs.insert(std::move(cv), id++);
      }
    TensorSpace::Vec target(piece.terms().begin(), piece.terms().end());
    auto [res, rep] = rs.reduce(std::move(target));
    for (const auto& [k, c] : res) residual.add_term(k.first, k.second, c);
  }
  return Membership{residual.is_zero(), std::move(residual)};
}

HopfVerdict is_hopf(const TruncatedSeries& p, int weight_cap, Mode mode) {
  const dse::DseSolution& sol = dse::solve(p, weight_cap, mode);
  HopfVerdict verdict;
  verdict.mode = mode;
  verdict.weight_cap = weight_cap;
  verdict.pass = true;

  GradedSpan span = graded_span(sol.components, weight_cap);
  for (int n = 1; n <= weight_cap; ++n) {
    if (sol.a(n).is_zero()) continue;
    Membership m = tensor_membership(coproduct(sol.a(n)), span);
    if (!m.member) {
      verdict.pass = false;
      verdict.failing_weight = n;
      verdict.residual = std::move(m.residual);
      break;
    }
  }

  if (!is_zero(p[1])) {
    Rational alpha = p[1];
    Rational beta = Rational(2) * p[2] / (p[1] * p[1]) - 1;
    verdict.candidate_alpha = alpha;
    verdict.candidate_beta = beta;
    verdict.matches_family =
        (p.truncated(weight_cap) == solve_family(alpha, beta, weight_cap));
  }
  return verdict;
}

namespace {

// Compares Delta(sum of gens) against
// sum_n base_power(exponent(n)) x gens[n], all truncated at the cap.
// gens[0] may be the unit term (weight 0).
bool coproduct_law_holds(const std::vector<AlgebraElement>& gens,
                         const AlgebraElement& base,
                         const std::function<Rational(int)>& exponent,
                         const TensorElement& extra, int weight_cap) {
  Mode mode = base.mode();
  TensorElement lhs(mode);
  for (const AlgebraElement& g : gens) lhs += coproduct(g, weight_cap);
  lhs = lhs.truncated(weight_cap);

  TensorElement rhs = extra;
  for (std::size_t n = 0; n < gens.size(); ++n) {
    if (gens[n].is_zero()) continue;
    int w = gens[n].max_weight();
    if (w > weight_cap) continue;
    AlgebraElement left =
        element_power(base, exponent(static_cast<int>(n)), weight_cap - w);
    rhs += tensor_of(left, gens[n]);
  }
  return lhs == rhs.truncated(weight_cap);
}

}  // namespace

bool verify_coproduct_closed_form(const Rational& beta, int weight_cap) {
  if (is_zero(beta))
    throw std::invalid_argument("closed-form coproduct: beta = 0 is excluded");
  TruncatedSeries p = solve_family(Rational(1), beta, weight_cap);
  for (Mode mode : {Mode::planar, Mode::commutative}) {
    const dse::DseSolution& sol = dse::solve(p, weight_cap, mode);
    AlgebraElement x = sol.sum();
    AlgebraElement base =
        AlgebraElement::one(mode) - beta * x;  // (1 - beta X), unit term 1
    // Exponent -n(1/beta + 1) + 1 on the n-th component; the X x 1 term
    // is carried separately.
    TensorElement extra = tensor_of(x, AlgebraElement::one(mode));
    std::vector<AlgebraElement> gens;
    gens.push_back(AlgebraElement::zero(mode));  // no n = 0 component
    for (int n = 1; n <= weight_cap; ++n) gens.push_back(sol.a(n));
    Rational inv_beta = Rational(1) / beta;
    bool ok = coproduct_law_holds(
        gens, base,
        [&](int n) -> Rational { return -Rational(n) * (inv_beta + 1) + 1; }, extra,
        weight_cap);
    if (!ok) return false;
  }
  return true;
}

bool verify_b_coproduct(const Rational& beta, int weight_cap) {
  if (is_zero(beta))
    throw std::invalid_argument("b-coproduct law: beta = 0 is excluded");
  std::vector<AlgebraElement> b = dse::b_generators(Rational(1), beta, weight_cap);
  AlgebraElement y(Mode::planar);
  for (const AlgebraElement& bn : b) y += bn;
  return coproduct_law_holds(
      b, y, [&](int n) -> Rational { return Rational(n) * (beta + 1) + 1; },
      TensorElement::zero(Mode::planar), weight_cap);
}

bool verify_c_coproduct(const Rational& beta, const Rational& beta_prime,
                        int weight_cap) {
  std::vector<AlgebraElement> c = dse::c_generators(beta, beta_prime, weight_cap);
  AlgebraElement z(Mode::planar);
  for (const AlgebraElement& cn : c) z += cn;
  return coproduct_law_holds(
      c, z, [&](int n) -> Rational { return Rational(n) * (beta_prime + 1) + 1; },
      TensorElement::zero(Mode::planar), weight_cap);
}

bool spans_equal(const Rational& alpha, const Rational& beta,
                 const Rational& alpha_prime, const Rational& beta_prime,
                 int weight_cap) {
  const dse::DseSolution& s1 =
      dse::solve(solve_family(alpha, beta, weight_cap), weight_cap, Mode::planar);
  const dse::DseSolution& s2 = dse::solve(
      solve_family(alpha_prime, beta_prime, weight_cap), weight_cap, Mode::planar);
  return graded_span(s1.components, weight_cap) ==
         graded_span(s2.components, weight_cap);
}

namespace {

// Partitions of `degree` into generator weights 1..max_part, as
// non-increasing part lists; one monomial (product of a_part) each.
void monomials_of_degree(const dse::DseSolution& sol, int degree, int max_part,
                         std::vector<int>& parts,
                         std::vector<std::pair<std::vector<int>, AlgebraElement>>& out) {
  if (degree == 0) {
    AlgebraElement m = AlgebraElement::one(sol.mode);
    for (int part : parts) m = product(m, sol.a(part));
    out.emplace_back(parts, std::move(m));
    return;
  }
  for (int part = std::min(degree, max_part); part >= 1; --part) {
    parts.push_back(part);
    monomials_of_degree(sol, degree - part, part, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::map<std::pair<int, int>, Rational> bracket_constants(const Rational& beta,
                                                          int weight_cap) {
  const dse::DseSolution& sol = dse::solve(
      solve_family(Rational(1), beta, weight_cap), weight_cap, Mode::commutative);
  TensorElement dx(Mode::commutative);
  for (int n = 1; n <= weight_cap; ++n) dx += coproduct(sol.a(n));

  std::vector<std::vector<std::pair<std::vector<int>, AlgebraElement>>> monos(
      static_cast<std::size_t>(weight_cap) + 1);
  for (int d = 1; d <= weight_cap; ++d) {
    std::vector<int> parts;
    monomials_of_degree(sol, d, d, parts, monos[static_cast<std::size_t>(d)]);
  }

  // c[(i,j)] = coefficient of a_i x a_j in the monomial expansion of the
  // (i,j) bigraded piece of Delta(X).
  std::map<std::pair<int, int>, Rational> single_coeff;
  for (int i = 1; i < weight_cap; ++i) {
    for (int j = 1; i + j <= weight_cap; ++j) {
      TensorSpace rs;
      int id = 0;
      int single_id = -1;
      for (const auto& [pu, u] : monos[static_cast<std::size_t>(i)]) {
        for (const auto& [pv, v] : monos[static_cast<std::size_t>(j)]) {
          if (pu.size() == 1 && pv.size() == 1) single_id = id;
          TensorElement col = tensor_of(u, v);
          TensorSpace::Vec cv(col.terms().begin(), col.terms().end());
          if (!rs.insert(std::move(cv), id++))
            throw std::logic_error("bracket_constants: dependent monomial basis");
        }
      }
      TensorElement piece = dx.bigraded_component(i, j);
      TensorSpace::Vec target(piece.terms().begin(), piece.terms().end());
      auto [res, rep] = rs.reduce(std::move(target));
      if (!res.empty())
        throw std::logic_error(
            "bracket_constants: coproduct not in the monomial span");
      auto it = rep.find(single_id);
      single_coeff[{i, j}] = it == rep.end() ? Rational(0) : it->second;
    }
  }

  std::map<std::pair<int, int>, Rational> lambda;
  for (int i = 1; i < weight_cap; ++i)
    for (int j = 1; i + j <= weight_cap; ++j)
      lambda[{i, j}] = single_coeff[{j, i}] - single_coeff[{i, j}];
  return lambda;
}

namespace {

// Truncated polynomial model of the Faa di Bruno algebra: monomials are
// sorted index multisets of the generators Y_m, graded by |Y_m| = m.
using FdbMono = std::vector<int>;
using FdbPoly = std::map<FdbMono, Rational>;

int fdb_degree(const FdbMono& m) {
  int d = 0;
  for (int i : m) d += i;
  return d;
}

FdbPoly fdb_mul(const FdbPoly& a, const FdbPoly& b, int cap) {
  FdbPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      FdbMono m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      if (fdb_degree(m) > cap) continue;
      auto [it, inserted] = r.emplace(std::move(m), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (is_zero(it->second)) r.erase(it);
      }
    }
  return r;
}

FdbPoly fdb_y(int cap) {
  FdbPoly y{{FdbMono{}, Rational(1)}};
  for (int m = 1; m <= cap; ++m) y.emplace(FdbMono{m}, Rational(1));
  return y;
}

FdbPoly fdb_pow(const FdbPoly& base, int e, int cap) {
  FdbPoly r{{FdbMono{}, Rational(1)}};
  for (int k = 0; k < e; ++k) r = fdb_mul(r, base, cap);
  return r;
}

Rational fdb_single_coeff(const FdbPoly& p, int i) {
  auto it = p.find(FdbMono{i});
  return it == p.end() ? Rational(0) : it->second;
}

}  // namespace

long fdb_bracket(int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("fdb_bracket: indices >= 1");
  int cap = std::max(i, j);
  FdbPoly y = fdb_y(cap);
  // Delta(Y) = sum_n Y^{n+1} x Y_n; pair Z_i x Z_j against it.
  Rational zij = fdb_single_coeff(fdb_pow(y, j + 1, cap), i);
  Rational zji = fdb_single_coeff(fdb_pow(y, i + 1, cap), j);
  Rational lambda = zij - zji;
  if (lambda.get_den() != 1)
    throw std::logic_error("fdb_bracket: non-integer bracket");
  return lambda.get_num().get_si();
}

bool connes_moscovici_distinct() {
  const dse::DseSolution& sol = dse::solve(
      solve_family(Rational(1), Rational(1), 4), 4, Mode::commutative);
  Tree t42 = canonicalize(b_plus(Forest({ladder(2), Tree()})), Mode::commutative);
  return sol.a(4).coefficient(t42) == 2;  // Connes-Moscovici has 3 here
}

bool verify_poly_lemma(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("verify_poly_lemma: n, k >= 1");
  // Both sides have degree k per variable; an integer grid of side k+1
  // separates them exactly.
  std::vector<int> point(static_cast<std::size_t>(n), 0);
  while (true) {
    Rational s = 0;
    for (int x : point) s += x;
    Rational rhs = q_poly(k, s);

    Rational lhs = 0;
    std::vector<int> comp(static_cast<std::size_t>(n), 0);
    // Enumerate compositions of k into n parts >= 0.
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == n - 1) {
        comp[static_cast<std::size_t>(pos)] = remaining;
        Rational term = 1;
        for (int v = 0; v < n; ++v)
          term *= q_poly(comp[static_cast<std::size_t>(v)],
                         Rational(point[static_cast<std::size_t>(v)]));
        lhs += term;
        return;
      }
      for (int a = 0; a <= remaining; ++a) {
        comp[static_cast<std::size_t>(pos)] = a;
        rec(pos + 1, remaining - a);
      }
    };
    rec(0, k);
    if (lhs != rhs) return false;

    int idx = 0;
    while (idx < n && point[static_cast<std::size_t>(idx)] == k) {
      point[static_cast<std::size_t>(idx)] = 0;
      ++idx;
    }
    if (idx == n) break;
    ++point[static_cast<std::size_t>(idx)];
  }
  return true;
}

}  // namespace ckdse::hopf

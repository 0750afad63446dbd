#include "ckdse/selftest.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ckdse/fdbmulti.hpp"
#include "ckdse/hopfcheck.hpp"

namespace ckdse::acceptance {

namespace {

// The trees of weight <= 5, planar, named by their position in the
// standard listing. t(...) builds B+ of the given children.
struct Trees {
  Tree t1;                         // single vertex
  Tree t2;                         // ladder 2
  Tree t31, t32;                   // corolla, ladder
  Tree t41, t42, t43, t44, t45;    // weight 4 (t43 planar only)
  std::vector<Tree> w5;            // the 14 planar trees of weight 5

  Trees() {
    t1 = Tree();
    t2 = ladder(2);
    t31 = b_plus(Forest({t1, t1}));
    t32 = ladder(3);
    t41 = b_plus(Forest({t1, t1, t1}));
    t42 = b_plus(Forest({t2, t1}));
    t43 = b_plus(Forest({t1, t2}));
    t44 = b_plus(Forest({t31}));
    t45 = ladder(4);
    w5 = {
        b_plus(Forest({t1, t1, t1, t1})),  // corolla
        b_plus(Forest({t2, t1, t1})),
        b_plus(Forest({t1, t2, t1})),
        b_plus(Forest({t1, t1, t2})),
        b_plus(Forest({t2, t2})),
        b_plus(Forest({t31, t1})),
        b_plus(Forest({t1, t31})),
        b_plus(Forest({t32, t1})),
        b_plus(Forest({t1, t32})),
        b_plus(Forest({t41})),
        b_plus(Forest({t42})),
        b_plus(Forest({t43})),
        b_plus(Forest({t44})),
        ladder(5),
    };
  }
};

const Trees& trees() {
  static const Trees t;
  return t;
}

// Coefficient of each planar tree in the weight-n component of the
// solution for the (1,beta) family, as displayed for weights <= 5.
std::vector<std::vector<std::pair<Tree, Rational>>> golden_components(
    const Rational& beta) {
  const Trees& T = trees();
  Rational b1 = (1 + beta) / 2;                                // (1+b)/2
  Rational b2 = (1 + 2 * beta) * (1 + beta) / 6;               // (1+2b)(1+b)/6
  Rational b3 = (1 + 3 * beta) * (1 + 2 * beta) * (1 + beta) / 24;
  Rational b1sq = b1 * b1;                                     // (1+b)^2/4

  std::vector<std::vector<std::pair<Tree, Rational>>> g(5);
  g[0] = {{T.t1, Rational(1)}};
  g[1] = {{T.t2, Rational(1)}};
  g[2] = {{T.t31, b1}, {T.t32, Rational(1)}};
  g[3] = {{T.t41, b2}, {T.t42, b1}, {T.t43, b1}, {T.t44, b1}, {T.t45, Rational(1)}};
  std::vector<Rational> w5c = {b3, b2, b2,   b2,   b1, b1sq, b1sq,
                               b1, b1, b2,   b1,   b1, b1,   Rational(1)};
  for (std::size_t k = 0; k < T.w5.size(); ++k) g[4].push_back({T.w5[k], w5c[k]});
  return g;
}

TensorElement golden_tensor(
    Mode mode, const std::vector<std::tuple<Forest, Forest, int>>& terms) {
  TensorElement t(mode);
  for (const auto& [l, r, c] : terms) t.add_term(l, r, Rational(c));
  return t;
}

using Check = std::function<bool(std::ostream&)>;

CriterionResult run_one(int id, const std::string& name, const Check& check) {
  std::ostringstream detail;
  bool pass = false;
  try {
    pass = check(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  return CriterionResult{id, name, pass, detail.str()};
}

// ---- criterion 1: enumeration counts ------------------------------------

bool check_enumeration(std::ostream& out) {
  const std::vector<int> comm = {1, 1, 2, 4, 9, 20};
  const std::vector<int> plan = {1, 1, 2, 5, 14, 42};
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    int c = static_cast<int>(enumerate_trees(n, Mode::commutative).size());
    int p = static_cast<int>(enumerate_trees(n, Mode::planar).size());
    if (c != comm[static_cast<std::size_t>(n - 1)] ||
        p != plan[static_cast<std::size_t>(n - 1)]) {
      out << "weight " << n << ": got (" << c << "," << p << ")";
      ok = false;
    }
  }
  if (ok) out << "weights 1..6: (1,1,2,4,9,20) commutative, (1,1,2,5,14,42) planar";
  return ok;
}

// ---- criterion 2: coproduct goldens --------------------------------------

bool check_coproduct_goldens(std::ostream& out) {
  const Trees& T = trees();
  Forest one;
  auto F = [](std::initializer_list<Tree> ts) { return Forest(std::vector<Tree>(ts)); };

  struct Golden {
    Mode mode;
    Tree tree;
    std::vector<std::tuple<Forest, Forest, int>> terms;
  };
  std::vector<Golden> goldens;
  goldens.push_back({Mode::commutative, T.t41,
                     {{F({T.t41}), one, 1},
                      {one, F({T.t41}), 1},
                      {F({T.t1}), F({T.t31}), 3},
                      {F({T.t1, T.t1}), F({T.t2}), 3},
                      {F({T.t1, T.t1, T.t1}), F({T.t1}), 1}}});
  goldens.push_back({Mode::commutative, T.t42,
                     {{F({T.t42}), one, 1},
                      {one, F({T.t42}), 1},
                      {F({T.t2, T.t1}), F({T.t1}), 1},
                      {F({T.t2}), F({T.t2}), 1},
                      {F({T.t1}), F({T.t32}), 1},
                      {F({T.t1, T.t1}), F({T.t2}), 1},
                      {F({T.t1}), F({T.t31}), 1}}});
  goldens.push_back({Mode::commutative, T.t44,
                     {{F({T.t44}), one, 1},
                      {one, F({T.t44}), 1},
                      {F({T.t31}), F({T.t1}), 1},
                      {F({T.t1, T.t1}), F({T.t2}), 1},
                      {F({T.t1}), F({T.t32}), 2}}});
  goldens.push_back({Mode::commutative, T.t45,
                     {{F({T.t45}), one, 1},
                      {one, F({T.t45}), 1},
                      {F({T.t32}), F({T.t1}), 1},
                      {F({T.t2}), F({T.t2}), 1},
                      {F({T.t1}), F({T.t32}), 1}}});
  goldens.push_back({Mode::planar, T.t42,
                     {{F({T.t42}), one, 1},
                      {one, F({T.t42}), 1},
                      {F({T.t2, T.t1}), F({T.t1}), 1},
                      {F({T.t2}), F({T.t2}), 1},
                      {F({T.t1}), F({T.t32}), 1},
                      {F({T.t1, T.t1}), F({T.t2}), 1},
                      {F({T.t1}), F({T.t31}), 1}}});
  goldens.push_back({Mode::planar, T.t43,
                     {{F({T.t43}), one, 1},
                      {one, F({T.t43}), 1},
                      {F({T.t1, T.t2}), F({T.t1}), 1},
                      {F({T.t2}), F({T.t2}), 1},
                      {F({T.t1}), F({T.t32}), 1},
                      {F({T.t1, T.t1}), F({T.t2}), 1},
                      {F({T.t1}), F({T.t31}), 1}}});

  int checked = 0;
  for (const Golden& g : goldens) {
    TensorElement expected = golden_tensor(g.mode, g.terms);
    if (coproduct(g.tree, g.mode) != expected) {
      out << "coproduct mismatch (" << to_string(g.mode) << ") on "
          << to_text(g.tree);
      return false;
    }
    ++checked;
  }
  out << checked << " weight-4 coproducts reproduced term-for-term";
  return true;
}

// ---- criterion 3: cut-enumeration oracle ----------------------------------

bool check_coproduct_oracle(std::ostream& out) {
  int checked = 0;
  for (Mode mode : {Mode::commutative, Mode::planar}) {
    for (int n = 1; n <= 6; ++n) {
      for (const Tree& t : enumerate_trees(n, mode)) {
        if (coproduct(t, mode) != coproduct_by_cuts(t, mode)) {
          out << "oracle mismatch (" << to_string(mode) << ") on " << to_text(t);
          return false;
        }
        ++checked;
      }
    }
  }
  out << "recursion equals admissible-cut enumeration on " << checked
      << " trees (weight <= 6, both modes)";
  return true;
}

// ---- criterion 4: solution goldens and closed form -------------------------

bool check_dse_goldens(std::ostream& out) {
  const std::vector<Rational> betas = {Rational(0), Rational(1), Rational(-1),
                                       rational(1, 2), rational(7, 3)};
  const std::vector<Rational> alphas = {Rational(1), Rational(3)};
  for (const Rational& beta : betas) {
    auto golden = golden_components(beta);
    for (const Rational& alpha : alphas) {
      const dse::DseSolution& sol =
          dse::solve(solve_family(alpha, beta, 5), 5, Mode::planar);
      Rational apow = 1;
      for (int n = 1; n <= 5; ++n) {
        AlgebraElement expected(Mode::planar);
        for (const auto& [t, c] : golden[static_cast<std::size_t>(n - 1)])
          expected.add_term(Forest::single(t), apow * c);
        if (sol.a(n) != expected) {
          out << "component mismatch at weight " << n << ", alpha="
              << to_string(alpha) << ", beta=" << to_string(beta);
          return false;
        }
        apow *= alpha;
      }
    }
  }

  const std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(1), Rational(0)},   {Rational(1), Rational(1)},
      {Rational(1), Rational(-1)},  {Rational(1), rational(1, 2)},
      {Rational(2), rational(-1, 2)}, {Rational(1), rational(7, 3)}};
  for (const auto& [alpha, beta] : pairs) {
    const dse::DseSolution& sol =
        dse::solve(solve_family(alpha, beta, 6), 6, Mode::planar);
    for (int n = 1; n <= 6; ++n) {
      for (const Tree& t : enumerate_trees(n, Mode::planar)) {
        if (sol.a(n).coefficient(t) != dse::closed_coeff(t, alpha, beta)) {
          out << "closed form differs from recursion on " << to_text(t)
              << " at alpha=" << to_string(alpha) << ", beta=" << to_string(beta);
          return false;
        }
      }
    }
  }
  out << "weights 1..5 match the displayed tables (10 parameter sets); "
         "closed form == recursion on all planar trees of weight <= 6 (6 sets)";
  return true;
}

// ---- criterion 5: main theorem at finite order ------------------------------

bool check_main_theorem(std::ostream& out, int cap) {
  const std::vector<Rational> alphas = {Rational(1), Rational(2), Rational(3),
                                        rational(1, 2), rational(5, 3)};
  const std::vector<Rational> betas = {Rational(-1), Rational(0), Rational(1),
                                       rational(1, 2), rational(7, 3)};
  for (const Rational& alpha : alphas) {
    for (const Rational& beta : betas) {
      hopf::HopfVerdict v = hopf::is_hopf(solve_family(alpha, beta, cap), cap,
                                          Mode::planar);
      if (!v.pass || !v.matches_family.value_or(false)) {
        out << "family alpha=" << to_string(alpha) << ", beta=" << to_string(beta)
            << " did not pass";
        return false;
      }
    }
  }

  const std::vector<std::pair<Rational, Rational>> perturbed = {
      {Rational(1), Rational(1)},   {Rational(1), Rational(0)},
      {Rational(1), Rational(-1)},  {Rational(1), rational(1, 2)},
      {Rational(1), Rational(2)},   {Rational(2), Rational(1)},
      {Rational(3), Rational(-1)},  {rational(1, 2), Rational(1)},
      {Rational(2), rational(-1, 2)}, {Rational(1), rational(7, 3)}};
  for (const auto& [alpha, beta] : perturbed) {
    TruncatedSeries p = solve_family(alpha, beta, cap);
    p.set(3, p[3] + 1);
    hopf::HopfVerdict v = hopf::is_hopf(p, cap, Mode::planar);
    if (v.pass || !v.failing_weight || *v.failing_weight > 4) {
      out << "perturbed p_3 of alpha=" << to_string(alpha)
          << ", beta=" << to_string(beta) << " did not fail by weight 4";
      return false;
    }
  }
  out << "25 family instances pass at N=" << cap
      << "; 10 perturbations fail with failing weight <= 4";
  return true;
}

// ---- criterion 6: the (Id - L_P)^{-1}(1) machinery --------------------------

bool check_lp_machinery(std::ostream& out, int cap) {
  std::vector<TruncatedSeries> series;
  const std::vector<std::pair<Rational, Rational>> families = {
      {Rational(1), Rational(0)},  {Rational(1), Rational(1)},
      {Rational(1), Rational(-1)}, {Rational(1), rational(1, 2)},
      {Rational(2), Rational(1)},  {Rational(3), rational(7, 3)}};
  for (const auto& [alpha, beta] : families)
    series.push_back(solve_family(alpha, beta, cap));
  series.push_back(TruncatedSeries({Rational(1), Rational(1), Rational(0),
                                    Rational(1), Rational(2), rational(1, 3)}));
  series.push_back(TruncatedSeries({Rational(1), Rational(0), Rational(1),
                                    Rational(1), Rational(0), Rational(5)}));

  for (const TruncatedSeries& p : series) {
    for (Mode mode : {Mode::commutative, Mode::planar}) {
      const dse::DseSolution& sol = dse::solve(p, cap, mode);
      std::vector<AlgebraElement> b = dse::lp_inverse_one(p, cap, mode);
      AlgebraElement y(mode);
      for (const AlgebraElement& bn : b) y += bn;
      AlgebraElement should_be_one =
          (y - dse::lp_apply(p, sol, y, cap)).truncated(cap);
      if (should_be_one != AlgebraElement::one(mode)) {
        out << "(Id - L_P)(sum b_n) != 1 for P = " << to_string(p);
        return false;
      }
    }
  }

  for (const auto& [alpha, beta] : families) {
    TruncatedSeries p = solve_family(alpha, beta, cap);
    const dse::DseSolution& sol = dse::solve(p, cap, Mode::commutative);
    std::vector<AlgebraElement> b = dse::lp_inverse_one(p, cap, Mode::commutative);
    for (int n = 1; n <= cap; ++n) {
      Rational coeff = p[1] + 2 * (p[2] / p[1]) * (n - 1);
      if (b[static_cast<std::size_t>(n)] != coeff * sol.a(n)) {
        out << "b_n != (p1 + 2(p2/p1)(n-1)) a_n at n=" << n
            << " for alpha=" << to_string(alpha) << ", beta=" << to_string(beta);
        return false;
      }
    }
  }
  out << "(Id - L_P)(sum b_n) = 1 for 8 series, both modes; b_n proportionality "
         "holds on 6 family instances";
  return true;
}

// ---- criterion 7: closed-form coproduct laws --------------------------------

bool check_coproduct_laws(std::ostream& out) {
  const std::vector<Rational> betas = {Rational(1), Rational(-1), rational(1, 2),
                                       rational(7, 3)};
  for (const Rational& beta : betas) {
    if (!hopf::verify_coproduct_closed_form(beta, 4)) {
      out << "closed-form coproduct law failed at beta=" << to_string(beta);
      return false;
    }
    if (!hopf::verify_b_coproduct(beta, 4)) {
      out << "Delta(Y) law failed at beta=" << to_string(beta);
      return false;
    }
  }
  const std::vector<std::pair<Rational, Rational>> pairs = {
      {Rational(1), rational(1, 2)},
      {rational(1, 2), Rational(2)},
      {Rational(2), rational(7, 3)}};
  for (const auto& [beta, beta_prime] : pairs) {
    if (!hopf::verify_c_coproduct(beta, beta_prime, 4)) {
      out << "Delta(Z) law failed at (beta,beta')=(" << to_string(beta) << ","
          << to_string(beta_prime) << ")";
      return false;
    }
  }
  out << "X, Y and Z coproduct laws hold at N=4 (4 betas; 3 beta pairs)";
  return true;
}

// ---- criterion 8: equality classification -----------------------------------

bool check_equality_classification(std::ostream& out, int cap) {
  const std::vector<Rational> alphas = {Rational(0), Rational(1), Rational(2),
                                        Rational(3)};
  const std::vector<Rational> betas = {Rational(-1), Rational(0), Rational(1),
                                       Rational(2)};
  int checked = 0;
  for (const Rational& a1 : alphas)
    for (const Rational& b1 : betas)
      for (const Rational& a2 : alphas)
        for (const Rational& b2 : betas) {
          bool expected =
              (b1 == b2 && !is_zero(a1) && !is_zero(a2)) || (is_zero(a1) && is_zero(a2));
          bool got = hopf::spans_equal(a1, b1, a2, b2, cap);
          if (got != expected) {
            out << "spans_equal(" << to_string(a1) << "," << to_string(b1) << ";"
                << to_string(a2) << "," << to_string(b2) << ") = " << got
                << ", expected " << expected;
            return false;
          }
          ++checked;
        }
  out << checked << " ordered pairs match the equality predicate at N=" << cap
      << " (includes the 144 pairs with both alphas nonzero)";
  return true;
}

// ---- criterion 9: Lie data ----------------------------------------------------

bool check_lie_data(std::ostream& out) {
  const std::vector<Rational> betas = {Rational(0), Rational(1), rational(1, 2),
                                       Rational(-1), rational(7, 3)};
  for (const Rational& beta : betas) {
    auto lambda = hopf::bracket_constants(beta, 6);
    for (int i = 1; i < 6; ++i) {
      for (int j = 1; i + j <= 6; ++j) {
        Rational expected = Rational(i - j) * (1 + beta);
        if (lambda.at({i, j}) != expected) {
          out << "lambda_{" << i << "," << j << "} != (i-j)(1+beta) at beta="
              << to_string(beta);
          return false;
        }
      }
    }
  }
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; i + j <= 8; ++j) {
      if (hopf::fdb_bracket(i, j) != j - i) {
        out << "fdb_bracket(" << i << "," << j << ") != j-i";
        return false;
      }
    }
  }
  out << "lambda_{i,j} = (i-j)(1+beta) for i+j <= 6, 5 betas; "
         "fdb_bracket(i,j) = j-i for i+j <= 8";
  return true;
}

// ---- criterion 10: distinction from the Connes-Moscovici generators -----------

bool check_cm_distinction(std::ostream& out) {
  const Trees& T = trees();
  if (!hopf::connes_moscovici_distinct()) {
    out << "weight-4 coefficient is not 2";
    return false;
  }
  const dse::DseSolution& sol = dse::solve(
      solve_family(Rational(1), Rational(1), 5), 5, Mode::commutative);

  AlgebraElement a4(Mode::commutative);
  for (const auto& [t, c] : std::initializer_list<std::pair<Tree, int>>{
           {T.t41, 1}, {T.t42, 2}, {T.t44, 1}, {T.t45, 1}})
    a4.add_term(Forest::single(t), Rational(c));
  if (sol.a(4) != a4) {
    out << "a_4(1,1) does not match its expansion";
    return false;
  }

  // Commutative coefficients at (1,1) count planar representatives.
  AlgebraElement a5(Mode::commutative);
  const std::vector<int> mult = {1, 3, 0, 0, 1, 2, 0, 2, 0, 1, 2, 0, 1, 1};
  for (std::size_t k = 0; k < T.w5.size(); ++k)
    if (mult[k]) a5.add_term(Forest::single(T.w5[k]), Rational(mult[k]));
  if (sol.a(5) != a5) {
    out << "a_5(1,1) does not match its expansion";
    return false;
  }
  out << "coefficient of B+(t2 t1) in a_4(1,1) is 2 (Connes-Moscovici has 3); "
         "a_5(1,1) matches the 9-term expansion";
  return true;
}

// ---- criterion 11: the Q_k composition lemma -----------------------------------

bool check_poly_lemma(std::ostream& out) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k)
      if (!hopf::verify_poly_lemma(n, k)) {
        out << "failed at n=" << n << ", k=" << k;
        return false;
      }
  out << "sum of Q_{a_i}(X_i) products equals Q_k(X_1+..+X_n) for n,k <= 4";
  return true;
}

// ---- criterion 12: multivariable construction -----------------------------------

bool check_multivariable(std::ostream& out, int cap) {
  int coproduct_cases = 0;
  for (int len = 1; len <= 4; ++len) {
    std::vector<int> w(static_cast<std::size_t>(len), 1);
    while (true) {
      for (int i = 1; i <= 2; ++i) {
        if (!fdb::verify_multi_coproduct(i, w, 2)) {
          out << "coproduct law failed for D=2, i=" << i
              << ", w=" << fdb::to_string(w);
          return false;
        }
        ++coproduct_cases;
      }
      int pos = 0;
      while (pos < len && w[static_cast<std::size_t>(pos)] == 2) {
        w[static_cast<std::size_t>(pos)] = 1;
        ++pos;
      }
      if (pos == len) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }

  int generic_cases = 0;
  std::function<void(fdb::Word&)> visit = [&](fdb::Word& w) {
    if (!w.empty()) {
      for (int i = 1; i <= 4; ++i) {
        if (fdb::generic_reconstruct(i, w, 4) != fdb::y_element(i, w, 4))
          throw std::runtime_error("generic reconstruction differs for i=" +
                                   std::to_string(i) + ", w=" + fdb::to_string(w));
        ++generic_cases;
      }
    }
    if (w.size() == 4) return;
    for (int u = 1; u <= 4; ++u) {
      if (std::find(w.begin(), w.end(), u) != w.end()) continue;
      w.push_back(u);
      visit(w);
      w.pop_back();
    }
  };
  fdb::Word w0;
  visit(w0);

  if (!fdb::d1_reduction(cap)) {
    out << "D=1 reduction failed";
    return false;
  }
  if (solve_family(Rational(2), rational(-1, 2), 4) !=
      TruncatedSeries({Rational(1), Rational(2), Rational(1)})) {
    out << "solve_family(2,-1/2) != (1+h)^2";
    return false;
  }
  out << "coproduct law exhaustive for D=2, |w| <= 4 (" << coproduct_cases
      << " cases); generic reconstruction matches for D=4, |w| <= 4 ("
      << generic_cases << " cases); D=1 reduction holds to N=" << cap
      << " and solve_family(2,-1/2) = (1+h)^2 "
      << "[note: (1+h)^2 belongs to the (2,-1/2) family; the alpha=4 label "
         "seen for it elsewhere does not satisfy the differential system]";
  return true;
}

}  // namespace

std::vector<CriterionResult> run_all(int weight_cap) {
  if (weight_cap < 4)
    throw std::invalid_argument("acceptance: weight cap must be >= 4");
  const int cap = weight_cap;
  std::vector<CriterionResult> results;
  results.push_back(run_one(1, "tree enumeration counts", check_enumeration));
  results.push_back(run_one(2, "coproduct goldens", check_coproduct_goldens));
  results.push_back(run_one(3, "coproduct oracle equivalence", check_coproduct_oracle));
  results.push_back(run_one(4, "solution goldens and closed form", check_dse_goldens));
  results.push_back(run_one(5, "family characterization at finite order",
                            [cap](std::ostream& o) { return check_main_theorem(o, cap); }));
  results.push_back(run_one(6, "(Id - L_P) machinery",
                            [cap](std::ostream& o) { return check_lp_machinery(o, cap); }));
  results.push_back(run_one(7, "closed-form coproduct laws", check_coproduct_laws));
  results.push_back(run_one(8, "subalgebra equality classification",
                            [cap](std::ostream& o) {
                              return check_equality_classification(o, cap);
                            }));
  results.push_back(run_one(9, "Lie bracket data", check_lie_data));
  results.push_back(run_one(10, "Connes-Moscovici distinction", check_cm_distinction));
  results.push_back(run_one(11, "Q_k composition lemma", check_poly_lemma));
  results.push_back(run_one(12, "multivariable construction",
                            [cap](std::ostream& o) { return check_multivariable(o, cap); }));
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace ckdse::acceptance

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "ckdse/fdbmulti.hpp"
#include "ckdse/json_io.hpp"
#include "ckdse/selftest.hpp"

namespace {

using namespace ckdse;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailed = 2;

int weight_guard() {
  const char* env = std::getenv("HOPF_FOREST_MAX_WEIGHT");
  if (!env) return 10;
  try {
    int cap = std::stoi(env);
    if (cap < 1) throw std::invalid_argument("");
    return cap;
  } catch (...) {
    throw std::invalid_argument("HOPF_FOREST_MAX_WEIGHT: not a positive integer");
  }
}

void check_weight(int n, const char* flag) {
  int cap = weight_guard();
  if (n > cap)
    throw std::invalid_argument(std::string(flag) + ": " + std::to_string(n) +
                                " exceeds the HOPF_FOREST_MAX_WEIGHT cap (" +
                                std::to_string(cap) + ")");
  if (n < 1)
    throw std::invalid_argument(std::string(flag) + ": must be >= 1");
}

// Series argument: comma-separated rationals "1,1,1/2" or family syntax
// "family:alpha=1,beta=1/2" (alpha/beta also spelled a/b or the Greek
// letters). Families are materialized at the requested order.
TruncatedSeries parse_series_arg(const std::string& text, int order,
                                 const char* flag) {
  try {
    if (text.rfind("family:", 0) == 0) {
      std::optional<Rational> alpha, beta;
      std::string rest = text.substr(7);
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        std::size_t comma = rest.find(',', pos);
        std::string item = rest.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("expected key=value in \"" + item + "\"");
        std::string key = item.substr(0, eq);
        Rational value = parse_rational(item.substr(eq + 1));
        if (key == "alpha" || key == "a" || key == "\xce\xb1")
          alpha = value;
        else if (key == "beta" || key == "b" || key == "\xce\xb2")
          beta = value;
        else
          throw std::invalid_argument("unknown family parameter \"" + key + "\"");
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (!alpha || !beta)
        throw std::invalid_argument("family needs both alpha and beta");
      return solve_family(*alpha, *beta, order);
    }
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      coeffs.push_back(parse_rational(text.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return TruncatedSeries(std::move(coeffs)).truncated(order);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

const std::map<std::string, Mode> kModeNames{{"planar", Mode::planar},
                                             {"commutative", Mode::commutative}};

void emit(const io::Json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommand configs -----------------------------------------------------

struct EnumerateCfg {
  int weight = 5;
  Mode mode = Mode::commutative;
  bool count = false;
  bool json = false;
};

int run_enumerate(const EnumerateCfg& cfg) {
  check_weight(cfg.weight, "--weight");
  const std::vector<Tree>& ts = enumerate_trees(cfg.weight, cfg.mode);
  if (cfg.count) {
    std::cout << ts.size() << "\n";
    return kExitOk;
  }
  if (cfg.json) {
    io::Json j = io::Json::array();
    for (const Tree& t : ts) j.push_back(io::to_json(t));
    emit(j);
  } else {
    for (const Tree& t : ts) std::cout << to_text(t) << "\n";
  }
  return kExitOk;
}

struct CoproductCfg {
  std::string forest;
  Mode mode = Mode::commutative;
  bool cuts = false;
  int cap = -1;
  bool json = false;
};

int run_coproduct(const CoproductCfg& cfg) {
  Forest f;
  try {
    f = io::forest_from_json(io::Json::parse(cfg.forest));
  } catch (const io::Json::parse_error& e) {
    throw std::invalid_argument(std::string("--forest: ") + e.what());
  } catch (const io::DecodeError& e) {
    throw std::invalid_argument(std::string("--forest: ") + e.what());
  }
  check_weight(std::max(1, f.weight()), "--forest weight");
  TensorElement result(cfg.mode);
  if (cfg.cuts) {
    if (f.size() != 1)
      throw std::invalid_argument("--cuts: needs a single tree");
    result = coproduct_by_cuts(f.trees()[0], cfg.mode);
  } else {
    AlgebraElement x = AlgebraElement::from_forest(f, cfg.mode);
    result = cfg.cap >= 0 ? coproduct(x, cfg.cap) : coproduct(x);
  }
  if (cfg.json)
    emit(io::to_json(result));
  else
    std::cout << to_text(result) << "\n";
  return kExitOk;
}

struct DseCfg {
  std::string series;
  int weight = 5;
  Mode mode = Mode::planar;
  bool json = false;
};

int run_dse_solve(const DseCfg& cfg) {
  check_weight(cfg.weight, "--weight");
  TruncatedSeries p = parse_series_arg(cfg.series, cfg.weight, "--series");
  if (p[0] != 1) throw std::invalid_argument("--series: P(0) must be 1");
  const dse::DseSolution& sol = dse::solve(p, cfg.weight, cfg.mode);
  if (cfg.json) {
    io::Json j;
    j["mode"] = to_string(cfg.mode);
    j["weight"] = cfg.weight;
    io::Json comps = io::Json::array();
    for (int n = 1; n <= cfg.weight; ++n) {
      io::Json c;
      c["n"] = n;
      c["element"] = io::to_json(sol.a(n));
      comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    emit(j);
  } else {
    for (int n = 1; n <= cfg.weight; ++n)
      std::cout << "a_" << n << " = " << to_text(sol.a(n)) << "\n";
  }
  return kExitOk;
}

struct HopfCheckCfg {
  std::string series;
  int weight = 5;
  Mode mode = Mode::planar;
  bool json = false;
};

int run_hopf_check(const HopfCheckCfg& cfg) {
  check_weight(cfg.weight, "--weight");
  TruncatedSeries p = parse_series_arg(cfg.series, cfg.weight, "--series");
  if (p[0] != 1) throw std::invalid_argument("--series: P(0) must be 1");
  hopf::HopfVerdict v = hopf::is_hopf(p, cfg.weight, cfg.mode);
  if (cfg.json) {
    emit(io::to_json(v));
  } else {
    if (v.pass)
      std::cout << "PASS: Hopf subalgebra up to weight " << cfg.weight << "\n";
    else
      std::cout << "FAIL: coproduct leaves the subalgebra at weight "
                << *v.failing_weight << "\n";
    if (v.candidate_alpha)
      std::cout << "candidate (alpha,beta) = (" << to_string(*v.candidate_alpha)
                << "," << to_string(*v.candidate_beta) << "), matches family: "
                << (*v.matches_family ? "yes" : "no") << "\n";
    if (!v.pass) std::cout << "residual: " << to_text(*v.residual) << "\n";
  }
  return v.pass ? kExitOk : kExitVerificationFailed;
}

struct EqualCfg {
  std::string a;
  std::string b;
  int weight = 5;
  bool json = false;
};

std::pair<Rational, Rational> parse_pair(const std::string& s, const char* flag) {
  std::size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument(std::string(flag) + ": expected \"alpha,beta\"");
  try {
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

int run_equal(const EqualCfg& cfg) {
  check_weight(cfg.weight, "--weight");
  auto [a1, b1] = parse_pair(cfg.a, "--a");
  auto [a2, b2] = parse_pair(cfg.b, "--b");
  bool equal = hopf::spans_equal(a1, b1, a2, b2, cfg.weight);
  if (cfg.json) {
    io::Json j;
    j["equal"] = equal;
    j["weight"] = cfg.weight;
    emit(j);
  } else {
    std::cout << (equal ? "equal" : "different") << " up to weight " << cfg.weight
              << "\n";
  }
  return kExitOk;
}

struct BracketCfg {
  std::string beta = "1";
  int max = 6;
  bool json = false;
};

int run_bracket(const BracketCfg& cfg) {
  check_weight(cfg.max, "--max");
  Rational beta = parse_rational(cfg.beta);
  auto lambda = hopf::bracket_constants(beta, cfg.max);
  bool all_match = true;
  io::Json rows = io::Json::array();
  for (const auto& [ij, value] : lambda) {
    Rational expected = Rational(ij.first - ij.second) * (1 + beta);
    bool match = (value == expected);
    all_match = all_match && match;
    if (cfg.json) {
      io::Json row;
      row["i"] = ij.first;
      row["j"] = ij.second;
      row["lambda"] = to_string(value);
      row["expected"] = to_string(expected);
      rows.push_back(std::move(row));
    } else {
      std::cout << "lambda_{" << ij.first << "," << ij.second
                << "} = " << to_string(value) << (match ? "" : "  [MISMATCH]")
                << "\n";
    }
  }
  if (cfg.json) {
    io::Json j;
    j["beta"] = to_string(beta);
    j["matches_formula"] = all_match;
    j["brackets"] = std::move(rows);
    emit(j);
  } else {
    std::cout << (all_match ? "all equal (i-j)(1+beta)" : "mismatch against formula")
              << "\n";
  }
  return all_match ? kExitOk : kExitVerificationFailed;
}

struct FdbMultiCfg {
  int d = 2;
  std::string word;
  int i = 1;
  bool verify = false;
  bool json = false;
};

fdb::Word parse_word(const std::string& s, int d) {
  if (s.empty()) throw std::invalid_argument("--word: must be non-empty");
  fdb::Word w;
  for (char ch : s) {
    if (ch < '1' || ch > '9')
      throw std::invalid_argument("--word: letters are digits 1..9");
    int u = ch - '0';
    if (u > d) throw std::invalid_argument("--word: letter exceeds --d");
    w.push_back(u);
  }
  return w;
}

int run_fdb_multi(const FdbMultiCfg& cfg) {
  if (cfg.d < 1 || cfg.d > 9) throw std::invalid_argument("--d: range 1..9");
  if (cfg.i < 1 || cfg.i > cfg.d) throw std::invalid_argument("--i: range 1..d");
  fdb::Word w = parse_word(cfg.word, cfg.d);
  check_weight(static_cast<int>(w.size()), "--word length");
  AlgebraElement y = fdb::y_element(cfg.i, w, cfg.d);
  if (!cfg.verify) {
    if (cfg.json)
      emit(io::to_json(y));
    else
      std::cout << "Y^" << cfg.i << "_" << fdb::to_string(w) << " = " << to_text(y)
                << "\n";
    return kExitOk;
  }
  bool law = fdb::verify_multi_coproduct(cfg.i, w, cfg.d);
  bool generic = true;
  bool is_generic_word = true;
  for (std::size_t a = 0; a < w.size() && is_generic_word; ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] == w[b]) {
        is_generic_word = false;
        break;
      }
  if (is_generic_word) generic = (fdb::generic_reconstruct(cfg.i, w, cfg.d) == y);
  bool pass = law && generic;
  if (cfg.json) {
    io::Json j;
    j["coproduct_law"] = law;
    j["generic_word"] = is_generic_word;
    j["generic_reconstruction"] = is_generic_word ? io::Json(generic) : io::Json(nullptr);
    j["pass"] = pass;
    emit(j);
  } else {
    std::cout << "coproduct law: " << (law ? "holds" : "FAILS");
    if (is_generic_word)
      std::cout << "; generic reconstruction: " << (generic ? "matches" : "FAILS");
    std::cout << "\n";
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

struct FdbBracketCfg {
  int max = 8;
  bool json = false;
};

int run_fdb_bracket(const FdbBracketCfg& cfg) {
  check_weight(cfg.max, "--max");
  bool all_match = true;
  io::Json rows = io::Json::array();
  for (int i = 1; i < cfg.max; ++i) {
    for (int j = 1; i + j <= cfg.max; ++j) {
      long got = hopf::fdb_bracket(i, j);
      bool match = (got == j - i);
      all_match = all_match && match;
      if (cfg.json) {
        io::Json row;
        row["i"] = i;
        row["j"] = j;
        row["bracket"] = got;
        rows.push_back(std::move(row));
      } else {
        std::cout << "[Z_" << i << ",Z_" << j << "] = " << got << " Z_" << i + j
                  << (match ? "" : "  [MISMATCH]") << "\n";
      }
    }
  }
  if (cfg.json) {
    io::Json j;
    j["matches_formula"] = all_match;
    j["brackets"] = std::move(rows);
    emit(j);
  }
  return all_match ? kExitOk : kExitVerificationFailed;
}

int run_selftest(int weight) {
  check_weight(weight, "--weight");
  auto results = acceptance::run_all(weight);
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] "
              << r.name << ": " << r.detail << "\n";
  }
  bool ok = acceptance::all_passed(results);
  std::cout << (ok ? "selftest: all criteria passed" : "selftest: FAILURES present")
            << "\n";
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic engine for the Connes-Kreimer Hopf algebras of rooted "
      "trees and combinatorial Dyson-Schwinger equations"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // enumerate
  EnumerateCfg en;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List rooted trees of a weight");
  enumerate_cmd->add_option("--weight", en.weight, "Tree weight")->required();
  enumerate_cmd->add_option("--mode", en.mode, "planar|commutative")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case));
  enumerate_cmd->add_flag("--count", en.count, "Print only the number of trees");
  enumerate_cmd->add_flag("--json", en.json, "JSON output");
  enumerate_cmd->callback([&] { rc = run_enumerate(en); });

  // coproduct
  CoproductCfg co;
  auto* coproduct_cmd =
      app.add_subcommand("coproduct", "Coproduct of a forest (JSON encoded)");
  coproduct_cmd->add_option("--forest", co.forest, "Forest as JSON")->required();
  coproduct_cmd->add_option("--mode", co.mode, "planar|commutative")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case));
  coproduct_cmd->add_flag("--cuts", co.cuts, "Use the admissible-cut enumeration");
  coproduct_cmd->add_option("--cap", co.cap, "Truncation weight (default: exact)");
  coproduct_cmd->add_flag("--json", co.json, "JSON output");
  coproduct_cmd->callback([&] { rc = run_coproduct(co); });

  // dse solve
  DseCfg ds;
  auto* dse_cmd = app.add_subcommand("dse", "Dyson-Schwinger equation solver");
  dse_cmd->require_subcommand(1);
  auto* solve_cmd = dse_cmd->add_subcommand("solve", "Solve X = B+(P(X))");
  solve_cmd->add_option("--series", ds.series, "P as \"1,1,1/2\" or family:alpha=..,beta=..")
      ->required();
  solve_cmd->add_option("--weight", ds.weight, "Truncation weight (default 5)");
  solve_cmd->add_option("--mode", ds.mode, "planar|commutative")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case));
  solve_cmd->add_flag("--json", ds.json, "JSON output");
  solve_cmd->callback([&] { rc = run_dse_solve(ds); });

  // hopf check / equal / bracket
  auto* hopf_cmd = app.add_subcommand("hopf", "Hopf-subalgebra verification");
  hopf_cmd->require_subcommand(1);

  HopfCheckCfg hc;
  auto* check_cmd = hopf_cmd->add_subcommand("check", "Is the generated subalgebra Hopf?");
  check_cmd->add_option("--series", hc.series, "P as \"1,1,1/2\" or family:alpha=..,beta=..")
      ->required();
  check_cmd->add_option("--weight", hc.weight, "Truncation weight (default 5)");
  check_cmd->add_option("--mode", hc.mode, "planar|commutative")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case));
  check_cmd->add_flag("--json", hc.json, "JSON output");
  check_cmd->callback([&] { rc = run_hopf_check(hc); });

  EqualCfg eq;
  auto* equal_sub = hopf_cmd->add_subcommand("equal", "Compare two family subalgebras");
  equal_sub->add_option("--a", eq.a, "First pair \"alpha,beta\"")->required();
  equal_sub->add_option("--b", eq.b, "Second pair \"alpha,beta\"")->required();
  equal_sub->add_option("--weight", eq.weight, "Truncation weight (default 5)");
  equal_sub->add_flag("--json", eq.json, "JSON output");
  equal_sub->callback([&] { rc = run_equal(eq); });

  BracketCfg br;
  auto* bracket_sub = hopf_cmd->add_subcommand("bracket", "Dual Lie bracket constants");
  bracket_sub->add_option("--beta", br.beta, "beta parameter (rational)");
  bracket_sub->add_option("--max", br.max, "Largest i+j (default 6)");
  bracket_sub->add_flag("--json", br.json, "JSON output");
  bracket_sub->callback([&] { rc = run_bracket(br); });

  // top-level aliases
  EqualCfg eq2;
  auto* equal_cmd = app.add_subcommand("equal", "Alias of `hopf equal`");
  equal_cmd->add_option("--a", eq2.a, "First pair \"alpha,beta\"")->required();
  equal_cmd->add_option("--b", eq2.b, "Second pair \"alpha,beta\"")->required();
  equal_cmd->add_option("--weight", eq2.weight, "Truncation weight (default 5)");
  equal_cmd->add_flag("--json", eq2.json, "JSON output");
  equal_cmd->callback([&] { rc = run_equal(eq2); });

  BracketCfg br2;
  auto* bracket_cmd = app.add_subcommand("bracket", "Alias of `hopf bracket`");
  bracket_cmd->add_option("--beta", br2.beta, "beta parameter (rational)");
  bracket_cmd->add_option("--max", br2.max, "Largest i+j (default 6)");
  bracket_cmd->add_flag("--json", br2.json, "JSON output");
  bracket_cmd->callback([&] { rc = run_bracket(br2); });

  // fdb multi / bracket
  auto* fdb_cmd = app.add_subcommand("fdb", "Multivariable Faa di Bruno elements");
  fdb_cmd->require_subcommand(1);

  FdbMultiCfg fm;
  auto* multi_cmd = fdb_cmd->add_subcommand("multi", "Y^i_w in decorated trees");
  multi_cmd->add_option("--d", fm.d, "Alphabet size D")->required();
  multi_cmd->add_option("--word", fm.word, "Word over 1..D, e.g. 121")->required();
  multi_cmd->add_option("--i", fm.i, "Upper index")->required();
  multi_cmd->add_flag("--verify", fm.verify, "Verify the coproduct law");
  multi_cmd->add_flag("--json", fm.json, "JSON output");
  multi_cmd->callback([&] { rc = run_fdb_multi(fm); });

  FdbBracketCfg fb;
  auto* fdb_bracket_cmd =
      fdb_cmd->add_subcommand("bracket", "Brackets of the one-variable model");
  fdb_bracket_cmd->add_option("--max", fb.max, "Largest i+j (default 8)");
  fdb_bracket_cmd->add_flag("--json", fb.json, "JSON output");
  fdb_bracket_cmd->callback([&] { rc = run_fdb_bracket(fb); });

  // selftest
  int selftest_weight = 5;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest_cmd->add_option("--weight", selftest_weight, "Order for the order-free criteria");
  selftest_cmd->callback([&] { rc = run_selftest(selftest_weight); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}

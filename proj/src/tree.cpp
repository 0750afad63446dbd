#include "ckdse/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ckdse {

const char* to_string(Mode mode) {
  return mode == Mode::planar ? "planar" : "commutative";
}

Decoration Decoration::triple(int i, int u1, int u2) {
  if (i < 1 || u1 < 1 || u2 < 1)
    throw std::invalid_argument("decoration entries must be >= 1");
  return Decoration{i, u1, u2};
}

Tree::Tree(std::vector<Tree> children, Decoration dec)
    : dec_(dec), children_(std::move(children)), weight_(1) {
  for (const Tree& c : children_) weight_ += c.weight();
}

int compare(const Tree& a, const Tree& b) {
  if (a.weight() != b.weight()) return a.weight() > b.weight() ? -1 : 1;
  if (a.decoration() != b.decoration())
    return a.decoration() < b.decoration() ? -1 : 1;
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t k = 0; k < ca.size() && k < cb.size(); ++k) {
    if (int c = compare(ca[k], cb[k]); c != 0) return c;
  }
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  return 0;
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)), weight_(0) {
  for (const Tree& t : trees_) weight_ += t.weight();
}

Forest Forest::single(Tree t) { return Forest(std::vector<Tree>{std::move(t)}); }

Forest Forest::concat(const Forest& other) const {
  std::vector<Tree> ts = trees_;
  ts.insert(ts.end(), other.trees_.begin(), other.trees_.end());
  return Forest(std::move(ts));
}

int compare(const Forest& a, const Forest& b) {
  if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
  const auto& ta = a.trees();
  const auto& tb = b.trees();
  for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
    if (int c = compare(ta[k], tb[k]); c != 0) return c;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

Tree canonicalize(const Tree& t, Mode mode) {
  if (mode == Mode::planar) return t;
  std::vector<Tree> cs;
  cs.reserve(t.children().size());
  for (const Tree& c : t.children()) cs.push_back(canonicalize(c, mode));
  std::sort(cs.begin(), cs.end(), tree_less);
  return Tree(std::move(cs), t.decoration());
}

Forest canonicalize(const Forest& f, Mode mode) {
  if (mode == Mode::planar) return f;
  std::vector<Tree> ts;
  ts.reserve(f.size());
  for (const Tree& t : f.trees()) ts.push_back(canonicalize(t, mode));
  std::sort(ts.begin(), ts.end(), tree_less);
  return Forest(std::move(ts));
}

namespace {

std::vector<Forest> forests_of_weight(int weight, Mode mode);

std::vector<Tree> build_trees(int weight, Mode mode) {
  std::vector<Tree> out;
  if (weight <= 0) return out;
  for (const Forest& f : forests_of_weight(weight - 1, mode)) out.push_back(b_plus(f));
  std::sort(out.begin(), out.end(), tree_less);
  return out;
}

// Planar forests = all words; commutative forests = non-decreasing words
// under the canonical order (i.e. trees sorted heavier-first).
void rec_forests(int remaining, Mode mode, const Tree* min_tree,
                 std::vector<Tree>& current, std::vector<Forest>& out) {
  if (remaining == 0) {
    out.push_back(Forest(current));
    return;
  }
  for (int w = remaining; w >= 1; --w) {
    for (const Tree& t : enumerate_trees(w, mode)) {
      if (mode == Mode::commutative && min_tree && compare(t, *min_tree) < 0)
        continue;  // would break the sorted-multiset form
      current.push_back(t);
      rec_forests(remaining - w, mode, mode == Mode::commutative ? &t : nullptr,
                  current, out);
      current.pop_back();
    }
  }
}

std::vector<Forest> forests_of_weight(int weight, Mode mode) {
  std::vector<Forest> out;
  if (weight == 0) {
    out.push_back(Forest());
    return out;
  }
  std::vector<Tree> current;
  rec_forests(weight, mode, nullptr, current, out);
  std::sort(out.begin(), out.end(), forest_less);
  return out;
}

}  // namespace

const std::vector<Tree>& enumerate_trees(int weight, Mode mode) {
  static std::map<std::pair<int, int>, std::vector<Tree>> cache;
  static std::mutex mu;
  auto key = std::make_pair(weight, static_cast<int>(mode));
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // Built outside the lock: the recursion re-enters through lower weights.
  std::vector<Tree> built = build_trees(weight, mode);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(built)).first->second;
}

std::vector<Forest> enumerate_forests(int weight, Mode mode) {
  if (weight < 0) return {};
  return forests_of_weight(weight, mode);
}

Tree b_plus(const Forest& f, Decoration root) { return Tree(f.trees(), root); }

Forest b_minus(const Tree& t) { return Forest(t.children()); }

Integer tree_factorial(const Tree& t) {
  Integer r = factorial(static_cast<unsigned long>(t.fertility()));
  for (const Tree& c : t.children()) r *= tree_factorial(c);
  return r;
}

Integer tree_factorial(const Forest& f) {
  Integer r = 1;
  for (const Tree& t : f.trees()) r *= tree_factorial(t);
  return r;
}

Rational beta_int_factorial(int n, const Rational& beta) {
  Rational r = 1;
  for (int i = 1; i <= n; ++i) r *= Rational(1) + beta * (i - 1);
  return r;
}

Rational beta_factorial(const Tree& t, const Rational& beta) {
  Rational r = beta_int_factorial(t.fertility(), beta);
  for (const Tree& c : t.children()) r *= beta_factorial(c, beta);
  return r;
}

Rational beta_factorial(const Forest& f, const Rational& beta) {
  Rational r = 1;
  for (const Tree& t : f.trees()) r *= beta_factorial(t, beta);
  return r;
}

Tree ladder(int n) {
  if (n < 1) throw std::invalid_argument("ladder: weight must be >= 1");
  Tree t;
  for (int k = 1; k < n; ++k) t = Tree(std::vector<Tree>{t});
  return t;
}

bool is_ladder(const Tree& t) {
  const Tree* cur = &t;
  while (cur->fertility() <= 1) {
    if (cur->fertility() == 0) return true;
    cur = &cur->children()[0];
  }
  return false;
}

std::string to_text(const Tree& t) {
  std::string s = "[";
  if (!t.decoration().is_unit()) {
    const Decoration& d = t.decoration();
    s += std::to_string(d.i) + ",(" + std::to_string(d.u1) + "," +
         std::to_string(d.u2) + ")";
    if (!t.children().empty()) s += " ";
  }
  for (const Tree& c : t.children()) s += to_text(c);
  return s + "]";
}

std::string to_text(const Forest& f) {
  if (f.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) s += " ";
    s += to_text(f.trees()[k]);
  }
  return s;
}

}  // namespace ckdse

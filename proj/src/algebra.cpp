#include "ckdse/algebra.hpp"

#include <mutex>
#include <stdexcept>

namespace ckdse {

namespace {

void require_same_mode(Mode a, Mode b, const char* op) {
  if (a != b)
    throw std::invalid_argument(std::string(op) + ": mode mismatch");
}

}  // namespace

AlgebraElement AlgebraElement::one(Mode mode) {
  AlgebraElement e(mode);
  e.add_term(Forest(), Rational(1));
  return e;
}

AlgebraElement AlgebraElement::from_forest(Forest f, Mode mode, Rational coeff) {
  AlgebraElement e(mode);
  e.add_term(f, coeff);
  return e;
}

AlgebraElement AlgebraElement::from_tree(Tree t, Mode mode, Rational coeff) {
  return from_forest(Forest::single(std::move(t)), mode, std::move(coeff));
}

Rational AlgebraElement::coefficient(const Forest& f) const {
  auto it = terms_.find(canonicalize(f, mode_));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational AlgebraElement::coefficient(const Tree& t) const {
  return coefficient(Forest::single(t));
}

std::optional<int> AlgebraElement::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.weight();  // keys sorted weight-first
}

int AlgebraElement::max_weight() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

AlgebraElement AlgebraElement::graded_component(int n) const {
  AlgebraElement r(mode_);
  for (const auto& [f, c] : terms_)
    if (f.weight() == n) r.terms_.emplace(f, c);
  return r;
}

AlgebraElement AlgebraElement::truncated(int weight_cap) const {
  AlgebraElement r(mode_);
  for (const auto& [f, c] : terms_)
    if (f.weight() <= weight_cap) r.terms_.emplace(f, c);
  return r;
}

void AlgebraElement::add_term(const Forest& f, const Rational& coeff) {
  if (ckdse::is_zero(coeff)) return;
  Forest key = canonicalize(f, mode_);
  auto [it, inserted] = terms_.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (ckdse::is_zero(it->second)) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_mode(mode_, other.mode_, "add");
  for (const auto& [f, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(f, c);
    if (!inserted) {
      it->second += c;
      if (ckdse::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_mode(mode_, other.mode_, "subtract");
  for (const auto& [f, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(f, -c);
    if (!inserted) {
      it->second -= c;
      if (ckdse::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (ckdse::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [f, v] : terms_) v *= c;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return product(a, b);
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.mode() == b.mode() && a.terms() == b.terms();
}

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_mode(a.mode(), b.mode(), "product");
  AlgebraElement r(a.mode());
  for (const auto& [fa, ca] : a.terms())
    for (const auto& [fb, cb] : b.terms()) r.add_term(fa.concat(fb), ca * cb);
  return r;
}

Rational counit(const AlgebraElement& x) { return x.coefficient(Forest()); }

Rational z_functional(const AlgebraElement& x) {
  return x.coefficient(Forest::single(Tree()));
}

AlgebraElement abelianize(const AlgebraElement& x) {
  if (x.mode() == Mode::commutative) return x;
  AlgebraElement r(Mode::commutative);
  for (const auto& [f, c] : x.terms()) r.add_term(f, c);
  return r;
}

AlgebraElement b_plus_element(const AlgebraElement& x, Decoration root) {
  AlgebraElement r(x.mode());
  for (const auto& [f, c] : x.terms())
    r.add_term(Forest::single(b_plus(f, root)), c);
  return r;
}

AlgebraElement b_minus_element(const AlgebraElement& x) {
  AlgebraElement r(x.mode());
  for (const auto& [f, c] : x.terms()) {
    if (f.size() != 1)
      throw std::invalid_argument("b_minus: term is not a single tree");
    r.add_term(b_minus(f.trees()[0]), c);
  }
  return r;
}

AlgebraElement substitute_series(const TruncatedSeries& p, const AlgebraElement& x,
                                 int weight_cap) {
  auto val = x.valuation();
  if (val.has_value() && *val < 1)
    throw std::invalid_argument("substitute_series: argument has weight-0 part");
  AlgebraElement acc = AlgebraElement::zero(x.mode());
  acc += p[0] * AlgebraElement::one(x.mode());
  AlgebraElement pw = AlgebraElement::one(x.mode());
  int kmax = std::min(p.order(), weight_cap);
  for (int k = 1; k <= kmax; ++k) {
    pw = product(pw, x).truncated(weight_cap);
    if (pw.is_zero()) break;
    if (!is_zero(p[k])) acc += p[k] * pw;
  }
  return acc;
}

AlgebraElement element_power(const AlgebraElement& x, const Rational& gamma,
                             int weight_cap) {
  if (counit(x) != 1)
    throw std::invalid_argument("element_power: weight-0 part must be 1");
  AlgebraElement u = x - AlgebraElement::one(x.mode());
  return substitute_series(binomial_series(gamma, weight_cap), u, weight_cap);
}

Rational TensorElement::coefficient(const Forest& left, const Forest& right) const {
  auto it = terms_.find({canonicalize(left, mode_), canonicalize(right, mode_)});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Forest& left, const Forest& right,
                             const Rational& coeff) {
  if (ckdse::is_zero(coeff)) return;
  Key key{canonicalize(left, mode_), canonicalize(right, mode_)};
  auto [it, inserted] = terms_.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (ckdse::is_zero(it->second)) terms_.erase(it);
  }
}

TensorElement TensorElement::truncated(int total_weight_cap) const {
  TensorElement r(mode_);
  for (const auto& [k, c] : terms_)
    if (k.first.weight() + k.second.weight() <= total_weight_cap)
      r.terms_.emplace(k, c);
  return r;
}

TensorElement TensorElement::bigraded_component(int left_weight,
                                                int right_weight) const {
  TensorElement r(mode_);
  for (const auto& [k, c] : terms_)
    if (k.first.weight() == left_weight && k.second.weight() == right_weight)
      r.terms_.emplace(k, c);
  return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  require_same_mode(mode_, other.mode_, "add");
  for (const auto& [k, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (ckdse::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
  require_same_mode(mode_, other.mode_, "subtract");
  for (const auto& [k, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (ckdse::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
  if (ckdse::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.mode() == b.mode() && a.terms() == b.terms();
}

TensorElement product(const TensorElement& a, const TensorElement& b) {
  require_same_mode(a.mode(), b.mode(), "tensor product");
  TensorElement r(a.mode());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      r.add_term(ka.first.concat(kb.first), ka.second.concat(kb.second), ca * cb);
  return r;
}

TensorElement tensor_of(const AlgebraElement& left, const AlgebraElement& right) {
  require_same_mode(left.mode(), right.mode(), "tensor_of");
  TensorElement r(left.mode());
  for (const auto& [fl, cl] : left.terms())
    for (const auto& [fr, cr] : right.terms()) r.add_term(fl, fr, cl * cr);
  return r;
}

TensorElement abelianize(const TensorElement& x) {
  if (x.mode() == Mode::commutative) return x;
  TensorElement r(Mode::commutative);
  for (const auto& [k, c] : x.terms()) r.add_term(k.first, k.second, c);
  return r;
}

namespace {

TensorElement coproduct_forest(const Forest& f, Mode mode, int weight_cap);

// Full coproduct of a single tree via the cocycle recursion, memoized.
const TensorElement& coproduct_tree_memo(const Tree& t, Mode mode) {
  using MemoKey = std::pair<int, Tree>;
  struct MemoLess {
    bool operator()(const MemoKey& a, const MemoKey& b) const {
      if (a.first != b.first) return a.first < b.first;
      return tree_less(a.second, b.second);
    }
  };
  static std::map<MemoKey, TensorElement, MemoLess> memo;
  static std::mutex mu;

  MemoKey key{static_cast<int>(mode), t};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  TensorElement inner = coproduct_forest(b_minus(t), mode, t.weight());
  TensorElement result(mode);
  for (const auto& [k, c] : inner.terms())
    result.add_term(k.first, Forest::single(b_plus(k.second, t.decoration())), c);
  result.add_term(Forest::single(t), Forest(), Rational(1));

  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

TensorElement coproduct_forest(const Forest& f, Mode mode, int weight_cap) {
  TensorElement acc(mode);
  acc.add_term(Forest(), Forest(), Rational(1));
  for (const Tree& t : f.trees()) {
    acc = product(acc, coproduct_tree_memo(t, mode)).truncated(weight_cap);
  }
  return acc;
}

}  // namespace

TensorElement coproduct(const Tree& t, Mode mode) {
  return coproduct_tree_memo(canonicalize(t, mode), mode);
}

TensorElement coproduct(const AlgebraElement& x, int weight_cap) {
  TensorElement r(x.mode());
  for (const auto& [f, c] : x.terms()) {
    if (f.weight() > weight_cap) continue;
    TensorElement d = coproduct_forest(f, x.mode(), weight_cap);
    d *= c;
    r += d;
  }
  return r;
}

TensorElement coproduct(const AlgebraElement& x) {
  return coproduct(x, x.max_weight());
}

namespace {

// Flat view of a tree for the cut oracle: vertices in preorder, with
// parent links and subtree extents.
struct FlatTree {
  std::vector<int> parent;             // -1 for the root
  std::vector<Decoration> dec;
  std::vector<int> subtree_end;        // preorder range [v, subtree_end[v])
};

int flatten(const Tree& t, int parent, FlatTree& out) {
  int id = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  out.dec.push_back(t.decoration());
  out.subtree_end.push_back(0);
  for (const Tree& c : t.children()) flatten(c, id, out);
  out.subtree_end[static_cast<std::size_t>(id)] =
      static_cast<int>(out.parent.size());
  return id;
}

// Rebuilds the subtree at v, skipping vertices whose edge is cut.
Tree rebuild(const FlatTree& ft, int v, const std::vector<bool>& cut) {
  std::vector<Tree> children;
  for (int u = v + 1; u < ft.subtree_end[static_cast<std::size_t>(v)];
       u = ft.subtree_end[static_cast<std::size_t>(u)]) {
    if (!cut[static_cast<std::size_t>(u)])
      children.push_back(rebuild(ft, u, cut));
  }
  return Tree(std::move(children), ft.dec[static_cast<std::size_t>(v)]);
}

}  // namespace

TensorElement coproduct_by_cuts(const Tree& t, Mode mode) {
  Tree ct = canonicalize(t, mode);
  FlatTree ft;
  flatten(ct, -1, ft);
  int n = static_cast<int>(ft.parent.size());

  TensorElement r(mode);
  r.add_term(Forest::single(ct), Forest(), Rational(1));
  r.add_term(Forest(), Forest::single(ct), Rational(1));

  // Each non-root vertex stands for the edge above it; a cut is a set of
  // such vertices no two of which are in ancestor relation.
  std::vector<int> nonroot;
  for (int v = 1; v < n; ++v) nonroot.push_back(v);
  int m = static_cast<int>(nonroot.size());
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<bool> cut(static_cast<std::size_t>(n), false);
    for (int k = 0; k < m; ++k)
      if (mask & (1ul << k)) cut[static_cast<std::size_t>(nonroot[k])] = true;
    bool admissible = true;
    for (int v = 1; v < n && admissible; ++v) {
      if (!cut[static_cast<std::size_t>(v)]) continue;
      for (int a = ft.parent[static_cast<std::size_t>(v)]; a > 0;
           a = ft.parent[static_cast<std::size_t>(a)]) {
        if (cut[static_cast<std::size_t>(a)]) {
          admissible = false;  // two cut edges on one root-to-leaf path
          break;
        }
      }
    }
    if (!admissible) continue;
    std::vector<Tree> pruned;  // cut subtrees in preorder = planar order
    for (int v = 1; v < n; ++v)
      if (cut[static_cast<std::size_t>(v)]) pruned.push_back(rebuild(ft, v, cut));
    r.add_term(Forest(std::move(pruned)), Forest::single(rebuild(ft, 0, cut)),
               Rational(1));
  }
  return r;
}

AlgebraElement contract_counit_left(const TensorElement& x) {
  AlgebraElement r(x.mode());
  for (const auto& [k, c] : x.terms())
    if (k.first.empty()) r.add_term(k.second, c);
  return r;
}

AlgebraElement contract_counit_right(const TensorElement& x) {
  AlgebraElement r(x.mode());
  for (const auto& [k, c] : x.terms())
    if (k.second.empty()) r.add_term(k.first, c);
  return r;
}

std::string to_text(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [f, c] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c) + "*" + to_text(f);
  }
  return out;
}

std::string to_text(const TensorElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    if (!first) out += " + ";
    first = false;
    out += to_string(c) + "*(" + to_text(k.first) + " (x) " + to_text(k.second) + ")";
  }
  return out;
}

}  // namespace ckdse

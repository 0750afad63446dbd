#include "ckdse/fdbmulti.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "ckdse/dse.hpp"

namespace ckdse::fdb {

namespace {

void require_letters(const Word& w, int d, int i) {
  if (w.empty()) throw std::invalid_argument("word must be non-empty");
  if (i < 1 || i > d) throw std::invalid_argument("index out of alphabet range");
  for (int u : w)
    if (u < 1 || u > d) throw std::invalid_argument("letter out of alphabet range");
}

AlgebraElement y_element_fresh(int i, const Word& w, int d) {
  if (w.size() == 1)
    return w[0] == i ? AlgebraElement::one(Mode::planar)
                     : AlgebraElement::zero(Mode::planar);
  AlgebraElement acc(Mode::planar);
  for (int a = 1; a <= d; ++a) {
    for (int b = 1; b <= d; ++b) {
      Decoration root = Decoration::triple(i, a, b);
      for (std::size_t cut = 1; cut < w.size(); ++cut) {
        Word w1(w.begin(), w.begin() + static_cast<long>(cut));
        Word w2(w.begin() + static_cast<long>(cut), w.end());
        AlgebraElement inner =
            product(y_element(a, w1, d), y_element(b, w2, d));
        acc += b_plus_element(inner, root);
      }
    }
  }
  return acc;
}

}  // namespace

std::string to_string(const Word& w) {
  std::string s;
  for (int u : w) s += std::to_string(u);
  return s;
}

AlgebraElement y_element(int i, const Word& w, int d) {
  require_letters(w, d, i);
  using Key = std::tuple<int, int, Word>;
  static std::map<Key, AlgebraElement> memo;
  static std::mutex mu;
  Key key{d, i, w};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  AlgebraElement e = y_element_fresh(i, w, d);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(std::move(key), std::move(e)).first->second;
}

bool verify_multi_coproduct(int i, const Word& w, int d) {
  require_letters(w, d, i);
  TensorElement lhs = coproduct(y_element(i, w, d));

  TensorElement rhs(Mode::planar);
  int n = static_cast<int>(w.size());
  // Splittings w = w_1...w_k into non-empty blocks: one bit per inner gap.
  for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
    std::vector<Word> blocks;
    Word cur{w[0]};
    for (int pos = 1; pos < n; ++pos) {
      if (mask & (1ul << (pos - 1))) {
        blocks.push_back(cur);
        cur.clear();
      }
      cur.push_back(w[static_cast<std::size_t>(pos)]);
    }
    blocks.push_back(cur);
    int k = static_cast<int>(blocks.size());

    std::vector<int> letters(static_cast<std::size_t>(k), 1);
    while (true) {
      AlgebraElement left = AlgebraElement::one(Mode::planar);
      for (int l = 0; l < k && !left.is_zero(); ++l)
        left = product(left, y_element(letters[static_cast<std::size_t>(l)],
                                       blocks[static_cast<std::size_t>(l)], d));
      if (!left.is_zero()) {
        Word alpha(letters.begin(), letters.end());
        rhs += tensor_of(left, y_element(i, alpha, d));
      }
      int pos = 0;
      while (pos < k && letters[static_cast<std::size_t>(pos)] == d) {
        letters[static_cast<std::size_t>(pos)] = 1;
        ++pos;
      }
      if (pos == k) break;
      ++letters[static_cast<std::size_t>(pos)];
    }
  }
  return lhs == rhs;
}

namespace {

void require_decorated(const Tree& t) {
  if (t.decoration().is_unit())
    throw std::invalid_argument("tree is not decorated");
  for (const Tree& c : t.children()) require_decorated(c);
}

bool admissible_rec(const Tree& t) {
  const Decoration& d = t.decoration();
  switch (t.fertility()) {
    case 0:
      return true;
    case 1: {
      int c = t.children()[0].decoration().i;
      if (c != d.u1 && c != d.u2) return false;
      return admissible_rec(t.children()[0]);
    }
    case 2: {
      if (t.children()[0].decoration().i != d.u1) return false;
      if (t.children()[1].decoration().i != d.u2) return false;
      return admissible_rec(t.children()[0]) && admissible_rec(t.children()[1]);
    }
    default:
      return false;
  }
}

}  // namespace

bool is_admissible(const Tree& t) {
  require_decorated(t);
  return admissible_rec(t);
}

std::set<Word> words_of(const Tree& t) {
  if (!is_admissible(t)) throw std::invalid_argument("words_of: tree not admissible");
  const Decoration& d = t.decoration();
  std::set<Word> out;
  switch (t.fertility()) {
    case 0:
      out.insert(Word{d.u1, d.u2});
      break;
    case 1: {
      const Tree& child = t.children()[0];
      std::set<Word> inner = words_of(child);
      if (child.decoration().i == d.u1) {
        for (const Word& w : inner) {
          Word e = w;
          e.push_back(d.u2);
          out.insert(std::move(e));
        }
      }
      if (child.decoration().i == d.u2) {
        for (const Word& w : inner) {
          Word e{d.u1};
          e.insert(e.end(), w.begin(), w.end());
          out.insert(std::move(e));
        }
      }
      break;
    }
    case 2: {
      std::set<Word> left = words_of(t.children()[0]);
      std::set<Word> right = words_of(t.children()[1]);
      for (const Word& a : left)
        for (const Word& b : right) {
          Word e = a;
          e.insert(e.end(), b.begin(), b.end());
          out.insert(std::move(e));
        }
      break;
    }
    default:
      break;
  }
  return out;
}

const std::vector<Tree>& admissible_trees(int weight, int d) {
  static std::map<std::pair<int, int>, std::vector<Tree>> cache;
  static std::mutex mu;
  auto key = std::make_pair(weight, d);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  std::vector<Tree> out;
  if (weight >= 1) {
    for (int i = 1; i <= d; ++i) {
      for (int a = 1; a <= d; ++a) {
        for (int b = 1; b <= d; ++b) {
          Decoration root = Decoration::triple(i, a, b);
          if (weight == 1) {
            out.push_back(Tree({}, root));
            continue;
          }
          for (const Tree& c : admissible_trees(weight - 1, d)) {
            if (c.decoration().i == a || c.decoration().i == b)
              out.push_back(Tree({c}, root));
          }
          for (int w1 = 1; w1 <= weight - 2; ++w1) {
            for (const Tree& l : admissible_trees(w1, d)) {
              if (l.decoration().i != a) continue;
              for (const Tree& r : admissible_trees(weight - 1 - w1, d)) {
                if (r.decoration().i != b) continue;
                out.push_back(Tree({l, r}, root));
              }
            }
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), tree_less);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

AlgebraElement generic_reconstruct(int i, const Word& w, int d) {
  require_letters(w, d, i);
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] == w[b])
        throw std::invalid_argument("generic_reconstruct: letters must be distinct");
  if (w.size() == 1) return y_element(i, w, d);

  AlgebraElement acc(Mode::planar);
  for (const Tree& t : admissible_trees(static_cast<int>(w.size()) - 1, d)) {
    if (t.decoration().i != i) continue;
    if (words_of(t).count(w)) acc.add_term(Forest::single(t), Rational(1));
  }
  return acc;
}

Tree strip_decorations(const Tree& t) {
  std::vector<Tree> cs;
  cs.reserve(t.children().size());
  for (const Tree& c : t.children()) cs.push_back(strip_decorations(c));
  return Tree(std::move(cs));
}

AlgebraElement strip_decorations(const AlgebraElement& x) {
  AlgebraElement r(x.mode());
  for (const auto& [f, c] : x.terms()) {
    std::vector<Tree> ts;
    ts.reserve(f.size());
    for (const Tree& t : f.trees()) ts.push_back(strip_decorations(t));
    r.add_term(Forest(std::move(ts)), c);
  }
  return r;
}

bool d1_reduction(int weight_cap) {
  if (weight_cap < 2) throw std::invalid_argument("d1_reduction: weight cap >= 2");
  TruncatedSeries p({Rational(1), Rational(2), Rational(1)});
  const dse::DseSolution& sol = dse::solve(p, weight_cap, Mode::planar);
  for (int n = 1; n <= weight_cap; ++n) {
    Word w(static_cast<std::size_t>(n) + 1, 1);
    AlgebraElement yn = strip_decorations(y_element(1, w, 1));
    if (yn != sol.a(n)) return false;
  }
  return true;
}

}  // namespace ckdse::fdb

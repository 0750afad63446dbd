#include "ckdse/json_io.hpp"

namespace ckdse::io {

Json to_json(const Tree& t) {
  Json j;
  if (t.decoration().is_unit()) {
    j["d"] = nullptr;
  } else {
    j["d"] = Json::array({t.decoration().i, t.decoration().u1, t.decoration().u2});
  }
  Json children = Json::array();
  for (const Tree& c : t.children()) children.push_back(to_json(c));
  j["c"] = std::move(children);
  return j;
}

Json to_json(const Forest& f) {
  Json j = Json::array();
  for (const Tree& t : f.trees()) j.push_back(to_json(t));
  return j;
}

Json to_json(const AlgebraElement& x) {
  Json j = Json::array();
  for (const auto& [f, c] : x.terms()) {
    Json term;
    term["forest"] = to_json(f);
    term["coeff"] = to_string(c);
    j.push_back(std::move(term));
  }
  return j;
}

Json to_json(const TensorElement& x) {
  Json j = Json::array();
  for (const auto& [k, c] : x.terms()) {
    Json term;
    term["left"] = to_json(k.first);
    term["right"] = to_json(k.second);
    term["coeff"] = to_string(c);
    j.push_back(std::move(term));
  }
  return j;
}

Json to_json(const hopf::HopfVerdict& v) {
  Json j;
  j["pass"] = v.pass;
  j["mode"] = ckdse::to_string(v.mode);
  j["weight"] = v.weight_cap;
  j["candidate_alpha"] =
      v.candidate_alpha ? Json(to_string(*v.candidate_alpha)) : Json(nullptr);
  j["candidate_beta"] =
      v.candidate_beta ? Json(to_string(*v.candidate_beta)) : Json(nullptr);
  j["matches_family"] = v.matches_family ? Json(*v.matches_family) : Json(nullptr);
  j["failing_weight"] = v.failing_weight ? Json(*v.failing_weight) : Json(nullptr);
  j["residual"] = v.residual ? to_json(*v.residual) : Json(nullptr);
  return j;
}

namespace {

const Json& require_field(const Json& j, const char* name, const std::string& path) {
  if (!j.is_object()) throw DecodeError(path, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw DecodeError(path, std::string("missing field \"") + name + "\"");
  return *it;
}

Rational coeff_from_json(const Json& j, const std::string& path) {
  if (!j.is_string()) throw DecodeError(path, "coefficient must be a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DecodeError(path, e.what());
  }
}

}  // namespace

Tree tree_from_json(const Json& j, const std::string& path) {
  const Json& d = require_field(j, "d", path);
  Decoration dec = Decoration::unit();
  if (!d.is_null()) {
    if (!d.is_array() || d.size() != 3 || !d[0].is_number_integer() ||
        !d[1].is_number_integer() || !d[2].is_number_integer())
      throw DecodeError(path + ".d", "decoration must be null or [i,u1,u2]");
    try {
      dec = Decoration::triple(d[0].get<int>(), d[1].get<int>(), d[2].get<int>());
    } catch (const std::invalid_argument& e) {
      throw DecodeError(path + ".d", e.what());
    }
  }
  const Json& c = require_field(j, "c", path);
  if (!c.is_array()) throw DecodeError(path + ".c", "children must be an array");
  std::vector<Tree> children;
  for (std::size_t k = 0; k < c.size(); ++k)
    children.push_back(tree_from_json(c[k], path + ".c[" + std::to_string(k) + "]"));
  return Tree(std::move(children), dec);
}

Forest forest_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw DecodeError(path, "forest must be an array of trees");
  std::vector<Tree> trees;
  for (std::size_t k = 0; k < j.size(); ++k)
    trees.push_back(tree_from_json(j[k], path + "[" + std::to_string(k) + "]"));
  return Forest(std::move(trees));
}

AlgebraElement element_from_json(const Json& j, Mode mode, const std::string& path) {
  if (!j.is_array()) throw DecodeError(path, "element must be an array of terms");
  AlgebraElement x(mode);
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string tp = path + "[" + std::to_string(k) + "]";
    Forest f = forest_from_json(require_field(j[k], "forest", tp), tp + ".forest");
    x.add_term(f, coeff_from_json(require_field(j[k], "coeff", tp), tp + ".coeff"));
  }
  return x;
}

TensorElement tensor_from_json(const Json& j, Mode mode, const std::string& path) {
  if (!j.is_array()) throw DecodeError(path, "tensor must be an array of terms");
  TensorElement x(mode);
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string tp = path + "[" + std::to_string(k) + "]";
    Forest l = forest_from_json(require_field(j[k], "left", tp), tp + ".left");
    Forest r = forest_from_json(require_field(j[k], "right", tp), tp + ".right");
    x.add_term(l, r, coeff_from_json(require_field(j[k], "coeff", tp), tp + ".coeff"));
  }
  return x;
}

}  // namespace ckdse::io

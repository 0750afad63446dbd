#pragma once

#include <json.hpp>

#include <stdexcept>

#include "ckdse/hopfcheck.hpp"

namespace ckdse::io {

using Json = nlohmann::ordered_json;

// Decode failure carrying the JSON path of the offending node.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Tree: {"d": null | [i,u1,u2], "c": [children]}. Forest: array of
// trees, the empty forest is []. Elements: [{"forest": F, "coeff":
// "p/q"}]; tensors carry "left"/"right" forests instead.
Json to_json(const Tree& t);
Json to_json(const Forest& f);
Json to_json(const AlgebraElement& x);
Json to_json(const TensorElement& x);
Json to_json(const hopf::HopfVerdict& v);

Tree tree_from_json(const Json& j, const std::string& path = "$");
Forest forest_from_json(const Json& j, const std::string& path = "$");
AlgebraElement element_from_json(const Json& j, Mode mode,
                                 const std::string& path = "$");
TensorElement tensor_from_json(const Json& j, Mode mode,
                               const std::string& path = "$");

}  // namespace ckdse::io

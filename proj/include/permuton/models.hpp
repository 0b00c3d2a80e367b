#pragma once

/**
 * @file models.hpp
 * @brief Named built-in group models.
 *
 * The A5 models all list the image of a = (1,2,3,4,5) first and of
 * b = (1,2)(3,4) second, so the 3 / 3' naming agrees between them.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permuton/perm_group.hpp"

namespace permuton {

struct NamedModel {
  std::string name;
  std::string description;
  std::size_t degree;
  std::vector<std::string> generators;  // cycle notation

  GroupDefinition definition() const {
    GroupDefinition def;
    def.degree = degree;
    for (const auto& g : generators) def.generators.push_back(parse_cycles(g, degree));
    return def;
  }
};

inline const std::vector<NamedModel>& builtin_models() {
  static const std::vector<NamedModel> models = {
      {"s3-natural", "S3 permuting three points", 3, {"(2,3)", "(1,3,2)"}},
      {"a5-5", "A5 on five points", 5, {"(1,2,3,4,5)", "(1,2)(3,4)"}},
      {"a5-6", "A5 on the six antipodal vertex pairs", 6, {"(2,3,4,5,6)", "(1,2)(3,6)"}},
      {"a5-10", "A5 on the ten 2-subsets of five points", 10,
       {"(1,5,8,10,4)(2,6,9,3,7)", "(2,6)(3,5)(4,7)(9,10)"}},
      {"a5-icosahedron", "A5 rotating the twelve icosahedron vertices", 12,
       {"(2,3,4,5,6)(8,9,10,11,12)", "(1,2)(3,6)(4,10)(5,11)(7,8)(9,12)"}},
  };
  return models;
}

inline std::optional<NamedModel> find_model(std::string_view name) {
  for (const auto& m : builtin_models())
    if (m.name == name) return m;
  return std::nullopt;
}

/// Closure of a named model; throws invalid_argument for unknown names.
inline PermGroup model_group(std::string_view name) {
  auto m = find_model(name);
  if (!m) throw Error(ErrorKind::invalid_argument, "unknown built-in model '" + std::string(name) + "'");
  return closure(m->definition());
}

}  // namespace permuton

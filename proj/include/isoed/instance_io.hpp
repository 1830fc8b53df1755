#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "isoed/abvar.hpp"

namespace isoed {

/// A parsed instance file: one variety and an isogeny from it.
struct Instance {
  std::string name;
  std::shared_ptr<const AbelianVariety> variety;
  Isogeny isogeny;
  /// Set when the file used {"kind": "mult"}.
  std::optional<Integer> multiplier;
};

/// Parses the JSON instance schema. Unknown fields are rejected.
/// Throws MalformedSpec, UnsaturatedSubvariety, OddRankSubvariety, SingularMatrix.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

/// Inverse of parse_instance.
nlohmann::ordered_json instance_to_json(const Instance& instance);

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms are accepted on input.
nlohmann::ordered_json integer_to_json(const Integer& value);

}  // namespace isoed

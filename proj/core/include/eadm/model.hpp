#pragma once

#include "eadm/core.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eadm {

enum class ModelErrorCode {
  bad_json,
  bad_version,
  missing_field,
  bad_type,
  bad_outcomes,
  unknown_option,
  length_mismatch,
  overlap,
  empty_side,
  malformed_number,
};

std::string_view to_string(ModelErrorCode code);

// Parse or validation failure, carrying a distinct code and the offending
// location ("options.w1[2]", "assessment[0].keep", ...).
class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorCode code, std::string location, const std::string& message);

  ModelErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ModelErrorCode code_;
  std::string location_;
};

// One assessment entry as written in the document, by option name.
struct ModelEntry {
  std::vector<std::string> keep;
  std::vector<std::string> reject;

  bool operator==(const ModelEntry&) const = default;
};

// In-memory form of a model document: outcome labels, named option
// vectors in document order, and the assessment both by name and as core
// values.
struct Model {
  OutcomeSpace outcomes;
  std::vector<std::string> option_names;
  std::vector<Option> option_values;  // parallel to option_names
  std::vector<ModelEntry> entries;
  Assessment assessment;

  const Option* find_option(std::string_view name) const;
  // Builds an option set from names; throws ModelError(unknown_option).
  OptionSet option_set(const std::vector<std::string>& names) const;
};

inline constexpr std::string_view kModelFormat = "eadm-model/1";

// Parses a model document. Numbers may be integers, "a/b" fractions or
// decimal text (quoted or not); decimal text converts to exact rationals
// without a detour through binary floating point.
Model parse_model(std::string_view text);

Model load_model(const std::string& path);

// Document that parses back to an identical model (exact values, same
// order). Non-integer values are written as "a/b" strings.
std::string serialize_model(const Model& model);

}  // namespace eadm

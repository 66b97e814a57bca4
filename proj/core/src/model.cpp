#include "eadm/model.hpp"

#include "eadm/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace eadm {
namespace {

using ordered_json = nlohmann::ordered_json;

// SAX DOM builder that records every JSON float as its raw token text, so
// decimal literals reach the rational parser verbatim instead of being
// rounded through a double first. Integer literals too large for 64 bits
// arrive the same way.
class RawNumberDom {
 public:
  using number_integer_t = ordered_json::number_integer_t;
  using number_unsigned_t = ordered_json::number_unsigned_t;
  using number_float_t = ordered_json::number_float_t;
  using string_t = ordered_json::string_t;
  using binary_t = ordered_json::binary_t;

  ordered_json take() && { return std::move(root_); }

  bool null() { return add(nullptr); }
  bool boolean(bool val) { return add(val); }
  bool number_integer(number_integer_t val) { return add(val); }
  bool number_unsigned(number_unsigned_t val) { return add(val); }
  bool number_float(number_float_t, const string_t& raw) { return add(raw); }
  bool string(string_t& val) { return add(val); }
  bool binary(binary_t&) { return add(nullptr); }

  bool start_object(std::size_t) { return push(ordered_json::object()); }
  bool key(string_t& val) {
    key_ = val;
    return true;
  }
  bool end_object() { return pop(); }
  bool start_array(std::size_t) { return push(ordered_json::array()); }
  bool end_array() { return pop(); }

  bool parse_error(std::size_t /*position*/, const std::string& /*last_token*/,
                   const nlohmann::detail::exception& ex) {
    throw ModelError(ModelErrorCode::bad_json, "", ex.what());
  }

 private:
  // Inserts into the open container (or the root) and returns where the
  // value landed. Container nodes stay put while they are being filled, so
  // the returned pointer is stable for the duration of its scope.
  ordered_json* place(ordered_json&& value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    ordered_json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    ordered_json& slot = top[key_];
    slot = std::move(value);
    return &slot;
  }

  template <typename T>
  bool add(T&& value) {
    place(ordered_json(std::forward<T>(value)));
    return true;
  }

  bool push(ordered_json&& container) {
    stack_.push_back(place(std::move(container)));
    return true;
  }

  bool pop() {
    stack_.pop_back();
    return true;
  }

  ordered_json root_;
  std::vector<ordered_json*> stack_;
  std::string key_;
};

const ordered_json& require(const ordered_json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw ModelError(ModelErrorCode::missing_field, name,
                     std::string("missing required field \"") + name + '"');
  }
  return *it;
}

Rational number_at(const ordered_json& node, const std::string& where) {
  if (node.is_number_unsigned()) {
    return Rational(static_cast<unsigned long>(node.get<std::uint64_t>()));
  }
  if (node.is_number_integer()) {
    return Rational(static_cast<long>(node.get<std::int64_t>()));
  }
  if (node.is_string()) {
    const auto& text = node.get_ref<const std::string&>();
    if (auto q = parse_rational(text)) {
      return *q;
    }
    throw ModelError(ModelErrorCode::malformed_number, where,
                     where + ": cannot read \"" + text + "\" as a number");
  }
  throw ModelError(ModelErrorCode::bad_type, where,
                   where + ": expected an integer, \"p/q\" or decimal string");
}

std::vector<std::string> name_list(const ordered_json& node, const std::string& where) {
  if (!node.is_array()) {
    throw ModelError(ModelErrorCode::bad_type, where, where + ": expected an array of option names");
  }
  std::vector<std::string> names;
  names.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const ordered_json& element = node[i];
    std::string slot = where + '[' + std::to_string(i) + ']';
    if (!element.is_string()) {
      throw ModelError(ModelErrorCode::bad_type, slot, slot + ": option names must be strings");
    }
    names.push_back(element.get<std::string>());
  }
  return names;
}

// True when the rational is an integer representable as a JSON number.
bool fits_json_integer(const Rational& q) {
  return q.get_den() == 1 && q.get_num().fits_slong_p();
}

ordered_json value_node(const Rational& q) {
  if (fits_json_integer(q)) {
    return ordered_json(static_cast<std::int64_t>(q.get_num().get_si()));
  }
  return ordered_json(to_string(q));
}

}  // namespace

std::string_view to_string(ModelErrorCode code) {
  switch (code) {
    case ModelErrorCode::bad_json: return "bad_json";
    case ModelErrorCode::bad_version: return "bad_version";
    case ModelErrorCode::missing_field: return "missing_field";
    case ModelErrorCode::bad_type: return "bad_type";
    case ModelErrorCode::bad_outcomes: return "bad_outcomes";
    case ModelErrorCode::unknown_option: return "unknown_option";
    case ModelErrorCode::length_mismatch: return "length_mismatch";
    case ModelErrorCode::overlap: return "overlap";
    case ModelErrorCode::empty_side: return "empty_side";
    case ModelErrorCode::malformed_number: return "malformed_number";
  }
  return "unknown";
}

ModelError::ModelError(ModelErrorCode code, std::string location, const std::string& message)
    : std::runtime_error(message), code_(code), location_(std::move(location)) {}

const Option* Model::find_option(std::string_view name) const {
  for (std::size_t i = 0; i < option_names.size(); ++i) {
    if (option_names[i] == name) {
      return &option_values[i];
    }
  }
  return nullptr;
}

OptionSet Model::option_set(const std::vector<std::string>& names) const {
  std::vector<Option> members;
  members.reserve(names.size());
  for (const std::string& name : names) {
    const Option* u = find_option(name);
    if (u == nullptr) {
      throw ModelError(ModelErrorCode::unknown_option, name,
                       "no option named \"" + name + '"');
    }
    members.push_back(*u);
  }
  return OptionSet(std::move(members));
}

Model parse_model(std::string_view text) {
  RawNumberDom handler;
  ordered_json::sax_parse(text, &handler);
  ordered_json doc = std::move(handler).take();

  if (!doc.is_object()) {
    throw ModelError(ModelErrorCode::bad_type, "", "top level must be a JSON object");
  }

  const ordered_json& format = require(doc, "format");
  if (!format.is_string()) {
    throw ModelError(ModelErrorCode::bad_type, "format", "format: expected a string");
  }
  if (format.get_ref<const std::string&>() != kModelFormat) {
    throw ModelError(ModelErrorCode::bad_version, "format",
                     "unsupported format \"" + format.get<std::string>() + "\" (expected \"" +
                         std::string(kModelFormat) + "\")");
  }

  const ordered_json& outcomes_node = require(doc, "outcomes");
  if (!outcomes_node.is_array()) {
    throw ModelError(ModelErrorCode::bad_type, "outcomes", "outcomes: expected an array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(outcomes_node.size());
  for (std::size_t k = 0; k < outcomes_node.size(); ++k) {
    const ordered_json& element = outcomes_node[k];
    std::string slot = "outcomes[" + std::to_string(k) + ']';
    if (!element.is_string()) {
      throw ModelError(ModelErrorCode::bad_type, slot, slot + ": outcome labels must be strings");
    }
    labels.push_back(element.get<std::string>());
  }
  if (labels.empty()) {
    throw ModelError(ModelErrorCode::bad_outcomes, "outcomes", "at least one outcome is required");
  }
  {
    std::set<std::string_view> seen;
    for (const std::string& label : labels) {
      if (!seen.insert(label).second) {
        throw ModelError(ModelErrorCode::bad_outcomes, "outcomes",
                         "duplicate outcome label \"" + label + '"');
      }
    }
  }
  const std::size_t dimension = labels.size();

  const ordered_json& options_node = require(doc, "options");
  if (!options_node.is_object()) {
    throw ModelError(ModelErrorCode::bad_type, "options",
                     "options: expected an object mapping names to value arrays");
  }
  std::vector<std::string> option_names;
  std::vector<Option> option_values;
  option_names.reserve(options_node.size());
  option_values.reserve(options_node.size());
  for (const auto& [name, values_node] : options_node.items()) {
    std::string where = "options." + name;
    if (!values_node.is_array()) {
      throw ModelError(ModelErrorCode::bad_type, where, where + ": expected an array of numbers");
    }
    if (values_node.size() != dimension) {
      throw ModelError(ModelErrorCode::length_mismatch, where,
                       where + ": expected " + std::to_string(dimension) + " values, got " +
                           std::to_string(values_node.size()));
    }
    std::vector<Rational> values;
    values.reserve(dimension);
    for (std::size_t k = 0; k < values_node.size(); ++k) {
      values.push_back(number_at(values_node[k], where + '[' + std::to_string(k) + ']'));
    }
    option_names.push_back(name);
    option_values.push_back(Option(std::move(values)));
  }

  Model model{OutcomeSpace(std::move(labels)),
              std::move(option_names),
              std::move(option_values),
              {},
              Assessment()};

  const ordered_json& assessment_node = require(doc, "assessment");
  if (!assessment_node.is_array()) {
    throw ModelError(ModelErrorCode::bad_type, "assessment",
                     "assessment: expected an array of {keep, reject} entries");
  }
  std::vector<AssessmentPair> pairs;
  pairs.reserve(assessment_node.size());
  for (std::size_t j = 0; j < assessment_node.size(); ++j) {
    const ordered_json& entry_node = assessment_node[j];
    std::string where = "assessment[" + std::to_string(j) + ']';
    if (!entry_node.is_object()) {
      throw ModelError(ModelErrorCode::bad_type, where, where + ": expected an object");
    }
    auto keep_it = entry_node.find("keep");
    if (keep_it == entry_node.end()) {
      throw ModelError(ModelErrorCode::missing_field, where + ".keep",
                       where + ": missing \"keep\"");
    }
    auto reject_it = entry_node.find("reject");
    if (reject_it == entry_node.end()) {
      throw ModelError(ModelErrorCode::missing_field, where + ".reject",
                       where + ": missing \"reject\"");
    }
    ModelEntry entry{name_list(*keep_it, where + ".keep"), name_list(*reject_it, where + ".reject")};
    if (entry.keep.empty()) {
      throw ModelError(ModelErrorCode::empty_side, where + ".keep",
                       where + ".keep: at least one option is required");
    }
    if (entry.reject.empty()) {
      throw ModelError(ModelErrorCode::empty_side, where + ".reject",
                       where + ".reject: at least one option is required");
    }
    OptionSet keep = model.option_set(entry.keep);
    OptionSet reject = model.option_set(entry.reject);
    for (const Option& w : reject) {
      if (keep.contains(w)) {
        throw ModelError(ModelErrorCode::overlap, where,
                         where + ": keep and reject share an option value");
      }
    }
    model.entries.push_back(std::move(entry));
    pairs.push_back(AssessmentPair{std::move(keep), std::move(reject)});
  }
  model.assessment = Assessment(std::move(pairs));

  return model;
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ModelError(ModelErrorCode::bad_json, path, "cannot open \"" + path + '"');
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) {
    throw ModelError(ModelErrorCode::bad_json, path, "cannot read \"" + path + '"');
  }
  return parse_model(buffer.str());
}

std::string serialize_model(const Model& model) {
  ordered_json doc = ordered_json::object();
  doc["format"] = std::string(kModelFormat);
  doc["outcomes"] = model.outcomes.labels();

  ordered_json options = ordered_json::object();
  for (std::size_t i = 0; i < model.option_names.size(); ++i) {
    ordered_json values = ordered_json::array();
    for (const Rational& q : model.option_values[i].values()) {
      values.push_back(value_node(q));
    }
    options[model.option_names[i]] = std::move(values);
  }
  doc["options"] = std::move(options);

  ordered_json assessment = ordered_json::array();
  for (const ModelEntry& entry : model.entries) {
    ordered_json node = ordered_json::object();
    node["keep"] = entry.keep;
    node["reject"] = entry.reject;
    assessment.push_back(std::move(node));
  }
  doc["assessment"] = std::move(assessment);

  return doc.dump(2) + '\n';
}

}  // namespace eadm

#include "eadm/core.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>
#include <utility>

namespace eadm {

namespace {

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": incompatible outcome spaces (" +
                            std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("outcome space needs at least one outcome");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate outcome label: " + label);
    }
  }
}

Option::Option(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("option needs at least one outcome entry");
  }
  // Exact comparisons assume canonical form, which two-argument
  // constructions like Rational(12, 20) do not guarantee.
  for (Rational& v : values_) v.canonicalize();
}

Option::Option(std::initializer_list<Rational> values)
    : Option(std::vector<Rational>(values)) {}

Option Option::zeros(std::size_t n) {
  return Option(std::vector<Rational>(n, Rational(0)));
}

Option Option::ones(std::size_t n) {
  return Option(std::vector<Rational>(n, Rational(1)));
}

Option operator+(const Option& a, const Option& b) {
  require_same_dimension(a.size(), b.size(), "option addition");
  std::vector<Rational> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return Option(std::move(out));
}

Option operator-(const Option& a, const Option& b) {
  require_same_dimension(a.size(), b.size(), "option subtraction");
  std::vector<Rational> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return Option(std::move(out));
}

Option operator*(const Rational& scale, const Option& a) {
  std::vector<Rational> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = scale * a[k];
  return Option(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Option& u) {
  os << '(';
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k) os << ", ";
    os << u[k];
  }
  return os << ')';
}

OptionSet::OptionSet(std::vector<Option> members) {
  if (members.empty()) {
    throw std::invalid_argument("option set must be non-empty");
  }
  const std::size_t dim = members.front().size();
  members_.reserve(members.size());
  for (auto& m : members) {
    require_same_dimension(dim, m.size(), "option set");
    if (!contains(m)) members_.push_back(std::move(m));
  }
}

OptionSet::OptionSet(std::initializer_list<Option> members)
    : OptionSet(std::vector<Option>(members)) {}

bool OptionSet::contains(const Option& u) const {
  return std::find(members_.begin(), members_.end(), u) != members_.end();
}

OptionSet OptionSet::union_with(const OptionSet& other) const {
  std::vector<Option> all = members_;
  all.insert(all.end(), other.members_.begin(), other.members_.end());
  return OptionSet(std::move(all));
}

bool OptionSet::operator==(const OptionSet& other) const {
  if (members_.size() != other.members_.size()) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](const Option& m) { return other.contains(m); });
}

std::ostream& operator<<(std::ostream& os, const OptionSet& a) {
  os << '{';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i];
  }
  return os << '}';
}

MassFunction::MassFunction(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("mass function needs at least one outcome");
  }
  Rational total(0);
  for (auto& p : probs_) {
    p.canonicalize();
    if (sgn(p) < 0) {
      throw std::invalid_argument("mass function entries must be nonnegative");
    }
    total += p;
  }
  if (total != 1) {
    throw std::invalid_argument("mass function entries must sum to one, got " +
                                total.get_str());
  }
}

MassFunction::MassFunction(std::initializer_list<Rational> probs)
    : MassFunction(std::vector<Rational>(probs)) {}

MassFunction MassFunction::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("mass function needs at least one outcome");
  Rational share(1, static_cast<unsigned long>(n));
  share.canonicalize();
  return MassFunction(std::vector<Rational>(n, share));
}

std::ostream& operator<<(std::ostream& os, const MassFunction& p) {
  os << '(';
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) os << ", ";
    os << p[k];
  }
  return os << ')';
}

Assessment::Assessment(std::vector<AssessmentPair> pairs) : pairs_(std::move(pairs)) {
  std::size_t dim = 0;
  for (const auto& pair : pairs_) {
    if (dim == 0) dim = pair.keep.dimension();
    require_same_dimension(dim, pair.keep.dimension(), "assessment");
    require_same_dimension(dim, pair.reject.dimension(), "assessment");
    for (const auto& w : pair.reject) {
      if (pair.keep.contains(w)) {
        throw std::invalid_argument("assessment pair: keep and reject sides overlap");
      }
    }
  }
}

std::optional<std::size_t> Assessment::dimension() const noexcept {
  if (pairs_.empty()) return std::nullopt;
  return pairs_.front().keep.dimension();
}

Rational expectation(const MassFunction& p, const Option& u) {
  require_same_dimension(p.size(), u.size(), "expectation");
  Rational total(0);
  for (std::size_t k = 0; k < u.size(); ++k) total += u[k] * p[k];
  return total;
}

OptionSet choice_by_mass(const MassFunction& p, const OptionSet& a) {
  std::vector<Rational> scores(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) scores[i] = expectation(p, a[i]);
  const Rational best = *std::max_element(scores.begin(), scores.end());
  std::vector<Option> maximisers;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (scores[i] == best) maximisers.push_back(a[i]);
  }
  return OptionSet(std::move(maximisers));
}

bool credal_member(const MassFunction& p, const Assessment& assessment) {
  if (auto dim = assessment.dimension()) {
    require_same_dimension(p.size(), *dim, "credal membership");
  }
  for (const auto& pair : assessment) {
    for (const auto& w : pair.reject) {
      const Rational ew = expectation(p, w);
      const bool beaten = std::any_of(pair.keep.begin(), pair.keep.end(),
                                      [&](const Option& v) { return expectation(p, v) > ew; });
      if (!beaten) return false;
    }
  }
  return true;
}

}  // namespace eadm

#pragma once

#include "eadm/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eadm {

// Thrown when values built over different outcome spaces meet in one
// operation (mismatched vector lengths).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ordered outcome labels x_1..x_n. The mathematics only ever uses indices;
// labels exist for file I/O and reports.
class OutcomeSpace {
 public:
  explicit OutcomeSpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool operator==(const OutcomeSpace&) const = default;

 private:
  std::vector<std::string> labels_;
};

// A utility vector over the outcome space: entry k is the payoff received
// under outcome k. Equality is exact componentwise equality.
class Option {
 public:
  explicit Option(std::vector<Rational> values);
  Option(std::initializer_list<Rational> values);

  static Option zeros(std::size_t n);
  static Option ones(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t k) const { return values_[k]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  bool operator==(const Option&) const = default;

 private:
  std::vector<Rational> values_;
};

Option operator+(const Option& a, const Option& b);
Option operator-(const Option& a, const Option& b);
Option operator*(const Rational& scale, const Option& a);
std::ostream& operator<<(std::ostream& os, const Option& u);

// Finite non-empty set of options. Insertion order is preserved and
// duplicates by value collapse to the first occurrence.
class OptionSet {
 public:
  explicit OptionSet(std::vector<Option> members);
  OptionSet(std::initializer_list<Option> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t dimension() const noexcept { return members_.front().size(); }
  bool contains(const Option& u) const;
  const Option& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Option>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  OptionSet union_with(const OptionSet& other) const;

  // Set equality: same members regardless of insertion order.
  bool operator==(const OptionSet& other) const;

 private:
  std::vector<Option> members_;
};

std::ostream& operator<<(std::ostream& os, const OptionSet& a);

// Probability mass function on the outcomes: nonnegative exact entries
// summing to one.
class MassFunction {
 public:
  explicit MassFunction(std::vector<Rational> probs);
  MassFunction(std::initializer_list<Rational> probs);

  static MassFunction uniform(std::size_t n);

  std::size_t size() const noexcept { return probs_.size(); }
  const Rational& operator[](std::size_t k) const { return probs_[k]; }
  const std::vector<Rational>& probs() const noexcept { return probs_; }

  bool operator==(const MassFunction&) const = default;

 private:
  std::vector<Rational> probs_;
};

std::ostream& operator<<(std::ostream& os, const MassFunction& p);

// One statement "every option in `reject` is rejected from keep ∪ reject".
struct AssessmentPair {
  OptionSet keep;    // V
  OptionSet reject;  // W

  bool operator==(const AssessmentPair&) const = default;
};

// A finite, possibly empty list of reject statements. Each pair must have
// value-disjoint sides; options may recur across pairs.
class Assessment {
 public:
  Assessment() = default;
  explicit Assessment(std::vector<AssessmentPair> pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const AssessmentPair& operator[](std::size_t i) const { return pairs_[i]; }
  const std::vector<AssessmentPair>& pairs() const noexcept { return pairs_; }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }

  // Common option length, or nullopt for the empty assessment.
  std::optional<std::size_t> dimension() const noexcept;

  bool operator==(const Assessment&) const = default;

 private:
  std::vector<AssessmentPair> pairs_;
};

// Expected utility sum_k u(x_k) p(x_k), exactly.
Rational expectation(const MassFunction& p, const Option& u);

// The options of A that maximise expected utility under p. Never empty.
OptionSet choice_by_mass(const MassFunction& p, const OptionSet& a);

// Whether p lies in the credal set induced by the assessment: for every
// pair and every rejected w there is a kept v with E_p(v) > E_p(w),
// strictly. Equivalently, the p-maximisers of each keep ∪ reject avoid
// the reject side.
bool credal_member(const MassFunction& p, const Assessment& assessment);

}  // namespace eadm

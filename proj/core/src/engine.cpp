#include "eadm/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace eadm {

namespace {

void warn(const EngineOptions& options, const std::string& message) {
  if (options.on_warning) {
    options.on_warning(message);
  } else {
    std::fprintf(stderr, "eadm: warning: %s\n", message.c_str());
  }
}

std::uint64_t tuple_count_clamped(const std::vector<OptionSet>& d_sets) {
  std::uint64_t count = 1;
  for (const auto& d : d_sets) {
    const std::uint64_t size = d.size();
    if (count > std::numeric_limits<std::uint64_t>::max() / size) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= size;
  }
  return count;
}

// Odometer over the cartesian product of the difference sets, last index
// fastest. An empty list of sets yields exactly one empty tuple.
class TupleScan {
 public:
  explicit TupleScan(const std::vector<OptionSet>& sets)
      : sets_(sets), index_(sets.size(), 0) {}

  std::vector<Option> current() const {
    std::vector<Option> tuple;
    tuple.reserve(sets_.size());
    for (std::size_t j = 0; j < sets_.size(); ++j) tuple.push_back(sets_[j][index_[j]]);
    return tuple;
  }

  bool advance() {
    for (std::size_t j = index_.size(); j-- > 0;) {
      if (++index_[j] < sets_[j].size()) return true;
      index_[j] = 0;
    }
    return false;
  }

 private:
  const std::vector<OptionSet>& sets_;
  std::vector<std::size_t> index_;
};

MassFunction mass_from_certificate(const std::vector<Rational>& lambda) {
  Rational total(0);
  for (const auto& x : lambda) total += x;
  if (sgn(total) <= 0) {
    throw std::logic_error("feasibility certificate sums to zero; no mass function");
  }
  std::vector<Rational> probs(lambda.size());
  for (std::size_t k = 0; k < lambda.size(); ++k) probs[k] = lambda[k] / total;
  return MassFunction(std::move(probs));
}

// Shared admissibility check once the differences are in hand. `quiet`
// suppresses the cap warning when the caller already issued one.
AdmissibilityVerdict check_differences(std::size_t n, const std::vector<Option>& u_diffs,
                                       const std::vector<OptionSet>& d_sets,
                                       const EngineOptions& options, bool quiet) {
  if (!quiet) {
    const std::uint64_t total = tuple_count_clamped(d_sets);
    if (total > options.tuple_warning_cap) {
      warn(options, "difference tuple count " + std::to_string(total) + " exceeds cap " +
                        std::to_string(options.tuple_warning_cap) +
                        "; scanning lazily, this may take a while");
    }
  }

  AdmissibilityVerdict verdict;
  TupleScan scan(d_sets);
  do {
    std::vector<Option> tuple = scan.current();
    ++verdict.tuples_checked;
    const FeasibilityProblem problem = build_primal(n, u_diffs, tuple);
    const FeasibilityResult result =
        options.approximate ? solve_approx(problem) : solve(problem);
    if (result.feasible) {
      verdict.admissible = true;
      verdict.witness = mass_from_certificate(*result.solution);
      verdict.witness_tuple = std::move(tuple);
      return verdict;
    }
  } while (scan.advance());
  return verdict;
}

void check_assessment_dimension(std::size_t n, const Assessment& assessment) {
  if (auto dim = assessment.dimension(); dim && *dim != n) {
    throw DimensionMismatch("assessment options have length " + std::to_string(*dim) +
                            ", expected " + std::to_string(n));
  }
}

}  // namespace

std::vector<Option> ExtensionResult::chosen() const {
  std::vector<Option> out;
  for (std::size_t i = 0; i < queried.size(); ++i) {
    if (verdicts[i].admissible) out.push_back(queried[i]);
  }
  return out;
}

std::vector<Option> ExtensionResult::rejected() const {
  std::vector<Option> out;
  for (std::size_t i = 0; i < queried.size(); ++i) {
    if (!verdicts[i].admissible) out.push_back(queried[i]);
  }
  return out;
}

bool ExtensionResult::empty() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const AdmissibilityVerdict& v) { return v.admissible; });
}

std::vector<OptionSet> difference_sets(const Assessment& assessment) {
  std::vector<OptionSet> out;
  for (const auto& pair : assessment) {
    for (const auto& w : pair.reject) {
      std::vector<Option> diffs;
      diffs.reserve(pair.keep.size());
      for (const auto& v : pair.keep) diffs.push_back(v - w);
      OptionSet d(std::move(diffs));
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<Option> candidate_differences(const Option& u, const OptionSet& a) {
  if (!a.contains(u)) {
    throw std::invalid_argument("query option must belong to the queried set");
  }
  std::vector<Option> diffs;
  for (const auto& other : a) {
    if (other == u) continue;
    Option diff = u - other;
    if (std::find(diffs.begin(), diffs.end(), diff) == diffs.end()) {
      diffs.push_back(std::move(diff));
    }
  }
  return diffs;
}

DifferenceProblem build_difference_problem(const Option& u, const OptionSet& a,
                                           const Assessment& assessment) {
  check_assessment_dimension(u.size(), assessment);
  return {difference_sets(assessment), candidate_differences(u, a)};
}

AdmissibilityVerdict is_admissible(const Option& u, const OptionSet& a,
                                   const Assessment& assessment, const EngineOptions& options) {
  DifferenceProblem problem = build_difference_problem(u, a, assessment);
  return check_differences(u.size(), problem.u_diffs, problem.d_sets, options, false);
}

ExtensionResult extension(const OptionSet& a, const Assessment& assessment,
                          const EngineOptions& options) {
  const std::size_t n = a.dimension();
  check_assessment_dimension(n, assessment);

  // One set of rejection differences serves every query in A.
  const std::vector<OptionSet> d_sets = difference_sets(assessment);
  const std::uint64_t total = tuple_count_clamped(d_sets);
  if (total > options.tuple_warning_cap) {
    warn(options, "difference tuple count " + std::to_string(total) + " exceeds cap " +
                      std::to_string(options.tuple_warning_cap) +
                      "; scanning lazily, this may take a while");
  }

  ExtensionResult result;
  result.queried = a.members();
  result.verdicts.reserve(a.size());
  for (const auto& u : a) {
    result.verdicts.push_back(
        check_differences(n, candidate_differences(u, a), d_sets, options, true));
  }
  return result;
}

bool is_consistent(std::size_t n, const Assessment& assessment, const EngineOptions& options) {
  check_assessment_dimension(n, assessment);
  return check_differences(n, {}, difference_sets(assessment), options, false).admissible;
}

std::optional<MassFunction> find_witness(std::size_t n, const Assessment& assessment,
                                         const EngineOptions& options) {
  check_assessment_dimension(n, assessment);
  return check_differences(n, {}, difference_sets(assessment), options, false).witness;
}

}  // namespace eadm

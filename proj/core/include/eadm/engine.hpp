#pragma once

#include "eadm/core.hpp"
#include "eadm/feasibility.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace eadm {

struct EngineOptions {
  // Above this many rejection-difference tuples a warning fires before the
  // (still lazy) scan proceeds.
  std::uint64_t tuple_warning_cap = 1'000'000;
  // Double-precision LP with a 1e-9 residual tolerance instead of exact
  // rational pivoting. Approximate; witnesses are then not certified.
  bool approximate = false;
  // Receives warning text. Defaults to stderr when unset.
  std::function<void(const std::string&)> on_warning;
};

// Difference data behind one admissibility query: one difference set per
// (assessment pair, rejected option) — deduplicated as sets — plus the
// query-minus-alternative options.
struct DifferenceProblem {
  std::vector<OptionSet> d_sets;  // D_1..D_m
  std::vector<Option> u_diffs;    // u - a over a in A \ {u}, deduplicated
};

struct AdmissibilityVerdict {
  bool admissible = false;
  // Present iff admissible: a mass function under which the queried option
  // maximises expected utility while every assessment constraint holds
  // strictly. Obtained by normalising the feasibility certificate by its
  // sum.
  std::optional<MassFunction> witness;
  // The difference tuple whose system turned out feasible (one pick per
  // difference set; empty for an empty assessment).
  std::optional<std::vector<Option>> witness_tuple;
  // Tuples examined before returning; instrumentation for the
  // singleton-keep fast path and the warning cap.
  std::uint64_t tuples_checked = 0;
};

struct ExtensionResult {
  std::vector<Option> queried;                 // the option set in order
  std::vector<AdmissibilityVerdict> verdicts;  // parallel to queried

  std::vector<Option> chosen() const;
  std::vector<Option> rejected() const;
  bool empty() const;  // nothing admissible, i.e. inconsistent assessment
};

// The difference sets {v - w : v in keep} for every (pair, rejected w),
// in assessment order then reject insertion order, with identical sets
// collapsed.
std::vector<OptionSet> difference_sets(const Assessment& assessment);

// The differences u - a over the other members of A, deduplicated by
// value. Throws if u is not a member of A.
std::vector<Option> candidate_differences(const Option& u, const OptionSet& a);

DifferenceProblem build_difference_problem(const Option& u, const OptionSet& a,
                                           const Assessment& assessment);

// Whether u is admissible within A given the assessment: scans the
// difference tuples lazily in lexicographic order and stops at the first
// feasible system.
AdmissibilityVerdict is_admissible(const Option& u, const OptionSet& a,
                                   const Assessment& assessment,
                                   const EngineOptions& options = {});

// Per-option admissibility across all of A. The difference sets are
// computed once and shared. The chosen set is empty exactly when the
// assessment is inconsistent.
ExtensionResult extension(const OptionSet& a, const Assessment& assessment,
                          const EngineOptions& options = {});

// Whether any mass function is compatible with the assessment, decided by
// querying the zero option against the singleton {0}.
bool is_consistent(std::size_t n, const Assessment& assessment,
                   const EngineOptions& options = {});

// A mass function compatible with the assessment, when one exists.
std::optional<MassFunction> find_witness(std::size_t n, const Assessment& assessment,
                                         const EngineOptions& options = {});

}  // namespace eadm

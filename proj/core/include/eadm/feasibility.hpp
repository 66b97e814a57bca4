#pragma once

#include "eadm/core.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace eadm {

// One row of a feasibility system: coeffs · λ >= rhs.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
};

// "Find λ >= 0 subject to coeffs·λ >= rhs for every row." The builders
// normalise any <= input row by negation, so >= is the only relation.
struct FeasibilityProblem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  bool nonneg = true;  // λ >= 0 throughout this library
};

struct FeasibilityResult {
  bool feasible = false;
  // Present iff feasible; substituting it satisfies every row exactly
  // (exact solver) or within the residual tolerance (approximate solver).
  std::optional<std::vector<Rational>> solution;
};

// System over λ in R^n, one multiplier per outcome (a scaled mass
// function):
//   sum_k λ_k u_i(x_k) >= 0   for each u_i,
//   sum_k λ_k d_j(x_k) >= 1   for each d_j,
//   λ >= 0.
// With no d rows the system would accept λ = 0, which scales to no mass
// function at all; a constant-one d row (i.e. sum_k λ_k >= 1) is appended
// instead, which restricts nothing since its expectation is positive for
// every mass function.
FeasibilityProblem build_primal(std::size_t n, const std::vector<Option>& u_list,
                                const std::vector<Option>& d_list);

// Farkas counterpart over one multiplier per u_i / d_j:
//   sum_i λ_i u_i(x_k) + sum_j λ_{l+j} d_j(x_k) <= 0   for each outcome k
//   (stored negated as >= rows),
//   sum_j λ_{l+j} >= 1,
//   λ >= 0.
// Exactly one of the primal/dual pair is feasible. An empty d_list gets
// the same constant-one augmentation as the primal.
FeasibilityProblem build_dual(std::size_t n, const std::vector<Option>& u_list,
                              const std::vector<Option>& d_list);

// Exact phase-1 simplex with Bland's rule: decides feasibility of
// {λ >= 0 : constraints} and returns a solution vector when feasible.
// Always terminates; no tolerances involved.
FeasibilityResult solve(const FeasibilityProblem& problem);

// Same pipeline in double precision. Feasible means the extracted point
// satisfies every row within `tolerance`. Fast and approximate; the exact
// solver is the reference.
FeasibilityResult solve_approx(const FeasibilityProblem& problem, double tolerance = 1e-9);

bool primal_feasible(std::size_t n, const std::vector<Option>& u_list,
                     const std::vector<Option>& d_list);
bool dual_feasible(std::size_t n, const std::vector<Option>& u_list,
                   const std::vector<Option>& d_list);

}  // namespace eadm

#include "eadm/feasibility.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace eadm {

namespace {

void check_option_dimensions(std::size_t n, const std::vector<Option>& options,
                             const char* what) {
  for (const auto& option : options) {
    if (option.size() != n) {
      throw DimensionMismatch(std::string(what) + ": option length " +
                              std::to_string(option.size()) + " does not match outcome count " +
                              std::to_string(n));
    }
  }
}

struct ExactOps {
  using Scalar = Rational;
  static bool is_neg(const Scalar& x) { return sgn(x) < 0; }
  static bool is_pos(const Scalar& x) { return sgn(x) > 0; }
  static Scalar from(const Rational& x) { return x; }
};

struct FloatOps {
  using Scalar = double;
  static constexpr double kPivotTol = 1e-11;
  static bool is_neg(double x) { return x < -kPivotTol; }
  static bool is_pos(double x) { return x > kPivotTol; }
  static double from(const Rational& x) { return x.get_d(); }
};

template <class S>
struct Phase1Point {
  S objective;            // minimal sum of artificial variables
  std::vector<S> lambda;  // the first num_vars coordinates at that basis
};

// Phase-1 simplex for {x >= 0 : lhs·x >= rhs}. Rows with positive
// right-hand side get an artificial variable, the rest start on their
// slack. Bland's smallest-index rule for both the entering and the
// leaving choice rules out cycling, so the loop always terminates.
template <class Ops>
Phase1Point<typename Ops::Scalar> run_phase1(std::size_t num_vars,
                                             const std::vector<std::vector<typename Ops::Scalar>>& lhs,
                                             const std::vector<typename Ops::Scalar>& rhs) {
  using S = typename Ops::Scalar;
  const std::size_t rows = lhs.size();

  std::size_t num_art = 0;
  for (const auto& b : rhs) {
    if (Ops::is_pos(b)) ++num_art;
  }
  const std::size_t cols = num_vars + rows + num_art;

  std::vector<std::vector<S>> tab(rows, std::vector<S>(cols, S(0)));
  std::vector<S> b(rows, S(0));
  std::vector<std::size_t> basis(rows);

  std::size_t art = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (Ops::is_pos(rhs[i])) {
      // c·x - slack + artificial = b, artificial basic.
      for (std::size_t j = 0; j < num_vars; ++j) tab[i][j] = lhs[i][j];
      tab[i][num_vars + i] = S(-1);
      tab[i][num_vars + rows + art] = S(1);
      b[i] = rhs[i];
      basis[i] = num_vars + rows + art;
      ++art;
    } else {
      // Negated row: -c·x + slack = -b >= 0, slack basic.
      for (std::size_t j = 0; j < num_vars; ++j) tab[i][j] = -lhs[i][j];
      tab[i][num_vars + i] = S(1);
      b[i] = -rhs[i];
      basis[i] = num_vars + i;
    }
  }

  // Reduced-cost row for "minimise sum of artificials", with basic
  // artificial columns priced out. obj_rhs tracks minus the objective.
  std::vector<S> obj(cols, S(0));
  S obj_rhs(0);
  for (std::size_t j = num_vars + rows; j < cols; ++j) obj[j] = S(1);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] >= num_vars + rows) {
      for (std::size_t j = 0; j < cols; ++j) obj[j] -= tab[i][j];
      obj_rhs -= b[i];
    }
  }

  constexpr std::uint64_t kMaxIters = 1u << 24;
  for (std::uint64_t iter = 0;; ++iter) {
    if (iter > kMaxIters) {
      throw std::logic_error("phase-1 simplex exceeded the iteration cap");
    }

    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (Ops::is_neg(obj[j])) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;  // optimal

    std::size_t leave = rows;
    S best_ratio(0);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!Ops::is_pos(tab[i][enter])) continue;
      S ratio = b[i] / tab[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) {
      // The objective is a sum of nonnegative variables, bounded below.
      throw std::logic_error("phase-1 simplex found an unbounded direction");
    }

    // Pivot on (leave, enter).
    const S pivot = tab[leave][enter];
    for (auto& v : tab[leave]) v /= pivot;
    b[leave] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave) continue;
      const S factor = tab[i][enter];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= factor * tab[leave][j];
      b[i] -= factor * b[leave];
    }
    const S obj_factor = obj[enter];
    if (obj_factor != 0) {
      for (std::size_t j = 0; j < cols; ++j) obj[j] -= obj_factor * tab[leave][j];
      obj_rhs -= obj_factor * b[leave];
    }
    basis[leave] = enter;
  }

  Phase1Point<S> out{-obj_rhs, std::vector<S>(num_vars, S(0))};
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < num_vars) out.lambda[basis[i]] = b[i];
  }
  return out;
}

const std::vector<Option>& with_constant_one(std::size_t n, const std::vector<Option>& d_list,
                                             std::vector<Option>& storage) {
  if (!d_list.empty()) return d_list;
  storage.push_back(Option::ones(n));
  return storage;
}

}  // namespace

FeasibilityProblem build_primal(std::size_t n, const std::vector<Option>& u_list,
                                const std::vector<Option>& d_list) {
  if (n == 0) throw std::invalid_argument("outcome count must be positive");
  check_option_dimensions(n, u_list, "build_primal");
  check_option_dimensions(n, d_list, "build_primal");

  std::vector<Option> augmented;
  const std::vector<Option>& ds = with_constant_one(n, d_list, augmented);

  FeasibilityProblem problem;
  problem.num_vars = n;
  problem.constraints.reserve(u_list.size() + ds.size());
  for (const auto& u : u_list) {
    problem.constraints.push_back({u.values(), Rational(0)});
  }
  for (const auto& d : ds) {
    problem.constraints.push_back({d.values(), Rational(1)});
  }
  return problem;
}

FeasibilityProblem build_dual(std::size_t n, const std::vector<Option>& u_list,
                              const std::vector<Option>& d_list) {
  if (n == 0) throw std::invalid_argument("outcome count must be positive");
  check_option_dimensions(n, u_list, "build_dual");
  check_option_dimensions(n, d_list, "build_dual");

  std::vector<Option> augmented;
  const std::vector<Option>& ds = with_constant_one(n, d_list, augmented);
  const std::size_t l = u_list.size();
  const std::size_t m = ds.size();

  FeasibilityProblem problem;
  problem.num_vars = l + m;
  problem.constraints.reserve(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> row(l + m);
    for (std::size_t i = 0; i < l; ++i) row[i] = -u_list[i][k];
    for (std::size_t j = 0; j < m; ++j) row[l + j] = -ds[j][k];
    problem.constraints.push_back({std::move(row), Rational(0)});
  }
  std::vector<Rational> normalisation(l + m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) normalisation[l + j] = Rational(1);
  problem.constraints.push_back({std::move(normalisation), Rational(1)});
  return problem;
}

FeasibilityResult solve(const FeasibilityProblem& problem) {
  std::vector<std::vector<Rational>> lhs;
  std::vector<Rational> rhs;
  lhs.reserve(problem.constraints.size());
  rhs.reserve(problem.constraints.size());
  for (const auto& c : problem.constraints) {
    if (c.coeffs.size() != problem.num_vars) {
      throw std::invalid_argument("constraint width does not match num_vars");
    }
    lhs.push_back(c.coeffs);
    rhs.push_back(c.rhs);
  }

  auto point = run_phase1<ExactOps>(problem.num_vars, lhs, rhs);
  if (point.objective != 0) return {false, std::nullopt};
  return {true, std::move(point.lambda)};
}

FeasibilityResult solve_approx(const FeasibilityProblem& problem, double tolerance) {
  std::vector<std::vector<double>> lhs(problem.constraints.size());
  std::vector<double> rhs(problem.constraints.size());
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    const auto& c = problem.constraints[i];
    if (c.coeffs.size() != problem.num_vars) {
      throw std::invalid_argument("constraint width does not match num_vars");
    }
    lhs[i].reserve(c.coeffs.size());
    for (const auto& x : c.coeffs) lhs[i].push_back(x.get_d());
    rhs[i] = c.rhs.get_d();
  }

  auto point = run_phase1<FloatOps>(problem.num_vars, lhs, rhs);

  // The decision is the residual check, not the phase-1 objective.
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < problem.num_vars; ++j) acc += lhs[i][j] * point.lambda[j];
    if (acc - rhs[i] < -tolerance) return {false, std::nullopt};
  }

  std::vector<Rational> solution;
  solution.reserve(problem.num_vars);
  for (double x : point.lambda) {
    solution.emplace_back(x < 0.0 ? 0.0 : x);  // basic values can dip below zero by roundoff
  }
  return {true, std::move(solution)};
}

bool primal_feasible(std::size_t n, const std::vector<Option>& u_list,
                     const std::vector<Option>& d_list) {
  return solve(build_primal(n, u_list, d_list)).feasible;
}

bool dual_feasible(std::size_t n, const std::vector<Option>& u_list,
                   const std::vector<Option>& d_list) {
  return solve(build_dual(n, u_list, d_list)).feasible;
}

}  // namespace eadm

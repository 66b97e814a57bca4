#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eadm/feasibility.hpp"

#include "support.hpp"

#include <cstddef>
#include <vector>

using namespace eadm;

namespace {

// Exact substitution check, independent of anything the solver reports.
bool satisfies(const FeasibilityProblem& problem, const std::vector<Rational>& x) {
  if (x.size() != problem.num_vars) {
    return false;
  }
  for (const Rational& v : x) {
    if (sgn(v) < 0) {
      return false;
    }
  }
  for (const auto& row : problem.constraints) {
    Rational acc(0);
    for (std::size_t i = 0; i < problem.num_vars; ++i) {
      acc += row.coeffs[i] * x[i];
    }
    if (acc < row.rhs) {
      return false;
    }
  }
  return true;
}

std::vector<Option> random_options(std::mt19937_64& rng, std::size_t count, std::size_t n) {
  std::vector<Option> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(testutil::random_option(rng, n));
  }
  return out;
}

}  // namespace

TEST_CASE("primal layout: one row per option, unit rhs on the lower-bounded rows") {
  Option u{1, -2, 0};
  Option d1{3, 3, -7};
  Option d2{1, -4, 1};
  FeasibilityProblem primal = build_primal(3, {u}, {d1, d2});
  REQUIRE(primal.num_vars == 3);
  REQUIRE(primal.constraints.size() == 3);
  CHECK(primal.constraints[0].coeffs == u.values());
  CHECK(primal.constraints[0].rhs == 0);
  CHECK(primal.constraints[1].coeffs == d1.values());
  CHECK(primal.constraints[1].rhs == 1);
  CHECK(primal.constraints[2].coeffs == d2.values());
  CHECK(primal.constraints[2].rhs == 1);
}

TEST_CASE("empty d-list gains the constant-one row") {
  // Without it λ = 0 would pass vacuously and normalise to nothing.
  FeasibilityProblem primal = build_primal(2, {Option{-1, -1}}, {});
  REQUIRE(primal.constraints.size() == 2);
  CHECK(primal.constraints[0].coeffs == std::vector<Rational>{-1, -1});
  CHECK(primal.constraints[0].rhs == 0);
  CHECK(primal.constraints[1].coeffs == std::vector<Rational>{1, 1});
  CHECK(primal.constraints[1].rhs == 1);

  // (-1,-1)·λ >= 0 forces λ = 0 under λ >= 0, clashing with the sum row.
  CHECK_FALSE(primal_feasible(2, {Option{-1, -1}}, {}));
  CHECK(dual_feasible(2, {Option{-1, -1}}, {}));

  // A nonnegative option leaves room: any mass function works.
  CHECK(primal_feasible(2, {Option{1, 0}}, {}));
  CHECK_FALSE(dual_feasible(2, {Option{1, 0}}, {}));
}

TEST_CASE("dual layout: one multiplier per option, outcome rows negated") {
  Option u{1, -2, 0};
  Option d{3, 3, -7};
  FeasibilityProblem dual = build_dual(3, {u}, {d});
  REQUIRE(dual.num_vars == 2);
  REQUIRE(dual.constraints.size() == 4);  // 3 outcomes + normalisation
  // Outcome row k states u(x_k)·µ_1 + d(x_k)·µ_2 <= 0, stored negated.
  CHECK(dual.constraints[0].coeffs == std::vector<Rational>{-1, -3});
  CHECK(dual.constraints[1].coeffs == std::vector<Rational>{2, -3});
  CHECK(dual.constraints[2].coeffs == std::vector<Rational>{0, 7});
  for (int k = 0; k < 3; ++k) {
    CHECK(dual.constraints[k].rhs == 0);
  }
  CHECK(dual.constraints[3].coeffs == std::vector<Rational>{0, 1});
  CHECK(dual.constraints[3].rhs == 1);
}

TEST_CASE("solve decides simple systems and returns exact points") {
  FeasibilityProblem p;
  p.num_vars = 2;
  p.constraints = {{{1, 1}, 1}};
  FeasibilityResult r = solve(p);
  REQUIRE(r.feasible);
  REQUIRE(r.solution.has_value());
  CHECK(satisfies(p, *r.solution));

  FeasibilityProblem q;
  q.num_vars = 1;
  q.constraints = {{{-1}, 1}};
  CHECK_FALSE(solve(q).feasible);
  CHECK_FALSE(solve(q).solution.has_value());
}

TEST_CASE("solve handles equalities expressed as opposite rows") {
  FeasibilityProblem p;
  p.num_vars = 2;
  p.constraints = {{{1, -1}, 0}, {{-1, 1}, 0}, {{1, 1}, 1}};
  FeasibilityResult r = solve(p);
  REQUIRE(r.feasible);
  CHECK(satisfies(p, *r.solution));
  CHECK((*r.solution)[0] == (*r.solution)[1]);
}

TEST_CASE("solve tolerates non-positive right-hand sides and degeneracy") {
  FeasibilityProblem p;
  p.num_vars = 2;
  p.constraints = {{{-1, 0}, -5}, {{1, 0}, 0}, {{-1, 0}, 0}, {{1, 1}, 1}};
  FeasibilityResult r = solve(p);
  REQUIRE(r.feasible);
  CHECK(satisfies(p, *r.solution));
  CHECK((*r.solution)[0] == 0);  // pinched to zero by the opposite rows
}

TEST_CASE("solve accepts trivial systems") {
  FeasibilityProblem empty;
  empty.num_vars = 0;
  CHECK(solve(empty).feasible);

  FeasibilityProblem no_rows;
  no_rows.num_vars = 3;
  FeasibilityResult r = solve(no_rows);
  REQUIRE(r.feasible);
  CHECK(r.solution->size() == 3);

  FeasibilityProblem impossible;
  impossible.num_vars = 0;
  impossible.constraints = {{{}, 1}};
  CHECK_FALSE(solve(impossible).feasible);
}

TEST_CASE("fractional data stays exact through the pivots") {
  FeasibilityProblem p;
  p.num_vars = 2;
  p.constraints = {
      {{Rational(1, 3), Rational(1, 7)}, Rational(22, 21)},
      {{Rational(-1, 3), Rational(-1, 7)}, Rational(-22, 21)},
      {{1, -1}, 0},
  };
  FeasibilityResult r = solve(p);
  REQUIRE(r.feasible);
  CHECK(satisfies(p, *r.solution));
}

TEST_CASE("exactly one of primal and dual is feasible on random instances") {
  auto rng = testutil::make_rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t l = rng() % 5;
    const std::size_t m = rng() % 5;
    std::vector<Option> u_list = random_options(rng, l, n);
    std::vector<Option> d_list = random_options(rng, m, n);
    const bool primal = primal_feasible(n, u_list, d_list);
    const bool dual = dual_feasible(n, u_list, d_list);
    CHECK_MESSAGE(primal != dual, "trial ", trial, ": primal=", primal, " dual=", dual);
  }
}

TEST_CASE("feasible certificates satisfy the system they come from") {
  auto rng = testutil::make_rng(7777);
  int feasible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Option> u_list = random_options(rng, rng() % 4, n);
    std::vector<Option> d_list = random_options(rng, rng() % 4, n);
    FeasibilityProblem primal = build_primal(n, u_list, d_list);
    FeasibilityResult r = solve(primal);
    if (r.feasible) {
      ++feasible_seen;
      CHECK(satisfies(primal, *r.solution));
    }
  }
  CHECK(feasible_seen > 20);  // the sweep must actually exercise this path
}

TEST_CASE("approximate solver agrees with the exact one on small integer data") {
  auto rng = testutil::make_rng(991);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Option> u_list = random_options(rng, rng() % 4, n);
    std::vector<Option> d_list = random_options(rng, rng() % 4, n);
    FeasibilityProblem primal = build_primal(n, u_list, d_list);
    const bool exact = solve(primal).feasible;
    const bool approx = solve_approx(primal).feasible;
    CHECK_MESSAGE(exact == approx, "trial ", trial, ": exact=", exact, " approx=", approx);
  }
}

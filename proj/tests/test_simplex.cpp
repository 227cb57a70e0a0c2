// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "doctest.h"
#include "lpcc/lp_model.hpp"
#include "lpcc/rng.hpp"
#include "lpcc/simplex.hpp"
#include "test_support.hpp"

using lpcc::Basis;
using lpcc::kInf;
using lpcc::LpModel;
using lpcc::LpSolution;
using lpcc::LpStatus;
using lpcc::RowSense;
using lpcc::SimplexSolver;
using lpcc::TableauRow;
using lpcc::VarStatus;

namespace {

LpModel two_var_example() {
  // min -x - 2y  s.t.  x + y <= 4,  x <= 3,  y <= 3,  x,y >= 0.
  // Optimum at (1, 3) with objective -7.
  LpModel m;
  m.add_var(-1.0, 0.0, kInf);
  m.add_var(-2.0, 0.0, kInf);
  int r = m.add_row(RowSense::Le, 4.0);
  m.constraints.add(r, 0, 1.0);
  m.constraints.add(r, 1, 1.0);
  r = m.add_row(RowSense::Le, 3.0);
  m.constraints.add(r, 0, 1.0);
  r = m.add_row(RowSense::Le, 3.0);
  m.constraints.add(r, 1, 1.0);
  m.validate();
  return m;
}

}  // namespace

TEST_CASE("simplex solves a small inequality LP to its known optimum") {
  const LpModel m = two_var_example();
  const LpSolution sol = lpcc::solve_lp(m);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-7.0));
  CHECK(sol.x[0] == doctest::Approx(1.0));
  CHECK(sol.x[1] == doctest::Approx(3.0));
}

TEST_CASE("simplex honours equality rows and finite upper bounds") {
  // min x - y  s.t.  x + y = 2,  0 <= x <= 5, 0 <= y <= 1.5. Optimum (0.5, 1.5).
  LpModel m;
  m.add_var(1.0, 0.0, 5.0);
  m.add_var(-1.0, 0.0, 1.5);
  const int r = m.add_row(RowSense::Eq, 2.0);
  m.constraints.add(r, 0, 1.0);
  m.constraints.add(r, 1, 1.0);
  const LpSolution sol = lpcc::solve_lp(m);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-1.0));
  CHECK(sol.x[0] == doctest::Approx(0.5));
  CHECK(sol.x[1] == doctest::Approx(1.5));
}

TEST_CASE("simplex certifies infeasibility") {
  // x >= 3 and x <= 1 cannot hold together.
  LpModel m;
  m.add_var(0.0, 0.0, kInf);
  int r = m.add_row(RowSense::Ge, 3.0);
  m.constraints.add(r, 0, 1.0);
  r = m.add_row(RowSense::Le, 1.0);
  m.constraints.add(r, 0, 1.0);
  const LpSolution sol = lpcc::solve_lp(m);
  CHECK(sol.status == LpStatus::Infeasible);
  CHECK(sol.objective == kInf);
}

TEST_CASE("simplex returns a valid ray when unbounded") {
  // min -x with x - y <= 1: push x and y together, objective falls.
  LpModel m;
  m.add_var(-1.0, 0.0, kInf);
  m.add_var(0.0, 0.0, kInf);
  const int r = m.add_row(RowSense::Le, 1.0);
  m.constraints.add(r, 0, 1.0);
  m.constraints.add(r, 1, -1.0);
  const LpSolution sol = lpcc::solve_lp(m);
  REQUIRE(sol.status == LpStatus::UnboundedBelow);
  CHECK(sol.objective == -kInf);
  REQUIRE(sol.ray.size() == 2);
  CHECK(lpcc_test::valid_ray(m, sol.ray));
  // Vertex the ray leaves is feasible.
  CHECK(lpcc_test::max_row_violation(m, sol.x) <= 1e-7);
}

TEST_CASE("empty LP with zero rows optimizes to the bound corner") {
  LpModel m;
  m.add_var(2.0, 1.0, 4.0);
  m.add_var(-3.0, 0.0, 2.0);
  const LpSolution sol = lpcc::solve_lp(m);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.x[0] == doctest::Approx(1.0));
  CHECK(sol.x[1] == doctest::Approx(2.0));
  CHECK(sol.objective == doctest::Approx(-4.0));
}

TEST_CASE("degenerate LP with many ties still terminates") {
  // Several redundant rows through the same vertex.
  LpModel m;
  m.add_var(-1.0, 0.0, kInf);
  m.add_var(-1.0, 0.0, kInf);
  for (int i = 0; i < 6; ++i) {
    const int r = m.add_row(RowSense::Le, 2.0);
    m.constraints.add(r, 0, 1.0);
    m.constraints.add(r, 1, 1.0);
  }
  const LpSolution sol = lpcc::solve_lp(m);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-2.0));
}

TEST_CASE("warm starts reproduce the cold answer after a bound patch") {
  const LpModel m = two_var_example();
  SimplexSolver solver(m);
  const LpSolution first = solver.solve();
  REQUIRE(first.status == LpStatus::Optimal);

  // Fixing y to zero turns the optimum into (3, 0) with objective -3.
  solver.set_var_bounds(1, 0.0, 0.0);
  const LpSolution warm = solver.solve(&first.basis);
  REQUIRE(warm.status == LpStatus::Optimal);
  CHECK(warm.objective == doctest::Approx(-3.0));

  solver.set_var_bounds(1, 0.0, kInf);
  const LpSolution back = solver.solve(&warm.basis);
  REQUIRE(back.status == LpStatus::Optimal);
  CHECK(back.objective == doctest::Approx(first.objective));
}

TEST_CASE("objective and rhs patches take effect between solves") {
  const LpModel m = two_var_example();
  SimplexSolver solver(m);
  REQUIRE(solver.solve().objective == doctest::Approx(-7.0));

  solver.set_objective({-2.0, -1.0});
  CHECK(solver.solve().objective == doctest::Approx(-7.0));  // now at (3, 1)

  solver.set_rhs(0, 5.0);
  CHECK(solver.solve().objective == doctest::Approx(-8.0));  // (3, 2)
}

TEST_CASE("tableau rows match a dense elimination oracle") {
  const LpModel m = two_var_example();
  const LpSolution sol = lpcc::solve_lp(m);
  REQUIRE(sol.status == LpStatus::Optimal);

  const lpcc_test::ColumnForm f = lpcc_test::column_form(m);
  for (int id = 0; id < f.ntot; ++id) {
    if (!sol.is_basic(id)) {
      CHECK_THROWS_AS((void)lpcc::tableau_row(sol, id), std::logic_error);
      continue;
    }
    const TableauRow row = lpcc::tableau_row(sol, id);
    CHECK(row.basic_var == id);
    CHECK(row.constant == doctest::Approx(sol.var_value(id)));
    // Independent check of each coefficient: columns of B^-1 N computed by
    // dense elimination, sign-flipped for nonbasics at their upper bound.
    for (const auto& [nb, coef] : row.coeffs) {
      REQUIRE(!sol.is_basic(nb));
      lpcc_test::Dense basis_mat(f.nrows, std::vector<double>(f.nrows));
      std::vector<int> basics;
      for (int j = 0; j < f.ntot; ++j) {
        if (sol.is_basic(j)) basics.push_back(j);
      }
      REQUIRE(static_cast<int>(basics.size()) == f.nrows);
      int pos = -1;
      for (int bcol = 0; bcol < f.nrows; ++bcol) {
        if (basics[bcol] == id) pos = bcol;
        for (int r = 0; r < f.nrows; ++r) {
          basis_mat[r][bcol] = f.cols[basics[bcol]][r];
        }
      }
      REQUIRE(pos >= 0);
      std::vector<double> col = f.cols[nb];
      REQUIRE(lpcc_test::solve_dense(basis_mat, col));
      const double expect =
          sol.var_status(nb) == VarStatus::AtUpper ? -col[pos] : col[pos];
      CHECK(coef == doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("dual values price the binding rows of the known optimum") {
  const LpModel m = two_var_example();
  const LpSolution sol = lpcc::solve_lp(m);
  const std::vector<double> y = lpcc::dual_values(sol);
  REQUIRE(y.size() == 3);
  // At (1,3): rows 0 and 2 bind; c = A^T y gives y = (-1, 0, -1).
  CHECK(y[0] == doctest::Approx(-1.0));
  CHECK(y[1] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(y[2] == doctest::Approx(-1.0));
}

TEST_CASE("fix_to_zero clamps one variable and leaves the rest alone") {
  const LpModel m = two_var_example();
  const LpModel fixed = lpcc::fix_to_zero(m, 1);
  CHECK(fixed.upper[1] == 0.0);
  CHECK(fixed.upper[0] == m.upper[0]);
  const LpSolution sol = lpcc::solve_lp(fixed);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-3.0));
}

namespace {

// Shared property run: solve a random LP, compare with brute force, check
// duality, rays and tableau consistency. Returns false with a doctest
// failure on any mismatch.
void check_random_lp(lpcc::Rng& rng) {
  const LpModel m = lpcc_test::random_lp(rng);
  const LpSolution sol = lpcc::solve_lp(m);
  const lpcc_test::BruteResult brute = lpcc_test::brute_force_lp(m);

  if (sol.status == LpStatus::Infeasible) {
    CHECK(!brute.feasible);
    return;
  }
  REQUIRE(brute.feasible);
  CHECK(lpcc_test::max_row_violation(m, sol.x) <= 1e-7);

  if (sol.status == LpStatus::UnboundedBelow) {
    REQUIRE(!sol.ray.empty());
    CHECK(lpcc_test::valid_ray(m, sol.ray));
    return;
  }

  // Optimal: objective agrees with exhaustive enumeration.
  const double scale = std::max(1.0, std::fabs(brute.best_obj));
  CHECK(std::fabs(sol.objective - brute.best_obj) <= 1e-7 * scale);

  // Strong duality via reduced costs: build the dual objective from row
  // duals plus bound contributions chosen by the reduced-cost signs.
  const std::vector<double> y = lpcc::dual_values(sol);
  const lpcc_test::ColumnForm f = lpcc_test::column_form(m);
  double dual_obj = 0.0;
  for (int r = 0; r < f.nrows; ++r) dual_obj += y[r] * f.rhs[r];
  for (int j = 0; j < f.ntot; ++j) {
    double rc = f.cost[j];
    for (int r = 0; r < f.nrows; ++r) rc -= y[r] * f.cols[j][r];
    if (sol.is_basic(j)) {
      CHECK(std::fabs(rc) <= 1e-6);
      continue;
    }
    if (rc > 1e-6) {
      REQUIRE(std::isfinite(f.lo[j]));
      dual_obj += rc * f.lo[j];
    } else if (rc < -1e-6) {
      REQUIRE(std::isfinite(f.hi[j]));
      dual_obj += rc * f.hi[j];
    }
  }
  CHECK(std::fabs(sol.objective - dual_obj) <= 1e-7 * scale);

  // Tableau round trip on one basic structural variable, if any.
  for (int id = 0; id < m.num_vars(); ++id) {
    if (!sol.is_basic(id)) continue;
    const TableauRow row = lpcc::tableau_row(sol, id);
    CHECK(std::fabs(row.constant - sol.var_value(id)) <= 1e-7 * scale);
    break;
  }
}

}  // namespace

TEST_CASE("random LPs agree with exhaustive enumeration") {
  lpcc::Rng rng(20260814);
  for (int trial = 0; trial < 300; ++trial) {
    CAPTURE(trial);
    check_random_lp(rng);
  }
}

TEST_CASE("warm starting from a stale basis matches the cold solve") {
  lpcc::Rng rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    CAPTURE(trial);
    const LpModel m = lpcc_test::random_lp(rng);
    SimplexSolver solver(m);
    const LpSolution cold = solver.solve();
    if (cold.status != LpStatus::Optimal || m.num_vars() < 1) continue;

    // Perturb a bound, re-solve warm, then verify against a fresh solve.
    const int j = static_cast<int>(rng.below(m.num_vars()));
    solver.set_var_bounds(j, 0.0, 1.0 + static_cast<double>(rng.below(3)));
    const LpSolution warm = solver.solve(&cold.basis);

    LpModel patched = m;
    patched.lower[j] = solver.var_lower(j);
    patched.upper[j] = solver.var_upper(j);
    const LpSolution fresh = lpcc::solve_lp(patched);
    CHECK(warm.status == fresh.status);
    if (warm.status == LpStatus::Optimal) {
      const double scale = std::max(1.0, std::fabs(fresh.objective));
      CHECK(std::fabs(warm.objective - fresh.objective) <= 1e-7 * scale);
    }
  }
}

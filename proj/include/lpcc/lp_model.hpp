// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "lpcc/sparse.hpp"

namespace lpcc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense : unsigned char { Ge, Le, Eq };

// Minimization LP:  min c^T v  s.t.  A v {>=,<=,=} rhs,  lower <= v <= upper.
// Bounds may be +-infinity.
struct LpModel {
  std::vector<double> objective;
  SparseMatrix constraints;
  std::vector<RowSense> senses;
  std::vector<double> rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }

  // Appends a variable, returns its index.
  int add_var(double cost, double lo, double hi);
  // Appends an empty row, returns its index.  Coefficients go through
  // constraints.add(row, col, value).
  int add_row(RowSense sense, double rhs_value);

  // Throws DimensionError on inconsistent sizes, crossed bounds, or
  // non-finite data where finiteness is required.
  void validate() const;
};

enum class VarStatus : unsigned char {
  Basic,
  AtLower,
  AtUpper,
  Free,   // nonbasic with both bounds infinite, held at zero
  Fixed,  // nonbasic with lower == upper
};

// One status per variable: structural variables first, then one logical
// (slack) variable per row.  Exactly num_rows() entries are Basic.
struct Basis {
  std::vector<VarStatus> status;
  bool empty() const { return status.empty(); }
};

enum class LpStatus : unsigned char { Optimal, Infeasible, UnboundedBelow };

// Row of the simplex tableau for one basic variable, written in displacement
// form: basic = constant - sum coeffs[j] * xi_j, where xi_j >= 0 measures how
// far nonbasic j has moved from the bound it currently sits at (u - v for a
// variable at its upper bound, v - l otherwise).  Substituting xi = 0
// reproduces the basic variable's current value.
struct TableauRow {
  int basic_var = -1;
  double constant = 0.0;
  // (variable id, coefficient), ids < num_vars are structural, the rest are
  // row logicals; sorted by id, near-zero entries dropped.
  std::vector<std::pair<int, double>> coeffs;
};

namespace simplex_detail {
struct Snapshot;
}

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  // Structural values.  For Optimal this is the optimal vertex; for
  // UnboundedBelow the vertex the ray leaves; for Infeasible the final
  // phase-1 point (not feasible).
  std::vector<double> x;
  // +inf when infeasible, -inf when unbounded below.
  double objective = 0.0;
  Basis basis;
  // Extreme ray in structural space, scaled to unit infinity norm.  Only
  // populated for UnboundedBelow; x then holds the vertex the ray leaves.
  std::vector<double> ray;
  // Simplex iterations spent on this solve (both phases).
  long iterations = 0;

  std::shared_ptr<const simplex_detail::Snapshot> snapshot;

  int num_structural() const;
  int num_rows() const;
  // Status/value of any variable, logical ids included.
  VarStatus var_status(int id) const;
  double var_value(int id) const;
  bool is_basic(int id) const;
};

struct SimplexOptions {
  double feas_tol = 1e-9;         // primal feasibility
  double dual_tol = 1e-9;         // reduced-cost threshold
  double pivot_tol = 1e-7;        // smallest acceptable pivot
  int refactor_interval = 100;    // pivots between refactorizations
  double residual_tol = 1e-8;     // basic-solution residual forcing refactor
  long max_iterations = 0;        // 0 = automatic cap
};

}  // namespace lpcc

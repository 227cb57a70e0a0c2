// SPDX-License-Identifier: Apache-2.0
//
// Two-phase revised primal simplex over bounded variables.
//
// Rows are turned into equalities with one logical variable each
// (A v + s = rhs, the logical's bounds encode the sense).  Phase 1 drives the
// sum of basic bound violations to zero with piecewise-linear costs, so no
// artificial columns are ever added and any starting basis, warm or cold,
// goes through the same path.  Pricing is Dantzig with a Bland fallback once
// the iteration stops improving; the basis is held as a dense LU plus a
// product-form eta file and refactored on a fixed cadence or when the
// residual drifts.

#pragma once

#include <memory>
#include <vector>

#include "lpcc/lp_model.hpp"

namespace lpcc {

namespace simplex_detail {

struct ColMatrix {
  int nrows = 0;
  int ncols = 0;
  std::vector<int> start;  // ncols + 1
  std::vector<int> row;
  std::vector<double> val;
};

struct DenseLU {
  int n = 0;
  std::vector<double> a;  // n*n row-major, unit-L below, U on/above diagonal
  std::vector<int> piv;
  bool factorize();
  void ftran(std::vector<double>& x) const;  // B x = b
  void btran(std::vector<double>& x) const;  // B^T y = c
};

// Frozen state of the final basis; owned by LpSolution via shared_ptr so
// tableau rows and duals can be extracted after the solver is gone.
struct Snapshot {
  int nrows = 0;
  int nstruct = 0;
  std::shared_ptr<const ColMatrix> cols;
  std::vector<double> cost;  // structural costs
  std::vector<double> lo, hi;
  std::vector<double> rhs;
  std::vector<RowSense> senses;
  std::vector<VarStatus> stat;   // nstruct + nrows
  std::vector<double> value;     // nstruct + nrows
  std::vector<int> basis_vars;   // nrows
  std::vector<int> pos_of;       // nstruct + nrows, -1 when nonbasic
  DenseLU lu;
};

double snapshot_value(const LpSolution& sol, int id);

}  // namespace simplex_detail

// Reusable solver over one constraint structure.  Bounds, objective and
// right-hand sides may be patched between solves; rows and coefficients are
// fixed at construction.  Each solve() is independent and deterministic:
// identical data and warm basis give identical results.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LpModel& model, SimplexOptions opts = {});
  ~SimplexSolver();
  SimplexSolver(SimplexSolver&&) noexcept;
  SimplexSolver& operator=(SimplexSolver&&) noexcept;

  int num_vars() const { return nstruct_; }
  int num_rows() const { return nrows_; }
  int num_total() const { return nstruct_ + nrows_; }

  void set_var_bounds(int var, double lo, double hi);
  void set_objective(const std::vector<double>& cost);
  void set_rhs(int row, double value);
  double var_lower(int var) const { return lo_[var]; }
  double var_upper(int var) const { return hi_[var]; }

  // Solves from the warm basis when given and usable, else from the logical
  // basis.  Throws NumericalFailure only if the scratch start also stalls.
  LpSolution solve(const Basis* warm = nullptr);

 private:
  struct Work;
  enum class PhaseExit { Proceed, Infeasible, Optimal, Unbounded, Stalled };

  void init_work(Work& w, const Basis* warm) const;
  bool refactorize(Work& w) const;
  void recompute_values(Work& w) const;
  double column_dot(const std::vector<double>& y, int var) const;
  void column_copy(int var, std::vector<double>& out) const;
  PhaseExit run_phase(Work& w, bool phase1) const;
  LpSolution package(Work& w, LpStatus status, int ray_var, int ray_dir,
                     const std::vector<double>& ray_col) const;
  LpSolution finish(Work&& w, LpStatus status);

  SimplexOptions opts_;
  int nrows_ = 0;
  int nstruct_ = 0;
  std::shared_ptr<const simplex_detail::ColMatrix> cols_;
  std::vector<RowSense> senses_;
  std::vector<double> cost_;       // structural
  std::vector<double> lo_, hi_;    // nstruct + nrows (logical bounds frozen)
  std::vector<double> rhs_;
  std::vector<double> colw_;       // 1 + ||column||^2 pricing weights

  // Feasible end state of the previous solve.  While only the objective has
  // changed since, a solve warm-started from that exact basis skips phase 1
  // and the refactorization and resumes phase 2 in place.
  std::unique_ptr<Work> cache_;
  bool cache_reusable_ = false;
};

// One-shot convenience wrapper.
LpSolution solve_lp(const LpModel& model, const Basis* warm = nullptr,
                    const SimplexOptions& opts = {});

// Tableau row of a basic variable in displacement form; throws
// std::logic_error when the variable is not basic or the solution carries no
// snapshot.  Nonbasic fixed variables are omitted (their displacement cannot
// move off zero).
TableauRow tableau_row(const LpSolution& sol, int var);

// Row duals priced from the final basis, y = B^-T c_B.
std::vector<double> dual_values(const LpSolution& sol);

// Copy of the model with one variable's upper bound set to zero.
LpModel fix_to_zero(const LpModel& model, int var);

}  // namespace lpcc

// SPDX-License-Identifier: Apache-2.0

#include "lpcc/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

#include "lpcc/errors.hpp"

namespace lpcc {

namespace simplex_detail {

bool DenseLU::factorize() {
  piv.assign(n, 0);
  double amax = 0.0;
  for (double v : a) amax = std::max(amax, std::fabs(v));
  const double singular_tol = 1e-13 * (1.0 + amax);
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::fabs(a[static_cast<std::size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double cand = std::fabs(a[static_cast<std::size_t>(i) * n + k]);
      if (cand > best) {
        best = cand;
        p = i;
      }
    }
    if (best <= singular_tol) return false;
    piv[k] = p;
    if (p != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<std::size_t>(k) * n + j],
                  a[static_cast<std::size_t>(p) * n + j]);
      }
    }
    const double pivot = a[static_cast<std::size_t>(k) * n + k];
    for (int i = k + 1; i < n; ++i) {
      double& lik = a[static_cast<std::size_t>(i) * n + k];
      if (lik == 0.0) continue;
      lik /= pivot;
      const double f = lik;
      const double* urow = &a[static_cast<std::size_t>(k) * n];
      double* irow = &a[static_cast<std::size_t>(i) * n];
      for (int j = k + 1; j < n; ++j) irow[j] -= f * urow[j];
    }
  }
  return true;
}

void DenseLU::ftran(std::vector<double>& x) const {
  for (int k = 0; k < n; ++k) {
    if (piv[k] != k) std::swap(x[k], x[piv[k]]);
  }
  for (int i = 1; i < n; ++i) {
    double s = x[i];
    const double* row = &a[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < i; ++j) s -= row[j] * x[j];
    x[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    const double* row = &a[static_cast<std::size_t>(i) * n];
    for (int j = i + 1; j < n; ++j) s -= row[j] * x[j];
    x[i] = s / row[i];
  }
}

void DenseLU::btran(std::vector<double>& x) const {
  // Solve U^T z = x, then L^T y = z, then undo row swaps.
  for (int i = 0; i < n; ++i) {
    double s = x[i];
    for (int j = 0; j < i; ++j) {
      s -= a[static_cast<std::size_t>(j) * n + i] * x[j];
    }
    x[i] = s / a[static_cast<std::size_t>(i) * n + i];
  }
  for (int i = n - 2; i >= 0; --i) {
    double s = x[i];
    for (int j = i + 1; j < n; ++j) {
      s -= a[static_cast<std::size_t>(j) * n + i] * x[j];
    }
    x[i] = s;
  }
  for (int k = n - 1; k >= 0; --k) {
    if (piv[k] != k) std::swap(x[k], x[piv[k]]);
  }
}

double snapshot_value(const LpSolution& sol, int id) {
  if (sol.snapshot) return sol.snapshot->value.at(id);
  return sol.x.at(id);
}

}  // namespace simplex_detail

using simplex_detail::ColMatrix;
using simplex_detail::DenseLU;
using simplex_detail::Snapshot;

namespace {

// Product-form update: basis column at position pos was replaced by a column
// whose ftran image (against the basis before the swap) is col.
struct Eta {
  int pos;
  std::vector<double> col;
};

void apply_eta_ftran(const Eta& e, std::vector<double>& x) {
  const double t = x[e.pos] / e.col[e.pos];
  if (t != 0.0) {
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) x[i] -= e.col[i] * t;
  }
  x[e.pos] = t;
}

void apply_eta_btran(const Eta& e, std::vector<double>& x) {
  double s = x[e.pos];
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) {
    if (i != e.pos) s -= e.col[i] * x[i];
  }
  x[e.pos] = s / e.col[e.pos];
}

}  // namespace

struct SimplexSolver::Work {
  std::vector<VarStatus> stat;  // nstruct + nrows
  std::vector<double> value;
  std::vector<int> basis_vars;
  std::vector<int> pos_of;
  DenseLU lu;
  std::vector<Eta> etas;
  int pivots_since_refactor = 0;
  long iterations = 0;
  long nonimproving = 0;
  bool bland = false;
  bool fresh_factor = false;  // no pivots since the last refactorization
  double merit = kInf;        // progress measure of the active phase
  double bound_scale = 1.0;
  double cost_scale = 1.0;

  std::vector<double> pricing;  // btran work vector, size nrows
  std::vector<double> ftran_col;

  // Unbounded exit data (phase 2).
  int exit_ray_var = -1;
  int exit_ray_dir = 0;
  std::vector<double> exit_ray_col;
};

SimplexSolver::SimplexSolver(const LpModel& model, SimplexOptions opts)
    : opts_(opts) {
  model.validate();
  nrows_ = model.num_rows();
  nstruct_ = model.num_vars();
  senses_ = model.senses;
  cost_ = model.objective;
  rhs_ = model.rhs;

  auto cols = std::make_shared<ColMatrix>();
  cols->nrows = nrows_;
  cols->ncols = nstruct_;
  std::vector<int> count(nstruct_ + 1, 0);
  for (const Triplet& t : model.constraints.triplets()) ++count[t.col + 1];
  cols->start.assign(nstruct_ + 1, 0);
  for (int j = 0; j < nstruct_; ++j) {
    cols->start[j + 1] = cols->start[j] + count[j + 1];
  }
  cols->row.resize(model.constraints.nnz());
  cols->val.resize(model.constraints.nnz());
  std::vector<int> fill(cols->start.begin(), cols->start.end() - 1);
  for (const Triplet& t : model.constraints.triplets()) {
    const int at = fill[t.col]++;
    cols->row[at] = t.row;
    cols->val[at] = t.value;
  }
  cols_ = std::move(cols);

  colw_.assign(num_total(), 2.0);  // logical columns are unit vectors
  for (int j = 0; j < nstruct_; ++j) {
    double s = 1.0;
    for (int p = cols_->start[j]; p < cols_->start[j + 1]; ++p) {
      s += cols_->val[p] * cols_->val[p];
    }
    colw_[j] = s;
  }

  lo_.resize(num_total());
  hi_.resize(num_total());
  for (int j = 0; j < nstruct_; ++j) {
    lo_[j] = model.lower[j];
    hi_[j] = model.upper[j];
  }
  for (int i = 0; i < nrows_; ++i) {
    switch (senses_[i]) {
      case RowSense::Ge:  // A v >= rhs  ->  s = rhs - A v <= 0
        lo_[nstruct_ + i] = -kInf;
        hi_[nstruct_ + i] = 0.0;
        break;
      case RowSense::Le:
        lo_[nstruct_ + i] = 0.0;
        hi_[nstruct_ + i] = kInf;
        break;
      case RowSense::Eq:
        lo_[nstruct_ + i] = 0.0;
        hi_[nstruct_ + i] = 0.0;
        break;
    }
  }
}

SimplexSolver::~SimplexSolver() = default;
SimplexSolver::SimplexSolver(SimplexSolver&&) noexcept = default;
SimplexSolver& SimplexSolver::operator=(SimplexSolver&&) noexcept = default;

void SimplexSolver::set_var_bounds(int var, double lo, double hi) {
  assert(var >= 0 && var < nstruct_);
  if (lo_[var] != lo || hi_[var] != hi) cache_reusable_ = false;
  lo_[var] = lo;
  hi_[var] = hi;
}

void SimplexSolver::set_objective(const std::vector<double>& cost) {
  assert(static_cast<int>(cost.size()) == nstruct_);
  cost_ = cost;  // an objective change alone keeps the cached basis feasible
}

void SimplexSolver::set_rhs(int row, double value) {
  assert(row >= 0 && row < nrows_);
  if (rhs_[row] != value) cache_reusable_ = false;
  rhs_[row] = value;
}

double SimplexSolver::column_dot(const std::vector<double>& y, int var) const {
  if (var >= nstruct_) return y[var - nstruct_];
  double s = 0.0;
  for (int p = cols_->start[var]; p < cols_->start[var + 1]; ++p) {
    s += cols_->val[p] * y[cols_->row[p]];
  }
  return s;
}

void SimplexSolver::column_copy(int var, std::vector<double>& out) const {
  out.assign(nrows_, 0.0);
  if (var >= nstruct_) {
    out[var - nstruct_] = 1.0;
    return;
  }
  for (int p = cols_->start[var]; p < cols_->start[var + 1]; ++p) {
    out[cols_->row[p]] = cols_->val[p];
  }
}

namespace {

double nonbasic_rest_value(VarStatus s, double lo, double hi) {
  switch (s) {
    case VarStatus::AtLower:
    case VarStatus::Fixed:
      return lo;
    case VarStatus::AtUpper:
      return hi;
    case VarStatus::Free:
      return 0.0;
    case VarStatus::Basic:
      break;
  }
  return 0.0;
}

// Reconciles a stored nonbasic status against possibly patched bounds.
VarStatus reconcile(VarStatus s, double lo, double hi) {
  if (lo == hi) return VarStatus::Fixed;
  switch (s) {
    case VarStatus::AtLower:
      if (std::isfinite(lo)) return VarStatus::AtLower;
      break;
    case VarStatus::AtUpper:
      if (std::isfinite(hi)) return VarStatus::AtUpper;
      break;
    default:
      break;
  }
  if (std::isfinite(lo)) return VarStatus::AtLower;
  if (std::isfinite(hi)) return VarStatus::AtUpper;
  return VarStatus::Free;
}

}  // namespace

void SimplexSolver::init_work(Work& w, const Basis* warm) const {
  const int ntot = num_total();
  w.stat.assign(ntot, VarStatus::AtLower);

  bool use_warm = warm != nullptr &&
                  static_cast<int>(warm->status.size()) == ntot;
  if (use_warm) {
    int basic = 0;
    for (VarStatus s : warm->status) basic += (s == VarStatus::Basic);
    use_warm = basic == nrows_;
  }

  if (use_warm) {
    for (int j = 0; j < ntot; ++j) {
      w.stat[j] = warm->status[j] == VarStatus::Basic
                      ? VarStatus::Basic
                      : reconcile(warm->status[j], lo_[j], hi_[j]);
    }
  } else {
    for (int j = 0; j < nstruct_; ++j) {
      w.stat[j] = reconcile(VarStatus::AtLower, lo_[j], hi_[j]);
    }
    for (int i = 0; i < nrows_; ++i) {
      w.stat[nstruct_ + i] = VarStatus::Basic;
    }
  }

  w.basis_vars.clear();
  w.basis_vars.reserve(nrows_);
  w.pos_of.assign(ntot, -1);
  for (int j = 0; j < ntot; ++j) {
    if (w.stat[j] == VarStatus::Basic) {
      w.pos_of[j] = static_cast<int>(w.basis_vars.size());
      w.basis_vars.push_back(j);
    }
  }

  w.value.assign(ntot, 0.0);
  for (int j = 0; j < ntot; ++j) {
    if (w.stat[j] != VarStatus::Basic) {
      w.value[j] = nonbasic_rest_value(w.stat[j], lo_[j], hi_[j]);
    }
  }

  w.bound_scale = 1.0;
  for (double v : rhs_) w.bound_scale = std::max(w.bound_scale, std::fabs(v));
  for (int j = 0; j < ntot; ++j) {
    if (std::isfinite(lo_[j])) {
      w.bound_scale = std::max(w.bound_scale, std::fabs(lo_[j]));
    }
    if (std::isfinite(hi_[j])) {
      w.bound_scale = std::max(w.bound_scale, std::fabs(hi_[j]));
    }
  }
  w.cost_scale = 1.0;
  for (double c : cost_) w.cost_scale = std::max(w.cost_scale, std::fabs(c));
  w.pricing.assign(nrows_, 0.0);
  w.ftran_col.assign(nrows_, 0.0);
}

bool SimplexSolver::refactorize(Work& w) const {
  w.lu.n = nrows_;
  w.lu.a.assign(static_cast<std::size_t>(nrows_) * nrows_, 0.0);
  for (int p = 0; p < nrows_; ++p) {
    const int var = w.basis_vars[p];
    if (var >= nstruct_) {
      w.lu.a[static_cast<std::size_t>(var - nstruct_) * nrows_ + p] = 1.0;
    } else {
      for (int q = cols_->start[var]; q < cols_->start[var + 1]; ++q) {
        w.lu.a[static_cast<std::size_t>(cols_->row[q]) * nrows_ + p] =
            cols_->val[q];
      }
    }
  }
  if (!w.lu.factorize()) return false;
  w.etas.clear();
  w.pivots_since_refactor = 0;
  w.fresh_factor = true;
  return true;
}

void SimplexSolver::recompute_values(Work& w) const {
  std::vector<double> rb = rhs_;
  for (int j = 0; j < num_total(); ++j) {
    if (w.stat[j] == VarStatus::Basic) continue;
    const double v = nonbasic_rest_value(w.stat[j], lo_[j], hi_[j]);
    w.value[j] = v;
    if (v == 0.0) continue;
    if (j >= nstruct_) {
      rb[j - nstruct_] -= v;
    } else {
      for (int p = cols_->start[j]; p < cols_->start[j + 1]; ++p) {
        rb[cols_->row[p]] -= cols_->val[p] * v;
      }
    }
  }
  w.lu.ftran(rb);
  for (const Eta& e : w.etas) apply_eta_ftran(e, rb);
  for (int p = 0; p < nrows_; ++p) w.value[w.basis_vars[p]] = rb[p];
}

SimplexSolver::PhaseExit SimplexSolver::run_phase(Work& w, bool phase1) const {
  const int ntot = num_total();
  const double ftol = opts_.feas_tol * w.bound_scale;
  const double dtol =
      opts_.dual_tol * (phase1 ? 1.0 : w.cost_scale);
  const long bland_trigger = 5L * (nrows_ + ntot);
  const long cap = opts_.max_iterations > 0
                       ? opts_.max_iterations
                       : 400L * (nrows_ + ntot) + 40000L;

  w.merit = kInf;
  w.nonimproving = 0;
  w.bland = false;
  long iter_in_phase = 0;

  std::vector<double> y(nrows_);

  for (;;) {
    if (++iter_in_phase > cap) {
      throw NumericalFailure(phase1 ? "phase 1 iteration cap"
                                    : "phase 2 iteration cap");
    }
    ++w.iterations;

    if (w.pivots_since_refactor >= opts_.refactor_interval) {
      if (!refactorize(w)) throw NumericalFailure("singular basis");
      recompute_values(w);
    } else if ((iter_in_phase & 31) == 0 && nrows_ > 0) {
      // Residual drift check on the cheap cadence.
      std::vector<double> res = rhs_;
      for (int j = 0; j < ntot; ++j) {
        const double v = w.value[j];
        if (v == 0.0) continue;
        if (j >= nstruct_) {
          res[j - nstruct_] -= v;
        } else {
          for (int p = cols_->start[j]; p < cols_->start[j + 1]; ++p) {
            res[cols_->row[p]] -= cols_->val[p] * v;
          }
        }
      }
      double rmax = 0.0;
      for (double v : res) rmax = std::max(rmax, std::fabs(v));
      if (rmax > opts_.residual_tol * w.bound_scale) {
        if (!refactorize(w)) throw NumericalFailure("singular basis");
        recompute_values(w);
      }
    }

    // Phase-dependent pricing vector over basis positions.
    double merit_now = 0.0;
    bool any_infeasible = false;
    if (phase1) {
      std::fill(y.begin(), y.end(), 0.0);
      for (int p = 0; p < nrows_; ++p) {
        const int var = w.basis_vars[p];
        const double v = w.value[var];
        if (v < lo_[var] - ftol) {
          y[p] = -1.0;
          merit_now += lo_[var] - v;
          any_infeasible = true;
        } else if (v > hi_[var] + ftol) {
          y[p] = 1.0;
          merit_now += v - hi_[var];
          any_infeasible = true;
        }
      }
      if (!any_infeasible) return PhaseExit::Proceed;
    } else {
      for (int p = 0; p < nrows_; ++p) {
        const int var = w.basis_vars[p];
        y[p] = var < nstruct_ ? cost_[var] : 0.0;
      }
      for (int j = 0; j < nstruct_; ++j) {
        if (w.stat[j] != VarStatus::Basic) merit_now += cost_[j] * w.value[j];
      }
      for (int p = 0; p < nrows_; ++p) {
        const int var = w.basis_vars[p];
        if (var < nstruct_) merit_now += cost_[var] * w.value[var];
      }
    }

    if (merit_now < w.merit - 1e-12 * (1.0 + std::fabs(w.merit))) {
      w.merit = merit_now;
      w.nonimproving = 0;
      w.bland = false;
    } else if (++w.nonimproving > bland_trigger) {
      w.bland = true;
    }

    // y^T = g^T B^-1 (phase 1) or c_B^T B^-1 (phase 2); etas newest-first,
    // then the base factors.
    for (auto it = w.etas.rbegin(); it != w.etas.rend(); ++it) {
      apply_eta_btran(*it, y);
    }
    w.lu.btran(y);

    // Entering variable.
    int enter = -1;
    int dir = 0;
    double best_score = dtol;
    for (int j = 0; j < ntot; ++j) {
      const VarStatus s = w.stat[j];
      if (s == VarStatus::Basic || s == VarStatus::Fixed) continue;
      const double cj = phase1 ? 0.0 : (j < nstruct_ ? cost_[j] : 0.0);
      const double d = cj - column_dot(y, j);
      int cand_dir = 0;
      double score = 0.0;
      if (s == VarStatus::AtLower) {
        if (d < -dtol) {
          cand_dir = 1;
          score = -d;
        }
      } else if (s == VarStatus::AtUpper) {
        if (d > dtol) {
          cand_dir = -1;
          score = d;
        }
      } else {  // Free
        if (d < -dtol) {
          cand_dir = 1;
          score = -d;
        } else if (d > dtol) {
          cand_dir = -1;
          score = d;
        }
      }
      if (cand_dir == 0) continue;
      if (w.bland) {
        enter = j;
        dir = cand_dir;
        break;
      }
      // Column-norm scaling approximates steepest edge at no per-pivot cost.
      score = score * score / colw_[j];
      if (score > best_score) {
        best_score = score;
        enter = j;
        dir = cand_dir;
      }
    }

    if (enter < 0) {
      if (!w.fresh_factor) {
        // Confirm the exit against a clean factorization.
        if (!refactorize(w)) throw NumericalFailure("singular basis");
        recompute_values(w);
        continue;
      }
      if (phase1) {
        return any_infeasible ? PhaseExit::Infeasible : PhaseExit::Proceed;
      }
      return PhaseExit::Optimal;
    }

    // w.ftran_col = B^-1 a_enter.
    column_copy(enter, w.ftran_col);
    w.lu.ftran(w.ftran_col);
    for (const Eta& e : w.etas) apply_eta_ftran(e, w.ftran_col);

    // Ratio test.  Basic p moves at rate delta_p = -dir * col[p].  Within a
    // relative tie band the larger pivot wins (lowest id under Bland).
    double best_t = kInf;
    int leave_pos = -1;
    double leave_pivot = 0.0;
    int leave_to_upper = 0;
    auto scan_ratios = [&](double ptol) {
      for (int p = 0; p < nrows_; ++p) {
        const double c = w.ftran_col[p];
        if (std::fabs(c) <= ptol) continue;
        const int var = w.basis_vars[p];
        const double delta = -dir * c;
        const double v = w.value[var];
        double t = kInf;
        int to_upper = 0;
        if (delta < 0.0) {
          // moving down
          if (phase1 && v > hi_[var] + ftol) {
            t = (v - hi_[var]) / -delta;
            to_upper = 1;
          } else if (std::isfinite(lo_[var]) && v >= lo_[var] - ftol) {
            t = (v - lo_[var]) / -delta;
            to_upper = 0;
          }
        } else {
          // moving up
          if (phase1 && v < lo_[var] - ftol) {
            t = (lo_[var] - v) / delta;
            to_upper = 0;
          } else if (std::isfinite(hi_[var]) && v <= hi_[var] + ftol) {
            t = (hi_[var] - v) / delta;
            to_upper = 1;
          }
        }
        if (!std::isfinite(t)) continue;
        if (t < 0.0) t = 0.0;
        if (leave_pos < 0) {
          best_t = t;
          leave_pos = p;
          leave_pivot = std::fabs(c);
          leave_to_upper = to_upper;
          continue;
        }
        const double tie = 1e-9 * (1.0 + best_t);
        if (t < best_t - tie) {
          best_t = t;
          leave_pos = p;
          leave_pivot = std::fabs(c);
          leave_to_upper = to_upper;
        } else if (t <= best_t + tie) {
          if (w.bland) {
            if (var < w.basis_vars[leave_pos]) {
              leave_pos = p;
              leave_pivot = std::fabs(c);
              leave_to_upper = to_upper;
            }
          } else if (std::fabs(c) > leave_pivot) {
            best_t = std::min(best_t, t);
            leave_pos = p;
            leave_pivot = std::fabs(c);
            leave_to_upper = to_upper;
          }
        }
      }
    };
    scan_ratios(opts_.pivot_tol);
    if (leave_pos < 0) {
      // Accept tiny pivots before declaring the direction unblocked.
      scan_ratios(1e-12);
    }

    const double range = hi_[enter] - lo_[enter];
    const bool can_flip = std::isfinite(range);

    if (leave_pos < 0 && !can_flip) {
      // No blocking basic and the entering variable is unbounded in its
      // improving direction.
      if (phase1) throw NumericalFailure("phase 1 unbounded direction");
      if (!w.fresh_factor) {
        if (!refactorize(w)) throw NumericalFailure("singular basis");
        recompute_values(w);
        continue;
      }
      w.exit_ray_var = enter;
      w.exit_ray_dir = dir;
      w.exit_ray_col = w.ftran_col;
      return PhaseExit::Unbounded;
    }

    if (can_flip && (leave_pos < 0 || range <= best_t)) {
      // Bound flip: the entering variable crosses to its other bound.
      for (int p = 0; p < nrows_; ++p) {
        const double c = w.ftran_col[p];
        if (c == 0.0) continue;
        w.value[w.basis_vars[p]] += -dir * c * range;
      }
      w.value[enter] = dir > 0 ? hi_[enter] : lo_[enter];
      w.stat[enter] =
          dir > 0 ? VarStatus::AtUpper : VarStatus::AtLower;
      w.fresh_factor = false;
      continue;
    }

    // Pivot.
    const double t = best_t;
    for (int p = 0; p < nrows_; ++p) {
      const double c = w.ftran_col[p];
      if (c == 0.0) continue;
      w.value[w.basis_vars[p]] += -dir * c * t;
    }
    const int leave_var = w.basis_vars[leave_pos];
    w.value[leave_var] = leave_to_upper ? hi_[leave_var] : lo_[leave_var];
    w.stat[leave_var] = lo_[leave_var] == hi_[leave_var]
                            ? VarStatus::Fixed
                            : (leave_to_upper ? VarStatus::AtUpper
                                              : VarStatus::AtLower);
    w.value[enter] += dir * t;
    w.stat[enter] = VarStatus::Basic;
    w.pos_of[enter] = leave_pos;
    w.pos_of[leave_var] = -1;
    w.basis_vars[leave_pos] = enter;
    w.etas.push_back({leave_pos, w.ftran_col});
    ++w.pivots_since_refactor;
    w.fresh_factor = false;
  }
}

LpSolution SimplexSolver::package(Work& w, LpStatus status, int ray_var,
                                  int ray_dir,
                                  const std::vector<double>& ray_col) const {
  LpSolution sol;
  sol.status = status;

  // Snapshot over a clean factorization.
  if (!refactorize(w)) throw NumericalFailure("singular basis at exit");
  recompute_values(w);

  auto snap = std::make_shared<Snapshot>();
  snap->nrows = nrows_;
  snap->nstruct = nstruct_;
  snap->cols = cols_;
  snap->cost = cost_;
  snap->lo = lo_;
  snap->hi = hi_;
  snap->rhs = rhs_;
  snap->senses = senses_;
  snap->stat = w.stat;
  snap->value = w.value;
  snap->basis_vars = w.basis_vars;
  snap->pos_of = w.pos_of;
  snap->lu = w.lu;

  sol.basis.status = w.stat;
  sol.iterations = w.iterations;
  sol.x.assign(w.value.begin(), w.value.begin() + nstruct_);
  double obj = 0.0;
  for (int j = 0; j < nstruct_; ++j) obj += cost_[j] * w.value[j];
  sol.objective = obj;
  if (status == LpStatus::Infeasible) sol.objective = kInf;
  if (status == LpStatus::UnboundedBelow) {
    sol.objective = -kInf;
    sol.ray.assign(nstruct_, 0.0);
    if (ray_var < nstruct_) sol.ray[ray_var] = ray_dir;
    for (int p = 0; p < nrows_; ++p) {
      const int var = w.basis_vars[p];
      if (var < nstruct_ && ray_col[p] != 0.0) {
        sol.ray[var] = -ray_dir * ray_col[p];
      }
    }
    double norm = 0.0;
    for (double v : sol.ray) norm = std::max(norm, std::fabs(v));
    if (norm > 0.0) {
      for (double& v : sol.ray) v /= norm;
    }
  }
  sol.snapshot = std::move(snap);
  return sol;
}

LpSolution SimplexSolver::finish(Work&& w, LpStatus status) {
  cache_ = std::make_unique<Work>(std::move(w));
  // An infeasible exit leaves phase-1 state (values out of bounds), which a
  // phase-2-only resume must never start from.
  cache_reusable_ = status != LpStatus::Infeasible;
  Work& cw = *cache_;
  if (status == LpStatus::UnboundedBelow) {
    return package(cw, status, cw.exit_ray_var, cw.exit_ray_dir,
                   cw.exit_ray_col);
  }
  return package(cw, status, -1, 0, {});
}

LpSolution SimplexSolver::solve(const Basis* warm) {
  if (cache_reusable_ && cache_ != nullptr && warm != nullptr &&
      warm->status == cache_->stat) {
    Work w = std::move(*cache_);
    cache_.reset();
    cache_reusable_ = false;
    w.cost_scale = 1.0;
    for (double c : cost_) w.cost_scale = std::max(w.cost_scale, std::fabs(c));
    w.merit = kInf;
    w.nonimproving = 0;
    w.bland = false;
    w.iterations = 0;
    try {
      if (run_phase(w, /*phase1=*/false) == PhaseExit::Unbounded) {
        return finish(std::move(w), LpStatus::UnboundedBelow);
      }
      return finish(std::move(w), LpStatus::Optimal);
    } catch (const NumericalFailure&) {
      // fall through to a full solve
    }
  }
  cache_reusable_ = false;

  auto attempt = [&](const Basis* start) -> LpSolution {
    Work w;
    init_work(w, start);
    if (!refactorize(w)) throw NumericalFailure("singular warm basis");
    recompute_values(w);

    if (run_phase(w, /*phase1=*/true) == PhaseExit::Infeasible) {
      return finish(std::move(w), LpStatus::Infeasible);
    }
    if (run_phase(w, /*phase1=*/false) == PhaseExit::Unbounded) {
      return finish(std::move(w), LpStatus::UnboundedBelow);
    }
    return finish(std::move(w), LpStatus::Optimal);
  };

  if (warm != nullptr && !warm->empty()) {
    try {
      return attempt(warm);
    } catch (const NumericalFailure&) {
      // fall through to the scratch basis
    }
  }
  return attempt(nullptr);
}

TableauRow tableau_row(const LpSolution& sol, int var) {
  if (!sol.snapshot) throw std::logic_error("solution has no snapshot");
  const Snapshot& s = *sol.snapshot;
  const int ntot = s.nstruct + s.nrows;
  if (var < 0 || var >= ntot) throw std::logic_error("variable out of range");
  const int pos = s.pos_of[var];
  if (pos < 0) throw std::logic_error("variable is not basic");

  std::vector<double> rho(s.nrows, 0.0);
  rho[pos] = 1.0;
  s.lu.btran(rho);

  TableauRow row;
  row.basic_var = var;
  row.constant = s.value[var];
  for (int j = 0; j < ntot; ++j) {
    const VarStatus st = s.stat[j];
    if (st == VarStatus::Basic || st == VarStatus::Fixed) continue;
    double alpha;
    if (j >= s.nstruct) {
      alpha = rho[j - s.nstruct];
    } else {
      alpha = 0.0;
      for (int p = s.cols->start[j]; p < s.cols->start[j + 1]; ++p) {
        alpha += s.cols->val[p] * rho[s.cols->row[p]];
      }
    }
    if (st == VarStatus::AtUpper) alpha = -alpha;
    if (std::fabs(alpha) > 1e-11) row.coeffs.emplace_back(j, alpha);
  }
  return row;
}

std::vector<double> dual_values(const LpSolution& sol) {
  if (!sol.snapshot) throw std::logic_error("solution has no snapshot");
  const Snapshot& s = *sol.snapshot;
  std::vector<double> y(s.nrows, 0.0);
  for (int p = 0; p < s.nrows; ++p) {
    const int var = s.basis_vars[p];
    y[p] = var < s.nstruct ? s.cost[var] : 0.0;
  }
  s.lu.btran(y);
  return y;
}

LpModel fix_to_zero(const LpModel& model, int var) {
  LpModel out = model;
  out.upper.at(var) = 0.0;
  return out;
}

LpSolution solve_lp(const LpModel& model, const Basis* warm,
                    const SimplexOptions& opts) {
  SimplexSolver solver(model, opts);
  return solver.solve(warm);
}

}  // namespace lpcc

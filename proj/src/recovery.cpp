// SPDX-License-Identifier: Apache-2.0

#include "lpcc/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpcc/errors.hpp"

namespace lpcc {

namespace {

// Gap optima are sums of nonnegative variables, so a value at or below this
// marks the piece feasible; the follow-up piece solve enforces exact zeros.
constexpr double kGapZeroTol = 1e-7;

// One solver shared by every gap evaluation (and, under a window, the
// windowed relaxation solves): the rows never change, only the objective
// and the window right-hand sides are patched, so consecutive solves
// warm-start off the previous basis.  Gap values are cached per assignment
// until the window moves.
class GapEngine {
 public:
  GapEngine(const LpccInstance& inst, bool windowed) : inst_(inst) {
    ObjectiveWindow placeholder{0.0, 0.0};  // rhs patched before any solve
    const Assignment all_w(static_cast<std::size_t>(inst.m), 1);
    const LpModel model =
        build_feasibility_gap_lp(inst, all_w, windowed ? &placeholder : nullptr);
    solver_.emplace(model);
    relax_objective_.assign(model.num_vars(), 0.0);
    for (int j = 0; j < inst.n; ++j) {
      relax_objective_[inst.x_var(j)] = inst.c[j];
    }
    for (int i = 0; i < inst.m; ++i) {
      relax_objective_[inst.y_var(i)] = inst.d[i];
    }
    lo_row_ = inst.k + inst.m;
    hi_row_ = lo_row_ + 1;
  }

  void set_window(double lo, double hi) {
    solver_->set_rhs(lo_row_, lo);
    solver_->set_rhs(hi_row_, hi);
    cache_.clear();
  }

  // Instance objective under the current window.
  LpSolution solve_relaxation() {
    solver_->set_objective(relax_objective_);
    return run();
  }

  // Callers that want the gap optimum itself pass sol_out; those calls skip
  // the value cache because cached entries keep no solution.
  double gap(const Assignment& z, LpSolution* sol_out = nullptr) {
    if (sol_out == nullptr) {
      auto it = cache_.find(z);
      if (it != cache_.end()) return it->second;
    }
    std::vector<double> obj(relax_objective_.size(), 0.0);
    for (int i = 0; i < inst_.m; ++i) {
      obj[z[i] ? inst_.w_var(i) : inst_.y_var(i)] = 1.0;
    }
    solver_->set_objective(obj);
    ++evaluations_;
    LpSolution sol;
    try {
      sol = run();
    } catch (const NumericalFailure&) {
      // A stalled solve poisons only this evaluation, not the engine.
      cache_.insert_or_assign(z, kInf);
      return kInf;
    }
    // The objective is bounded below by zero, so the only non-optimal exit
    // is an infeasible window.
    const double value =
        sol.status == LpStatus::Optimal ? sol.objective : kInf;
    cache_.insert_or_assign(z, value);
    if (sol_out != nullptr) *sol_out = std::move(sol);
    return value;
  }

  int evaluations() const { return evaluations_; }

 private:
  LpSolution run() {
    LpSolution sol = solver_->solve(warm_.empty() ? nullptr : &warm_);
    if (!sol.basis.empty()) warm_ = sol.basis;
    return sol;
  }

  const LpccInstance& inst_;
  std::optional<SimplexSolver> solver_;
  std::vector<double> relax_objective_;
  int lo_row_ = -1;
  int hi_row_ = -1;
  Basis warm_;
  std::map<Assignment, double> cache_;
  int evaluations_ = 0;
};

int resolve_breadth(const LpccInstance& inst, const RecoveryParams& params) {
  if (params.depth < 1) {
    throw std::invalid_argument("recovery depth must be >= 1");
  }
  return params.breadth <= 0 ? inst.m : std::min(params.breadth, inst.m);
}

// Solves the piece without any window and pins the forced sides to exact
// zeros so complementarity holds exactly at any scale.
std::optional<LpccPoint> solve_piece(const LpccInstance& inst,
                                     const Assignment& z) {
  const LpSolution sol = solve_lp(build_piece_lp(inst, z));
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  LpccPoint pt = point_from_solution(inst, sol);
  for (int i = 0; i < inst.m; ++i) {
    (z[i] ? pt.w[i] : pt.y[i]) = 0.0;
  }
  pt.objective = objective_value(inst, pt.x, pt.y);
  return pt;
}

RecoveryResult run_local_search(GapEngine& engine, const LpccInstance& inst,
                                const LpSolution& relax_sol, int depth,
                                int breadth) {
  RecoveryResult out;
  const int m = inst.m;
  const int start_evals = engine.evaluations();
  const auto finish = [&](const Assignment& piece) {
    std::optional<LpccPoint> pt = solve_piece(inst, piece);
    if (!pt) return false;  // numerically false zero; keep searching
    out.recovered = true;
    out.point = std::move(*pt);
    out.z = piece;
    return true;
  };
  const auto done = [&] {
    out.gap_evaluations = engine.evaluations() - start_evals;
    return out;
  };

  const Assignment rounded = round_assignment(inst, relax_sol);
  if (engine.gap(rounded) <= kGapZeroTol && finish(rounded)) return done();

  // Rank every adjacent piece by gap; equal gaps keep the lower flip index.
  std::vector<std::pair<double, int>> ranked;
  ranked.reserve(m);
  for (int i = 0; i < m; ++i) {
    Assignment zi = rounded;
    zi[i] ^= 1;
    ranked.emplace_back(engine.gap(zi), i);
  }
  std::sort(ranked.begin(), ranked.end());

  for (int s = 0; s < breadth; ++s) {
    Assignment z = rounded;
    z[ranked[s].second] ^= 1;
    double fg = ranked[s].first;
    for (int step = 0; step < depth && fg > kGapZeroTol; ++step) {
      int best_flip = -1;
      double best_fg = fg;
      for (int i = 0; i < m; ++i) {
        Assignment zi = z;
        zi[i] ^= 1;
        const double g = engine.gap(zi);
        if (g < best_fg) {  // strict: descent directions only
          best_fg = g;
          best_flip = i;
        }
      }
      if (best_flip < 0) break;
      z[best_flip] ^= 1;
      fg = best_fg;
    }
    if (fg <= kGapZeroTol && finish(z)) return done();
  }
  return done();
}

}  // namespace

Assignment round_assignment(const LpccInstance& inst,
                            const LpSolution& relax_sol) {
  Assignment z(static_cast<std::size_t>(inst.m), 1);
  for (int i = 0; i < inst.m; ++i) {
    if (relax_sol.x[inst.y_var(i)] < relax_sol.x[inst.w_var(i)]) z[i] = 0;
  }
  return z;
}

double feasibility_gap(const LpccInstance& inst, const Assignment& z,
                       const ObjectiveWindow* window, LpSolution* sol_out) {
  LpSolution sol = solve_lp(build_feasibility_gap_lp(inst, z, window));
  const double value = sol.status == LpStatus::Optimal ? sol.objective : kInf;
  if (sol_out != nullptr) *sol_out = std::move(sol);
  return value;
}

RecoveryResult local_search_recovery(const LpccInstance& inst,
                                     const LpSolution& relax_sol,
                                     const RecoveryParams& params) {
  const int breadth = resolve_breadth(inst, params);
  if (relax_sol.status != LpStatus::Optimal) {
    throw std::invalid_argument("recovery needs an optimal relaxation");
  }
  GapEngine engine(inst, /*windowed=*/false);
  return run_local_search(engine, inst, relax_sol, params.depth, breadth);
}

namespace {

struct WalkEnd {
  bool feasible = false;
  Assignment z;          // final piece of the walk
  Assignment recharged;  // final piece with every carrier flipped at once
};

// Gap descent from z: probes single flips cheapest-recharge first and takes
// the first strict improvement; at single-flip minima tries carrier+partner
// pair flips; then spends at most uphill_budget pinned uphill flips before
// giving up.  Only strict decreases move the current piece, so the walk
// terminates; eval_budget caps the worst case.
WalkEnd walk_gap_descent(GapEngine& engine, const LpccInstance& inst,
                         Assignment z, int eval_budget,
                         int uphill_budget = 12) {
  const int m = inst.m;
  const auto improves = [](double g, double base) {
    return g < base - 1e-9 * (1.0 + base);
  };
  LpSolution at;  // gap optimum of the current piece
  double fg = engine.gap(z, &at);
  const int eval_cap = engine.evaluations() + eval_budget;
  int step = 0;
  int uphill_left = uphill_budget;
  std::vector<int> pinned_until(static_cast<std::size_t>(m), 0);

  while (fg > kGapZeroTol && std::isfinite(fg) &&
         engine.evaluations() < eval_cap) {
    // Recharging pair i keeps the current gap optimum feasible, so the side
    // values there bound the flipped gap by fg + other_i - charged_i.  Pairs
    // with small margin are the cheapest to recharge; probing them first and
    // taking the first strict improvement keeps most steps to a few LP
    // re-solves (a negative margin even guarantees the very first probe).
    std::vector<std::pair<double, int>> order;
    order.reserve(m);
    for (int i = 0; i < m; ++i) {
      const double charged = at.x[z[i] ? inst.w_var(i) : inst.y_var(i)];
      const double other = at.x[z[i] ? inst.y_var(i) : inst.w_var(i)];
      order.emplace_back(other - charged, i);
    }
    std::sort(order.begin(), order.end());

    const auto in_budget = [&] { return engine.evaluations() < eval_cap; };
    bool moved = false;
    for (const auto& [margin, i] : order) {
      if (!in_budget()) break;
      if (step < pinned_until[i]) continue;
      Assignment zi = z;
      zi[i] ^= 1;
      LpSolution sol;
      const double g = engine.gap(zi, &sol);
      if (improves(g, fg)) {
        z = std::move(zi);
        fg = g;
        at = std::move(sol);
        moved = true;
        break;
      }
    }
    if (moved) {
      ++step;
      continue;
    }

    // Single-flip minimum: recharging one carrier alone always loses here,
    // so pair it with a partner flip, heaviest carriers first.
    std::vector<std::pair<double, int>> carriers;
    for (int i = 0; i < m; ++i) {
      const double charged = at.x[z[i] ? inst.w_var(i) : inst.y_var(i)];
      if (charged > kGapZeroTol) carriers.emplace_back(-charged, i);
    }
    std::sort(carriers.begin(), carriers.end());
    for (std::size_t a = 0; a < carriers.size() && !moved && in_budget();
         ++a) {
      const int i = carriers[a].second;
      for (const auto& [margin, j] : order) {
        if (!in_budget()) break;
        if (j == i || step < pinned_until[j]) continue;
        Assignment zij = z;
        zij[i] ^= 1;
        zij[j] ^= 1;
        LpSolution sol;
        const double g = engine.gap(zij, &sol);
        if (improves(g, fg)) {
          z = std::move(zij);
          fg = g;
          at = std::move(sol);
          moved = true;
          break;
        }
      }
    }
    if (moved) {
      ++step;
      continue;
    }

    // Pair-flip minimum: take the cheapest unpinned flip uphill and pin it
    // so the next descent steps cannot simply undo the move.
    int pick = -1;
    if (uphill_left > 0) {
      for (const auto& [margin, i] : order) {
        if (step >= pinned_until[i]) {
          pick = i;
          break;
        }
      }
    }
    if (pick < 0) break;
    --uphill_left;
    z[pick] ^= 1;
    pinned_until[pick] = step + 6;
    fg = engine.gap(z, &at);
    ++step;
  }

  WalkEnd end;
  end.feasible = fg <= kGapZeroTol;
  end.z = z;
  end.recharged = std::move(z);
  if (!end.feasible && std::isfinite(fg)) {
    for (int i = 0; i < m; ++i) {
      const double charged = at.x[end.z[i] ? inst.w_var(i) : inst.y_var(i)];
      if (charged > kGapZeroTol) end.recharged[i] ^= 1;
    }
  }
  return end;
}

}  // namespace

RecoveryResult descent_recovery(const LpccInstance& inst,
                                const LpSolution& relax_sol) {
  if (relax_sol.status != LpStatus::Optimal) {
    throw std::invalid_argument("recovery needs an optimal relaxation");
  }
  GapEngine engine(inst, /*windowed=*/false);
  RecoveryResult out;

  // Start ladder: the rounded relaxation first, then its dead end with all
  // carriers recharged at once (a fresh basin near the best piece seen),
  // then the two uniform pieces.  Each start gets its own eval budget.
  WalkEnd end =
      walk_gap_descent(engine, inst, round_assignment(inst, relax_sol), 4000);
  if (!end.feasible) {
    const Assignment carry = end.recharged;
    end = walk_gap_descent(engine, inst, carry, 2500);
  }
  if (!end.feasible) {
    end = walk_gap_descent(
        engine, inst, Assignment(static_cast<std::size_t>(inst.m), 1), 2500);
  }
  if (!end.feasible) {
    end = walk_gap_descent(
        engine, inst, Assignment(static_cast<std::size_t>(inst.m), 0), 2500);
  }

  if (end.feasible) {
    std::optional<LpccPoint> pt = solve_piece(inst, end.z);
    if (pt) {
      out.recovered = true;
      out.point = std::move(*pt);
      out.z = std::move(end.z);
    }
  }
  out.gap_evaluations = engine.evaluations();
  return out;
}

RecoveryResult descent_refined_recovery(const LpccInstance& inst,
                                        double ub_initial, double lb_initial,
                                        double search_gap_min) {
  RecoveryResult best;
  if (!std::isfinite(ub_initial) || !std::isfinite(lb_initial)) return best;
  const double gap_min =
      search_gap_min >= 0.0 ? search_gap_min
                            : 1e-6 * std::max(1.0, std::abs(lb_initial));

  GapEngine engine(inst, /*windowed=*/true);
  double lb = lb_initial;
  double ub = ub_initial;
  double best_value = kInf;
  while (ub - lb > gap_min) {
    engine.set_window(lb, ub);
    bool success = false;
    LpSolution relax;
    try {
      relax = engine.solve_relaxation();
    } catch (const NumericalFailure&) {
      relax.status = LpStatus::Infeasible;
    }
    if (relax.status == LpStatus::Optimal) {
      // One budgeted walk per window keeps failing rounds cheap.
      const WalkEnd end = walk_gap_descent(
          engine, inst, round_assignment(inst, relax), 500, 8);
      if (end.feasible) {
        std::optional<LpccPoint> pt = solve_piece(inst, end.z);
        if (pt) {
          success = true;
          const double value = pt->objective;
          if (value < best_value) {
            best_value = value;
            best.recovered = true;
            best.point = std::move(*pt);
            best.z = end.z;
          }
          // Re-anchor the top at the recovered value, then halve toward lb.
          ub = std::min(value, ub);
          ub = 0.5 * (lb + ub);
        }
      }
    }
    if (!success) lb = 0.5 * (lb + ub);
  }
  best.gap_evaluations = engine.evaluations();
  return best;
}

RecoveryResult refined_recovery(const LpccInstance& inst, double ub_initial,
                                double lb_initial,
                                const RecoveryParams& params) {
  const int breadth = resolve_breadth(inst, params);
  RecoveryResult best;
  if (!std::isfinite(ub_initial) || !std::isfinite(lb_initial)) return best;
  const double gap_min =
      params.search_gap_min >= 0.0
          ? params.search_gap_min
          : 1e-6 * std::max(1.0, std::abs(lb_initial));

  GapEngine engine(inst, /*windowed=*/true);
  double lb = lb_initial;
  double ub = ub_initial;
  double best_value = kInf;
  int evaluations = 0;
  while (ub - lb > gap_min) {
    engine.set_window(lb, ub);
    bool success = false;
    const LpSolution relax = engine.solve_relaxation();
    if (relax.status == LpStatus::Optimal) {
      RecoveryResult round =
          run_local_search(engine, inst, relax, params.depth, breadth);
      evaluations += round.gap_evaluations;
      if (round.recovered) {
        success = true;
        const double value = round.point.objective;
        if (value < best_value) {
          best_value = value;
          best = std::move(round);
        }
        // Re-anchor the top at the recovered value, then halve toward lb.
        ub = std::min(value, ub);
        ub = 0.5 * (lb + ub);
      }
    }
    if (!success) lb = 0.5 * (lb + ub);
  }
  best.gap_evaluations = evaluations;
  return best;
}

}  // namespace lpcc

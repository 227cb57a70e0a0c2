// SPDX-License-Identifier: Apache-2.0
//
// Feasibility recovery.  A relaxation optimum is rounded to a candidate
// piece; when that piece is infeasible, a bounded local search walks
// gap-descent steps through adjacent pieces.  The refined variant bisects an
// objective window around the search so recovered points keep improving.

#pragma once

#include "lpcc/instance.hpp"
#include "lpcc/simplex.hpp"

namespace lpcc {

struct RecoveryParams {
  int depth = 5;    // descent steps allowed per walk, >= 1
  int breadth = 0;  // adjacent pieces walked from; <= 0 selects m
  // Window width below which refined_recovery stops bisecting; a negative
  // value selects 1e-6 * max(1, |lb_initial|).
  double search_gap_min = -1.0;
};

struct RecoveryResult {
  bool recovered = false;
  LpccPoint point;  // feasible point, set only when recovered
  Assignment z;     // its piece, set only when recovered
  int gap_evaluations = 0;  // feasibility-gap LPs solved
};

// z_i = 0 exactly when y*_i < w*_i; ties fix the w side.
Assignment round_assignment(const LpccInstance& inst,
                            const LpSolution& relax_sol);

// Optimal value of min (1-z)^T y + z^T w over the relaxation (plus the
// window when given): zero exactly when the piece selected by z is
// feasible there.  Returns +inf when the windowed LP is infeasible.  Window
// bounds must be finite.
double feasibility_gap(const LpccInstance& inst, const Assignment& z,
                       const ObjectiveWindow* window = nullptr,
                       LpSolution* sol_out = nullptr);

// Rounds the relaxation optimum to a piece; if its gap is nonzero, ranks
// all m adjacent pieces by gap (ties by flip index) and walks at most
// `depth` strict descent steps from each of the best `breadth`.  The first
// piece reaching gap zero is solved for the recovered point.
RecoveryResult local_search_recovery(const LpccInstance& inst,
                                     const LpSolution& relax_sol,
                                     const RecoveryParams& params = {});

// Deep gap descent for pieces too far from feasibility for the fixed-budget
// local search.  Walks single flips probed cheapest-recharge first (the gap
// optimum prices every recharge, so most steps cost a few LP re-solves), adds
// carrier+partner pair flips at single-flip minima and a bounded number of
// pinned uphill flips at pair-flip minima, and restarts from the dead end
// with all carriers recharged, then from the two uniform pieces.  Budgeted;
// only strict gap decreases are accepted, so every walk terminates.
RecoveryResult descent_recovery(const LpccInstance& inst,
                                const LpSolution& relax_sol);

// Bisection over the objective window [lb_initial, ub_initial]: each round
// solves the windowed relaxation and runs the local search with the window
// attached (recovered pieces themselves are solved unwindowed).  Success
// re-anchors the window top at the recovered value before halving; failure
// raises the bottom to the midpoint.  Stops once the window is narrower
// than search_gap_min; returns the best recovery seen, Failed when none.
RecoveryResult refined_recovery(const LpccInstance& inst, double ub_initial,
                                double lb_initial,
                                const RecoveryParams& params = {});

// Same bisection driven by one budgeted deep gap descent per window instead
// of the fixed-budget local search, so failing windows stay cheap on large
// instances.  search_gap_min < 0 selects 1e-6 * max(1, |lb_initial|).
RecoveryResult descent_refined_recovery(const LpccInstance& inst,
                                        double ub_initial, double lb_initial,
                                        double search_gap_min = -1.0);

}  // namespace lpcc

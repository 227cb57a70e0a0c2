// SPDX-License-Identifier: Apache-2.0
//
// Global search over the complementarity disjunctions.  Nodes fix a subset
// of pairs to one side (upper bound 0 on y_i or w_i over the cut-
// strengthened root LP) and are fathomed by bound, by infeasibility, or by
// reaching a complementary vertex.  Bounded nodes are picked best-bound
// first; nodes whose relaxation is unbounded live on a LIFO list that is
// always drained first and either produce a certified unbounded ray or
// decay into bounded nodes.

#pragma once

#include <optional>
#include <vector>

#include "lpcc/cuts.hpp"
#include "lpcc/instance.hpp"

namespace lpcc {

// Per-pair branching history.  sigma accumulates objective gain per unit of
// violation removed, phi the fraction of pairs the child left satisfied;
// eta counts the solved-and-feasible children attributed to each side.
struct BranchStats {
  std::vector<double> sigma_y, sigma_w;
  std::vector<double> phi_y, phi_w;
  std::vector<long> eta_y, eta_w;

  explicit BranchStats(int m = 0)
      : sigma_y(m, 0.0),
        sigma_w(m, 0.0),
        phi_y(m, 0.0),
        phi_w(m, 0.0),
        eta_y(m, 0),
        eta_w(m, 0) {}
};

// Weights of the four score terms (violation, scaled violation, pseudocost,
// satisfaction level) plus the depth cutoff for strong branching.
struct BranchWeights {
  double violation = 1.0;
  double scaled = 0.5;
  double pseudocost = 0.25;
  double satisfaction = 0.5;
  int strong_depth = 7;
  double epsilon = 1e-6;
};

struct SolverParams {
  double rel_gap = 1e-6;
  double comp_tol = 1e-6;
  double time_limit = 0.0;  // seconds; 0 disables
  long node_limit = 0;      // processed nodes; 0 disables
  BranchWeights weights;
  PreprocessParams preprocess;
  // When set, the pair index of every branching decision is appended, in
  // processing order.  Observability for tests and logs only.
  std::vector<int>* branch_trace = nullptr;
};

// Optimal / Infeasible / UnboundedBelow are certified outcomes; Limit means
// the time or node budget expired with the search still open.
enum class SolveStatus : unsigned char {
  Optimal,
  Infeasible,
  UnboundedBelow,
  Limit,
};

struct SolveReport {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<LpccPoint> incumbent;
  Assignment incumbent_z;  // piece of the incumbent, set when present
  std::optional<UnboundedCertificate> certificate;
  double lower_bound = -kInf;
  double upper_bound = kInf;
  double gap = kInf;  // relative_gap(upper_bound, lower_bound)
  long nodes = 0;     // nodes popped and LP-solved
  long lp_solves = 0;
  int cuts_simple = 0;
  int cuts_disjunctive = 0;
  int cuts_bound = 0;
  double preprocess_seconds = 0.0;
  double total_seconds = 0.0;
};

// Hybrid branching score for every violated pair of sol (min(y, w) >
// comp_tol), in the order those pairs appear; empty when none is violated.
// Each of the four component vectors is scaled by its 2-norm over the
// violated set before weighting; pairs lacking pseudocost or satisfaction
// history fall back to the mean of the initialized ones, or to 1 when the
// side has no history at all.
std::vector<std::pair<int, double>> branch_scores(const LpccInstance& inst,
                                                  const LpSolution& sol,
                                                  const BranchStats& stats,
                                                  const BranchWeights& weights,
                                                  double comp_tol = 1e-6);

// Forced fixings read off the node solution's tableau: when every
// displacement coefficient of the y_i row is <= 0 the variable cannot fall,
// so w_i must vanish (returned as (i, 1)); symmetrically (i, 0) fixes y_i.
// Only violated pairs with both sides basic are inspected.
std::vector<std::pair<int, int>> node_presolve(const LpccInstance& inst,
                                               const LpSolution& sol,
                                               double comp_tol = 1e-6);

SolveReport solve_lpcc(const LpccInstance& inst,
                       const SolverParams& params = {});

}  // namespace lpcc

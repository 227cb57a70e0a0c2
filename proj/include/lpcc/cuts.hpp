// SPDX-License-Identifier: Apache-2.0
//
// Root-node cutting planes.  Three families, all stored as >= rows over the
// full (x, y, w) space so they stay valid across re-solves:
//   - simple cuts read two tableau rows and charge every nonbasic
//     displacement the larger of its two ratios;
//   - disjunctive cuts solve a cut-generating LP over the pair of branch
//     polyhedra and return a multiplier-certified inequality;
//   - bound cuts combine per-side upper bounds u^w y + u^y w <= u^w u^y.
// The pool keeps at most one copy of a cut (coefficient hash) and drops any
// cut whose slack went basic after a re-solve.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpcc/instance.hpp"
#include "lpcc/recovery.hpp"
#include "lpcc/simplex.hpp"

namespace lpcc {

enum class CutKind : unsigned char { Simple, Disjunctive, Bound };

// coeff_x^T x + coeff_y^T y + coeff_w^T w >= rhs, valid for every
// complementary-feasible point of the instance.
struct Cut {
  CutKind kind = CutKind::Simple;
  int source = -1;  // complementarity pair it was derived from
  std::vector<double> coeff_x;  // n
  std::vector<double> coeff_y;  // m
  std::vector<double> coeff_w;  // m
  double rhs = 0.0;
};

double cut_activity(const Cut& cut, const std::vector<double>& x,
                    const std::vector<double>& y,
                    const std::vector<double>& w);
bool cut_satisfied(const Cut& cut, const LpccPoint& pt, double tol = 1e-7);

// Active cuts plus the row each one occupies in the working LP (-1 while
// detached).  Insertion refuses duplicates by hashing coefficients rounded
// to 12 significant digits.
class CutPool {
 public:
  bool add(Cut cut);
  int size() const { return static_cast<int>(cuts_.size()); }
  bool empty() const { return cuts_.empty(); }
  const Cut& cut(int idx) const { return cuts_[idx].cut; }
  int row(int idx) const { return cuts_[idx].row; }

  // Relaxation with every pooled cut appended; records the row ids.
  LpModel attach(const LpccInstance& inst);
  // Drops every cut whose slack variable is basic in sol (solved on the
  // last attached model).  Row ids are kept so the purge is idempotent.
  void purge_slack_basic(const LpSolution& sol);

 private:
  struct Entry {
    Cut cut;
    int row = -1;
  };
  std::vector<Entry> cuts_;
  std::vector<std::uint64_t> hashes_;
};

// Violated pairs (min(y*, w*) > comp_tol) ordered by product y*_i w*_i
// nonascending, ties by lower index, truncated to limit.
std::vector<int> select_disjunction_candidates(const LpccInstance& inst,
                                               const LpSolution& sol,
                                               int limit,
                                               double comp_tol = 1e-6);

// Tableau cut for pair i: with y_i = y* - sum a^y_j xi_j and
// w_i = w* - sum a^w_j xi_j over nonbasic displacements xi >= 0, either
// branch of the disjunction forces sum max(a^y_j/y*, a^w_j/w*) xi_j >= 1.
// Translated back to (x, y, w) through the rows of `work` (the model sol
// was solved on).  Empty when either variable is nonbasic.
std::optional<Cut> gen_simple_cut(const LpccInstance& inst,
                                  const LpModel& work, const LpSolution& sol,
                                  int i);

// Cut-generating LP over {work ^ y_i <= 0} and {work ^ w_i <= 0}: maximizes
// the violation at sol's point over multiplier vectors with 1-norm at most
// one.  Returns the cut when the violation exceeds 1e-6 and the multiplier
// certificate reproduces its coefficients on both sides; empty otherwise.
std::optional<Cut> gen_disjunctive_cut(const LpccInstance& inst,
                                       const LpModel& work,
                                       const LpSolution& sol, int i);

enum class BoundSide : unsigned char { Y, W };

// Largest value of y_i (side Y) or w_i (side W) over the relaxation
// intersected with the box bounds, the bound cuts of every fully bounded
// pair, and the objective cutoff box.ub_obj when finite.  +inf when that LP
// is unbounded.
double compute_bound(const LpccInstance& inst, BoundSide side, int i,
                     const BoundBox& box);

// u^w_i y_i + u^y_i w_i <= u^w_i u^y_i, stored in >= form.  Valid because
// one side of a complementary pair is always zero and the other is within
// its bound.
Cut gen_bound_cut(const LpccInstance& inst, int i, double u_y_i,
                  double u_w_i);

struct PreprocessParams {
  RecoveryParams recovery;
  bool use_recovery = true;
  bool use_cuts = true;
  int disj_rounds = -1;    // < 0 selects floor(m/100)
  int disj_per_round = 3;
  int simple_rounds = -1;  // < 0 selects floor(m/10)
  int bound_passes = 4;
  int bound_pairs = 5;
  double comp_tol = 1e-6;
};

struct PreprocessResult {
  std::optional<LpccPoint> incumbent;
  Assignment incumbent_z;  // piece of the incumbent, set when present
  CutPool pool;
  BoundBox box;
  // Objective of the final cut-strengthened root LP; +inf when the cuts
  // prove the instance has no complementary-feasible point, -inf when the
  // relaxation is unbounded.
  double root_lb = -kInf;
  LpModel root_model;   // relaxation plus the surviving cuts
  LpSolution root_sol;  // optimum of root_model (or the failed relaxation)
  int cuts_simple = 0;  // emitted counts, before purging
  int cuts_disjunctive = 0;
  int cuts_bound = 0;
  long lp_solves = 0;
  double recovery_seconds = 0.0;
  double cuts_seconds = 0.0;
  double total_seconds = 0.0;
};

// Root preprocessing: feasibility recovery (local then window-refined),
// floor(m/100) rounds of at most disj_per_round disjunctive cuts,
// floor(m/10) rounds of simple cuts for every violated pair, then
// bound_passes refinement passes over at most bound_pairs pairs.  Each
// round re-solves the working LP and purges slack-basic cuts.  Skips
// everything except the relaxation solve when that is not Optimal.
PreprocessResult run_preprocessor(const LpccInstance& inst,
                                  const PreprocessParams& params = {});

}  // namespace lpcc

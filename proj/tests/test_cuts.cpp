// SPDX-License-Identifier: Apache-2.0

#include "lpcc/cuts.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "lpcc/generators.hpp"
#include "lpcc/oracle.hpp"

namespace {

using namespace lpcc;

// min -y  s.t.  y <= 2,  w = 1 + y.  Relaxation optimum (y, w) = (2, 3);
// the only complementary point is (0, 1) with objective 0.
LpccInstance crossing() {
  LpccInstance inst;
  inst.n = 0;
  inst.m = 1;
  inst.k = 1;
  inst.d = {-1.0};
  inst.b = {-2.0};
  inst.q = {1.0};
  inst.A = SparseMatrix(1, 0);
  inst.B = SparseMatrix(1, 1);
  inst.B.add(0, 0, -1.0);
  inst.N = SparseMatrix(1, 0);
  inst.M = SparseMatrix(1, 1);
  inst.M.add(0, 0, 1.0);
  return inst;
}

// crossing() with a padding variable x in the row:  min -y  s.t.
// x + y <= 2,  w = 1 + y.  Optimum (x, y, w) = (0, 2, 3) leaves x nonbasic
// at its lower bound.
LpccInstance crossing_x() {
  LpccInstance inst;
  inst.n = 1;
  inst.m = 1;
  inst.k = 1;
  inst.c = {0.0};
  inst.d = {-1.0};
  inst.b = {-2.0};
  inst.q = {1.0};
  inst.A = SparseMatrix(1, 1);
  inst.A.add(0, 0, -1.0);
  inst.B = SparseMatrix(1, 1);
  inst.B.add(0, 0, -1.0);
  inst.N = SparseMatrix(1, 1);
  inst.M = SparseMatrix(1, 1);
  inst.M.add(0, 0, 1.0);
  return inst;
}

// min x + 1.5 y  s.t.  x + 2y >= 1,  x - 2y >= -1,  w = 0.98 - y.  Both
// pieces are feasible: fixing y = 0 gives objective 1, fixing w = 0 gives
// 2.43, and the relaxation optimum (0, 0.5, 0.48) satisfies neither.
LpccInstance ladder() {
  LpccInstance inst;
  inst.n = 1;
  inst.m = 1;
  inst.k = 2;
  inst.c = {1.0};
  inst.d = {1.5};
  inst.b = {1.0, -1.0};
  inst.q = {0.98};
  inst.A = SparseMatrix(2, 1);
  inst.A.add(0, 0, 1.0);
  inst.A.add(1, 0, 1.0);
  inst.B = SparseMatrix(2, 1);
  inst.B.add(0, 0, 2.0);
  inst.B.add(1, 0, -2.0);
  inst.N = SparseMatrix(1, 1);
  inst.M = SparseMatrix(1, 1);
  inst.M.add(0, 0, -1.0);
  return inst;
}

// min y  s.t.  w = 1 - y:  y ranges over [0, 1].
LpccInstance one_pair() {
  LpccInstance inst;
  inst.n = 0;
  inst.m = 1;
  inst.k = 0;
  inst.d = {1.0};
  inst.q = {1.0};
  inst.A = SparseMatrix(0, 0);
  inst.B = SparseMatrix(0, 1);
  inst.N = SparseMatrix(1, 0);
  inst.M = SparseMatrix(1, 1);
  inst.M.add(0, 0, -1.0);
  return inst;
}

Cut make_cut(CutKind kind, std::vector<double> cx, std::vector<double> cy,
             std::vector<double> cw, double rhs) {
  Cut cut;
  cut.kind = kind;
  cut.source = 0;
  cut.coeff_x = std::move(cx);
  cut.coeff_y = std::move(cy);
  cut.coeff_w = std::move(cw);
  cut.rhs = rhs;
  return cut;
}

// Smallest cut activity over one branch of the disjunction; +inf when the
// branch is empty, -inf when the activity is unbounded below on it.
double branch_min(const LpccInstance& inst, const LpModel& work,
                  const Cut& cut, int i, BoundSide side) {
  LpModel lp = work;
  lp.upper[side == BoundSide::Y ? inst.y_var(i) : inst.w_var(i)] = 0.0;
  std::fill(lp.objective.begin(), lp.objective.end(), 0.0);
  for (int j = 0; j < inst.n; ++j) lp.objective[inst.x_var(j)] = cut.coeff_x[j];
  for (int t = 0; t < inst.m; ++t) {
    lp.objective[inst.y_var(t)] = cut.coeff_y[t];
    lp.objective[inst.w_var(t)] = cut.coeff_w[t];
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::Infeasible) return kInf;
  if (sol.status == LpStatus::UnboundedBelow) return -kInf;
  return sol.objective;
}

// Exact global validity: the cut must hold on every feasible piece, i.e.
// the minimum activity over each piece polyhedron stays above rhs.
bool valid_on_all_pieces(const LpccInstance& inst, const Cut& cut,
                         double tol = 1e-6) {
  const int pieces = 1 << inst.m;
  for (int mask = 0; mask < pieces; ++mask) {
    Assignment z(inst.m);
    for (int i = 0; i < inst.m; ++i) z[i] = (mask >> i) & 1;
    LpModel lp = build_piece_lp(inst, z);
    std::fill(lp.objective.begin(), lp.objective.end(), 0.0);
    for (int j = 0; j < inst.n; ++j) {
      lp.objective[inst.x_var(j)] = cut.coeff_x[j];
    }
    for (int i = 0; i < inst.m; ++i) {
      lp.objective[inst.y_var(i)] = cut.coeff_y[i];
      lp.objective[inst.w_var(i)] = cut.coeff_w[i];
    }
    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible) continue;
    if (sol.status == LpStatus::UnboundedBelow) return false;
    if (sol.objective < cut.rhs - tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cut activity and satisfaction") {
  const Cut cut = make_cut(CutKind::Simple, {2.0}, {-1.0}, {0.5}, 1.0);
  CHECK(cut_activity(cut, {1.0}, {2.0}, {4.0}) == doctest::Approx(2.0));
  LpccPoint pt;
  pt.x = {1.0};
  pt.y = {2.0};
  pt.w = {4.0};
  CHECK(cut_satisfied(cut, pt));
  pt.x = {0.0};  // activity -2 + 2 = 0 < 1
  CHECK_FALSE(cut_satisfied(cut, pt));
  pt.x = {0.5};  // activity exactly 1
  CHECK(cut_satisfied(cut, pt));
}

TEST_CASE("disjunction candidates ranked by violation product") {
  LpccInstance inst;
  inst.n = 1;
  inst.m = 4;
  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(1 + 2 * 4, 0.0);
  const auto set_pair = [&](int i, double y, double w) {
    sol.x[inst.y_var(i)] = y;
    sol.x[inst.w_var(i)] = w;
  };
  set_pair(0, 0.0, 5.0);  // satisfied
  set_pair(1, 2.0, 3.0);  // product 6
  set_pair(2, 1.0, 2.0);  // product 2
  set_pair(3, 3.0, 2.0);  // product 6, loses the tie to pair 1

  CHECK(select_disjunction_candidates(inst, sol, 3) ==
        std::vector<int>{1, 3, 2});
  CHECK(select_disjunction_candidates(inst, sol, 2) ==
        std::vector<int>{1, 3});
  CHECK(select_disjunction_candidates(inst, sol, 10) ==
        std::vector<int>{1, 3, 2});
  CHECK(select_disjunction_candidates(inst, sol, 3, 10.0).empty());

  set_pair(1, 0.0, 0.0);
  set_pair(2, 0.0, 0.0);
  set_pair(3, 0.0, 0.0);
  CHECK(select_disjunction_candidates(inst, sol, 3).empty());
}

TEST_CASE("pool rejects coefficient duplicates") {
  CutPool pool;
  CHECK(pool.add(make_cut(CutKind::Simple, {}, {1.0}, {2.0}, 3.0)));
  CHECK_FALSE(pool.add(make_cut(CutKind::Simple, {}, {1.0}, {2.0}, 3.0)));
  // The hash covers coefficients only; a relabeled copy is still a dup.
  CHECK_FALSE(pool.add(make_cut(CutKind::Bound, {}, {1.0}, {2.0}, 3.0)));
  CHECK(pool.add(make_cut(CutKind::Simple, {}, {1.0}, {2.0}, 3.5)));
  // Twelve significant digits: a 1e-13 relative nudge collides, 1e-9 stays.
  CHECK_FALSE(pool.add(
      make_cut(CutKind::Simple, {}, {1.0 + 1e-13}, {2.0}, 3.5)));
  CHECK(pool.add(make_cut(CutKind::Simple, {}, {1.0 + 1e-9}, {2.0}, 3.5)));
  CHECK(pool.size() == 3);
}

TEST_CASE("attach appends pooled rows to the relaxation") {
  const LpccInstance inst = crossing();
  CutPool pool;
  REQUIRE(pool.add(make_cut(CutKind::Bound, {}, {-0.5}, {0.0}, 0.0)));
  const LpModel model = pool.attach(inst);
  CHECK(model.num_rows() == inst.k + inst.m + 1);
  CHECK(pool.row(0) == inst.k + inst.m);
  CHECK(model.senses.back() == RowSense::Ge);
  CHECK(model.rhs.back() == doctest::Approx(0.0));
  // The appended row pins y to zero, so the re-solved optimum moves there.
  const LpSolution sol = solve_lp(model);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.x[inst.y_var(0)] == doctest::Approx(0.0));
  CHECK(sol.x[inst.w_var(0)] == doctest::Approx(1.0));
}

TEST_CASE("purge drops exactly the slack-basic cuts") {
  const LpccInstance inst = crossing();
  CutPool pool;
  // First bound cut 3y + 2w <= 6 is dominated once 1.8y + 0.8w <= 1.44
  // arrives: at the new optimum its slack is strictly interior, hence basic.
  REQUIRE(pool.add(gen_bound_cut(inst, 0, 2.0, 3.0)));
  REQUIRE(pool.add(gen_bound_cut(inst, 0, 0.8, 1.8)));
  const LpModel model = pool.attach(inst);
  const LpSolution sol = solve_lp(model);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.x[inst.y_var(0)] == doctest::Approx(16.0 / 65.0));
  REQUIRE(pool.size() == 2);
  pool.purge_slack_basic(sol);
  REQUIRE(pool.size() == 1);
  CHECK(pool.cut(0).rhs == doctest::Approx(-1.44));
  // Row ids survive the purge, so purging again is a no-op.
  pool.purge_slack_basic(sol);
  CHECK(pool.size() == 1);
}

TEST_CASE("simple cut from the crossing tableau") {
  const LpccInstance inst = crossing();
  const LpModel work = build_relaxation(inst);
  const LpSolution sol = solve_lp(work);
  REQUIRE(sol.status == LpStatus::Optimal);
  REQUIRE(sol.x[inst.y_var(0)] == doctest::Approx(2.0));
  REQUIRE(sol.x[inst.w_var(0)] == doctest::Approx(3.0));

  const auto cut = gen_simple_cut(inst, work, sol, 0);
  REQUIRE(cut.has_value());
  CHECK(cut->kind == CutKind::Simple);
  CHECK(cut->source == 0);
  // gamma = max(1/2, 1/3) on the single row displacement translates to
  // -y/2 >= 0, i.e. the exact facet y <= 0.
  CHECK(cut->coeff_y[0] == doctest::Approx(-0.5));
  CHECK(cut->coeff_w[0] == doctest::Approx(0.0));
  CHECK(cut->rhs == doctest::Approx(0.0));
  // Spawning point violates it by exactly the unit distance in xi space.
  CHECK(cut->rhs - cut_activity(*cut, {}, {2.0}, {3.0}) ==
        doctest::Approx(1.0));
  CHECK(valid_on_all_pieces(inst, *cut));
}

TEST_CASE("simple cut charges structurals at their bound") {
  const LpccInstance inst = crossing_x();
  const LpModel work = build_relaxation(inst);
  const LpSolution sol = solve_lp(work);
  REQUIRE(sol.status == LpStatus::Optimal);
  REQUIRE(sol.x[inst.x_var(0)] == doctest::Approx(0.0));
  REQUIRE(sol.basis.status[inst.x_var(0)] == VarStatus::AtLower);

  const auto cut = gen_simple_cut(inst, work, sol, 0);
  REQUIRE(cut.has_value());
  // The x charge from the bound column cancels the x term of the row
  // translation, leaving the same facet y <= 0.
  CHECK(cut->coeff_x[0] == doctest::Approx(0.0));
  CHECK(cut->coeff_y[0] == doctest::Approx(-0.5));
  CHECK(cut->coeff_w[0] == doctest::Approx(0.0));
  CHECK(cut->rhs == doctest::Approx(0.0));
  CHECK(valid_on_all_pieces(inst, *cut));
}

TEST_CASE("simple cut declines nonbasic pairs") {
  const LpccInstance inst = crossing();
  CutPool pool;
  REQUIRE(pool.add(make_cut(CutKind::Bound, {}, {-0.5}, {0.0}, 0.0)));
  const LpModel model = pool.attach(inst);
  const LpSolution sol = solve_lp(model);
  REQUIRE(sol.status == LpStatus::Optimal);
  // y is pinned to zero here; whichever side left the basis, the pair no
  // longer yields two usable tableau rows at a positive point.
  const auto cut = gen_simple_cut(inst, model, sol, 0);
  CHECK_FALSE(cut.has_value());
}

TEST_CASE("disjunctive cut separates the one-sided crossing") {
  const LpccInstance inst = crossing();
  const LpModel work = build_relaxation(inst);
  const LpSolution sol = solve_lp(work);
  REQUIRE(sol.status == LpStatus::Optimal);

  const auto cut = gen_disjunctive_cut(inst, work, sol, 0);
  REQUIRE(cut.has_value());
  CHECK(cut->kind == CutKind::Disjunctive);
  CHECK(cut->source == 0);
  const double act = cut_activity(*cut, {}, {2.0}, {3.0});
  CHECK(cut->rhs - act > 1e-6);
  CHECK(branch_min(inst, work, *cut, 0, BoundSide::Y) >= cut->rhs - 1e-6);
  CHECK(branch_min(inst, work, *cut, 0, BoundSide::W) >= cut->rhs - 1e-6);
  // The lone complementary point survives.
  LpccPoint opt;
  opt.x = {};
  opt.y = {0.0};
  opt.w = {1.0};
  CHECK(cut_satisfied(*cut, opt));
  CHECK(valid_on_all_pieces(inst, *cut));
}

TEST_CASE("disjunctive cut with both branches feasible") {
  const LpccInstance inst = ladder();
  const LpModel work = build_relaxation(inst);
  const LpSolution sol = solve_lp(work);
  REQUIRE(sol.status == LpStatus::Optimal);
  REQUIRE(sol.objective == doctest::Approx(0.75));

  const auto cut = gen_disjunctive_cut(inst, work, sol, 0);
  REQUIRE(cut.has_value());
  CHECK(branch_min(inst, work, *cut, 0, BoundSide::Y) >= cut->rhs - 1e-6);
  CHECK(branch_min(inst, work, *cut, 0, BoundSide::W) >= cut->rhs - 1e-6);
  CHECK(valid_on_all_pieces(inst, *cut));

  // Appending it must push the root value strictly above the old optimum,
  // which was unique and is now cut off.
  CutPool pool;
  REQUIRE(pool.add(*cut));
  const LpSolution strengthened = solve_lp(pool.attach(inst));
  REQUIRE(strengthened.status == LpStatus::Optimal);
  CHECK(strengthened.objective > 0.75);
  CHECK(strengthened.objective <= 1.0 + 1e-9);
}

TEST_CASE("disjunctive cut declines satisfied pairs") {
  const LpccInstance inst = one_pair();
  LpModel work = build_relaxation(inst);
  const LpSolution sol = solve_lp(work);
  REQUIRE(sol.status == LpStatus::Optimal);
  // min y drives y to 0: the pair is already complementary, so no
  // inequality can be violated at the point.
  CHECK(sol.x[inst.y_var(0)] == doctest::Approx(0.0));
  CHECK_FALSE(gen_disjunctive_cut(inst, work, sol, 0).has_value());
}

TEST_CASE("bound cut shape") {
  const LpccInstance inst = crossing();
  const Cut unit = gen_bound_cut(inst, 0, 1.0, 1.0);
  CHECK(unit.kind == CutKind::Bound);
  CHECK(unit.coeff_y[0] == doctest::Approx(-1.0));
  CHECK(unit.coeff_w[0] == doctest::Approx(-1.0));
  CHECK(unit.rhs == doctest::Approx(-1.0));

  // u_y = 2, u_w = 3: stored form of 3y + 2w <= 6, tight at both
  // complementary corners (2, 0) and (0, 3).
  const Cut cut = gen_bound_cut(inst, 0, 2.0, 3.0);
  CHECK(cut.coeff_y[0] == doctest::Approx(-3.0));
  CHECK(cut.coeff_w[0] == doctest::Approx(-2.0));
  CHECK(cut.rhs == doctest::Approx(-6.0));
  LpccPoint pt;
  pt.x = {};
  pt.y = {2.0};
  pt.w = {0.0};
  CHECK(cut_activity(cut, pt.x, pt.y, pt.w) == doctest::Approx(cut.rhs));
  CHECK(cut_satisfied(cut, pt));
  pt.y = {0.0};
  pt.w = {3.0};
  CHECK(cut_satisfied(cut, pt));
  pt.y = {2.0};
  pt.w = {3.0};
  CHECK_FALSE(cut_satisfied(cut, pt));
}

TEST_CASE("per-side bounds from the relaxation") {
  SUBCASE("explicit row bound") {
    const LpccInstance inst = crossing();
    const BoundBox box = BoundBox::unknown(1);
    CHECK(compute_bound(inst, BoundSide::Y, 0, box) == doctest::Approx(2.0));
    CHECK(compute_bound(inst, BoundSide::W, 0, box) == doctest::Approx(3.0));
  }
  SUBCASE("segment pair") {
    const LpccInstance inst = one_pair();
    BoundBox box = BoundBox::unknown(1);
    CHECK(compute_bound(inst, BoundSide::Y, 0, box) == doctest::Approx(1.0));
    CHECK(compute_bound(inst, BoundSide::W, 0, box) == doctest::Approx(1.0));
    // An incumbent cutoff of 0.4 on min y clips the reachable segment.
    box.ub_obj = 0.4;
    CHECK(compute_bound(inst, BoundSide::Y, 0, box) == doctest::Approx(0.4));
    CHECK(compute_bound(inst, BoundSide::W, 0, box) == doctest::Approx(1.0));
  }
  SUBCASE("bound rows of the box feed back") {
    const LpccInstance inst = crossing();
    BoundBox box = BoundBox::unknown(1);
    box.u_y[0] = 2.0;
    box.u_w[0] = 3.0;
    // 3y + 2w <= 6 with w = 1 + y caps y at 0.8, then w at 1.8.
    CHECK(compute_bound(inst, BoundSide::Y, 0, box) == doctest::Approx(0.8));
    CHECK(compute_bound(inst, BoundSide::W, 0, box) == doctest::Approx(1.8));
  }
  SUBCASE("unbounded side") {
    LpccInstance inst = one_pair();
    inst.q = {0.0};
    inst.M = SparseMatrix(1, 1);
    inst.M.add(0, 0, 1.0);  // w = y, a full ray
    const BoundBox box = BoundBox::unknown(1);
    CHECK(std::isinf(compute_bound(inst, BoundSide::Y, 0, box)));
  }
}

TEST_CASE("preprocessor closes the crossing gap with one simple round") {
  const LpccInstance inst = crossing();
  PreprocessParams params;
  params.disj_rounds = 0;
  params.simple_rounds = 1;
  params.bound_passes = 0;
  const PreprocessResult res = run_preprocessor(inst, params);

  REQUIRE(res.incumbent.has_value());
  CHECK(res.incumbent->objective == doctest::Approx(0.0));
  CHECK(res.incumbent_z == Assignment{0});
  CHECK(check_feasible(inst, *res.incumbent));
  CHECK(res.cuts_simple == 1);
  CHECK(res.cuts_disjunctive == 0);
  CHECK(res.cuts_bound == 0);
  CHECK(res.root_lb == doctest::Approx(0.0));
  CHECK(res.root_sol.status == LpStatus::Optimal);
  CHECK(res.lp_solves >= 3);

  const Outcome oracle = enumerate_pieces(inst);
  REQUIRE(oracle.kind == OutcomeKind::Optimal);
  CHECK(res.root_lb <= oracle.point->objective + 1e-9);
}

TEST_CASE("preprocessor bound passes tighten the crossing box") {
  const LpccInstance inst = crossing();
  PreprocessParams params;
  params.disj_rounds = 0;
  params.simple_rounds = 0;
  params.bound_passes = 2;
  const PreprocessResult res = run_preprocessor(inst, params);

  CHECK(res.box.u_y[0] == doctest::Approx(0.8));
  CHECK(res.box.u_w[0] == doctest::Approx(1.8));
  CHECK(res.cuts_bound == 2);
  // Second pass re-solves against 1.8y + 0.8w <= 1.44, landing on y = 16/65;
  // the first bound cut goes slack there and is purged.
  CHECK(res.root_lb == doctest::Approx(-16.0 / 65.0));
  CHECK(res.pool.size() == 1);
  CHECK(res.root_lb > -2.0 + 1e-9);
  for (int idx = 0; idx < res.pool.size(); ++idx) {
    CHECK(valid_on_all_pieces(inst, res.pool.cut(idx)));
  }
}

TEST_CASE("preprocessor switches honor their flags") {
  const LpccInstance inst = crossing();
  SUBCASE("cuts off") {
    PreprocessParams params;
    params.use_cuts = false;
    const PreprocessResult res = run_preprocessor(inst, params);
    CHECK(res.root_lb == doctest::Approx(-2.0));
    CHECK(res.pool.empty());
    CHECK(res.root_model.num_rows() == inst.k + inst.m);
    REQUIRE(res.incumbent.has_value());
    CHECK(res.box.ub_obj == doctest::Approx(0.0));
  }
  SUBCASE("recovery off") {
    PreprocessParams params;
    params.use_recovery = false;
    params.simple_rounds = 1;
    const PreprocessResult res = run_preprocessor(inst, params);
    CHECK_FALSE(res.incumbent.has_value());
    CHECK(std::isinf(res.box.ub_obj));
    CHECK(res.root_lb == doctest::Approx(0.0));
  }
}

TEST_CASE("preprocessor reports an infeasible relaxation") {
  LpccInstance inst;
  inst.n = 0;
  inst.m = 1;
  inst.k = 1;
  inst.d = {1.0};
  inst.b = {1.0};
  inst.q = {-1.0};  // w = -1 - y < 0 for every y >= 0
  inst.A = SparseMatrix(1, 0);
  inst.B = SparseMatrix(1, 1);
  inst.B.add(0, 0, 1.0);
  inst.N = SparseMatrix(1, 0);
  inst.M = SparseMatrix(1, 1);
  inst.M.add(0, 0, -1.0);

  const PreprocessResult res = run_preprocessor(inst);
  CHECK(res.root_sol.status == LpStatus::Infeasible);
  CHECK(std::isinf(res.root_lb));
  CHECK(res.root_lb > 0.0);
  CHECK_FALSE(res.incumbent.has_value());
  CHECK(res.lp_solves == 1);
}

TEST_CASE("preprocessor reports an unbounded relaxation") {
  LpccInstance inst = one_pair();
  inst.d = {-1.0};
  inst.q = {0.0};
  inst.M = SparseMatrix(1, 1);
  inst.M.add(0, 0, 1.0);  // w = y, min -y has a ray

  const PreprocessResult res = run_preprocessor(inst);
  CHECK(res.root_sol.status == LpStatus::UnboundedBelow);
  CHECK(std::isinf(res.root_lb));
  CHECK(res.root_lb < 0.0);
  CHECK_FALSE(res.incumbent.has_value());
  CHECK(res.pool.empty());
}

TEST_CASE("cuts certify an instance with no complementary point") {
  // y is forced into [0.5, 2] while w = 1 + y stays positive, so neither
  // side of the pair can reach zero; the relaxation is still feasible.
  LpccInstance inst = crossing();
  inst.k = 2;
  inst.b = {-2.0, 0.5};
  inst.A = SparseMatrix(2, 0);
  inst.B = SparseMatrix(2, 1);
  inst.B.add(0, 0, -1.0);
  inst.B.add(1, 0, 1.0);

  REQUIRE(enumerate_pieces(inst).kind == OutcomeKind::Infeasible);

  PreprocessParams params;
  params.disj_rounds = 0;
  params.simple_rounds = 1;
  params.bound_passes = 0;
  const PreprocessResult res = run_preprocessor(inst, params);
  CHECK_FALSE(res.incumbent.has_value());
  CHECK(std::isinf(res.root_lb));
  CHECK(res.root_lb > 0.0);
  CHECK(res.root_sol.status == LpStatus::Infeasible);
  CHECK(res.cuts_simple == 1);
}

TEST_CASE("preprocessor output is sound on random instances") {
  int optimal = 0;
  int improved = 0;
  int incumbents = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    RandomLpccConfig cfg;
    cfg.n = 2;
    cfg.m = 4;
    cfg.k = 3;
    cfg.rank_m = 2;
    cfg.dense = 80.0;
    cfg.seed = seed;
    const LpccInstance inst = gen_random_lpcc(cfg).instance;

    const LpSolution relax = solve_lp(build_relaxation(inst));
    if (relax.status != LpStatus::Optimal) continue;
    ++optimal;

    PreprocessParams params;
    params.disj_rounds = 1;
    params.disj_per_round = 2;
    params.simple_rounds = 2;
    params.bound_passes = 1;
    params.bound_pairs = 3;
    const PreprocessResult res = run_preprocessor(inst, params);

    const Outcome oracle = enumerate_pieces(inst);
    CHECK(res.root_lb >= relax.objective - 1e-9);
    if (res.root_lb > relax.objective + 1e-9) ++improved;
    if (oracle.kind == OutcomeKind::Optimal) {
      CHECK(res.root_lb <= oracle.point->objective + 1e-6);
      if (res.incumbent) {
        ++incumbents;
        CHECK(check_feasible(inst, *res.incumbent));
        CHECK(res.incumbent->objective >=
              oracle.point->objective - 1e-6);
      }
    }
    for (int idx = 0; idx < res.pool.size(); ++idx) {
      CHECK(valid_on_all_pieces(inst, res.pool.cut(idx)));
    }
    CHECK(res.cuts_simple + res.cuts_disjunctive + res.cuts_bound >=
          res.pool.size());
  }
  // Frozen counts for this seed range; drift means behavior changed.
  CHECK(optimal >= 8);
  CHECK(incumbents >= optimal / 2);
  CHECK(improved >= 1);
  MESSAGE("optimal=", optimal, " improved=", improved,
          " incumbents=", incumbents);
}

// SPDX-License-Identifier: Apache-2.0

#include "lpcc/cuts.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>
#include <vector>

namespace lpcc {

namespace {

constexpr double kViolationTol = 1e-6;
constexpr double kDropTol = 1e-11;

std::uint64_t cut_hash(const Cut& cut) {
  std::uint64_t h = 1469598103934665603ull;
  char buf[64];
  const auto mix = [&](int tag, int idx, double v) {
    const int len = std::snprintf(buf, sizeof buf, "%d:%d:%.12g;", tag, idx, v);
    for (int t = 0; t < len; ++t) {
      h ^= static_cast<unsigned char>(buf[t]);
      h *= 1099511628211ull;
    }
  };
  for (int j = 0; j < static_cast<int>(cut.coeff_x.size()); ++j) {
    if (cut.coeff_x[j] != 0.0) mix(0, j, cut.coeff_x[j]);
  }
  for (int i = 0; i < static_cast<int>(cut.coeff_y.size()); ++i) {
    if (cut.coeff_y[i] != 0.0) mix(1, i, cut.coeff_y[i]);
  }
  for (int i = 0; i < static_cast<int>(cut.coeff_w.size()); ++i) {
    if (cut.coeff_w[i] != 0.0) mix(2, i, cut.coeff_w[i]);
  }
  mix(3, 0, cut.rhs);
  return h;
}

// rhs - activity at the LP point; positive means the point violates the cut.
double cut_violation(const LpccInstance& inst, const Cut& cut,
                     const LpSolution& sol) {
  double act = 0.0;
  for (int j = 0; j < inst.n; ++j) act += cut.coeff_x[j] * sol.x[inst.x_var(j)];
  for (int i = 0; i < inst.m; ++i) {
    act += cut.coeff_y[i] * sol.x[inst.y_var(i)];
    act += cut.coeff_w[i] * sol.x[inst.w_var(i)];
  }
  return cut.rhs - act;
}

void drop_small(std::vector<double>& v) {
  for (double& c : v) {
    if (std::abs(c) <= kDropTol) c = 0.0;
  }
}

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double c) { return std::isfinite(c); });
}

using RowList = std::vector<std::pair<int, double>>;

std::vector<RowList> row_lists(const LpModel& model) {
  std::vector<RowList> rows(static_cast<std::size_t>(model.num_rows()));
  for (const Triplet& t : model.constraints.triplets()) {
    rows[static_cast<std::size_t>(t.row)].emplace_back(t.col, t.value);
  }
  return rows;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

}  // namespace

double cut_activity(const Cut& cut, const std::vector<double>& x,
                    const std::vector<double>& y,
                    const std::vector<double>& w) {
  double act = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) act += cut.coeff_x[j] * x[j];
  for (std::size_t i = 0; i < y.size(); ++i) {
    act += cut.coeff_y[i] * y[i] + cut.coeff_w[i] * w[i];
  }
  return act;
}

bool cut_satisfied(const Cut& cut, const LpccPoint& pt, double tol) {
  return cut_activity(cut, pt.x, pt.y, pt.w) >= cut.rhs - tol;
}

bool CutPool::add(Cut cut) {
  const std::uint64_t h = cut_hash(cut);
  if (std::find(hashes_.begin(), hashes_.end(), h) != hashes_.end()) {
    return false;
  }
  hashes_.push_back(h);
  cuts_.push_back(Entry{std::move(cut), -1});
  return true;
}

LpModel CutPool::attach(const LpccInstance& inst) {
  LpModel model = build_relaxation(inst);
  for (Entry& e : cuts_) {
    const int row = model.add_row(RowSense::Ge, e.cut.rhs);
    for (int j = 0; j < inst.n; ++j) {
      if (e.cut.coeff_x[j] != 0.0) {
        model.constraints.add(row, inst.x_var(j), e.cut.coeff_x[j]);
      }
    }
    for (int i = 0; i < inst.m; ++i) {
      if (e.cut.coeff_y[i] != 0.0) {
        model.constraints.add(row, inst.y_var(i), e.cut.coeff_y[i]);
      }
      if (e.cut.coeff_w[i] != 0.0) {
        model.constraints.add(row, inst.w_var(i), e.cut.coeff_w[i]);
      }
    }
    e.row = row;
  }
  return model;
}

void CutPool::purge_slack_basic(const LpSolution& sol) {
  std::vector<Entry> kept;
  std::vector<std::uint64_t> kept_hashes;
  for (std::size_t idx = 0; idx < cuts_.size(); ++idx) {
    const int row = cuts_[idx].row;
    const bool basic =
        row >= 0 && sol.is_basic(sol.num_structural() + row);
    if (!basic) {
      kept.push_back(std::move(cuts_[idx]));
      kept_hashes.push_back(hashes_[idx]);
    }
  }
  cuts_ = std::move(kept);
  hashes_ = std::move(kept_hashes);
}

std::vector<int> select_disjunction_candidates(const LpccInstance& inst,
                                               const LpSolution& sol,
                                               int limit, double comp_tol) {
  std::vector<std::pair<double, int>> ranked;
  for (int i = 0; i < inst.m; ++i) {
    const double yi = sol.x[inst.y_var(i)];
    const double wi = sol.x[inst.w_var(i)];
    if (std::min(yi, wi) > comp_tol) ranked.emplace_back(-yi * wi, i);
  }
  std::sort(ranked.begin(), ranked.end());
  if (static_cast<int>(ranked.size()) > limit) ranked.resize(limit);
  std::vector<int> out;
  out.reserve(ranked.size());
  for (const auto& [neg, i] : ranked) out.push_back(i);
  return out;
}

std::optional<Cut> gen_simple_cut(const LpccInstance& inst,
                                  const LpModel& work, const LpSolution& sol,
                                  int i) {
  const int yv = inst.y_var(i);
  const int wv = inst.w_var(i);
  const int nvars = work.num_vars();
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  if (sol.basis.status[yv] != VarStatus::Basic ||
      sol.basis.status[wv] != VarStatus::Basic) {
    return std::nullopt;
  }
  const TableauRow ry = tableau_row(sol, yv);
  const TableauRow rw = tableau_row(sol, wv);
  if (!(ry.constant > 1e-9) || !(rw.constant > 1e-9)) return std::nullopt;

  // Larger of the two ratios per nonbasic displacement; either branch of the
  // disjunction forces the charged sum to reach 1.
  std::map<int, std::pair<double, double>> support;
  for (const auto& [id, a] : ry.coeffs) support[id].first = a;
  for (const auto& [id, a] : rw.coeffs) support[id].second = a;

  Cut cut;
  cut.kind = CutKind::Simple;
  cut.source = i;
  cut.coeff_x.assign(inst.n, 0.0);
  cut.coeff_y.assign(inst.m, 0.0);
  cut.coeff_w.assign(inst.m, 0.0);
  double rhs = 1.0;
  const auto add_var = [&](int var, double v) {
    if (var < inst.n) {
      cut.coeff_x[var] += v;
    } else if (var < inst.n + inst.m) {
      cut.coeff_y[var - inst.n] += v;
    } else {
      cut.coeff_w[var - inst.n - inst.m] += v;
    }
  };

  std::vector<RowList> rows;  // built lazily, only when a logical appears
  for (const auto& [id, ab] : support) {
    const double gamma =
        std::max(ab.first / ry.constant, ab.second / rw.constant);
    if (std::abs(gamma) <= kDropTol) continue;
    if (!std::isfinite(gamma)) return std::nullopt;
    if (id < nvars) {
      const VarStatus st = sol.basis.status[id];
      if (st == VarStatus::AtLower) {
        add_var(id, gamma);
        rhs += gamma * work.lower[id];
      } else if (st == VarStatus::AtUpper) {
        add_var(id, -gamma);
        rhs -= gamma * work.upper[id];
      } else {
        return std::nullopt;  // free displacement has no sign
      }
    } else {
      const int r = id - nvars;
      if (work.senses[r] == RowSense::Eq) return std::nullopt;  // fixed slack
      // The displacement of a >= logical is the row surplus A_r v - b_r; of
      // a <= logical the slack b_r - A_r v.
      const double sgn = work.senses[r] == RowSense::Ge ? 1.0 : -1.0;
      if (rows.empty()) rows = row_lists(work);
      for (const auto& [col, a] : rows[r]) add_var(col, sgn * gamma * a);
      rhs += sgn * gamma * work.rhs[r];
    }
  }
  cut.rhs = rhs;
  drop_small(cut.coeff_x);
  drop_small(cut.coeff_y);
  drop_small(cut.coeff_w);
  if (!all_finite(cut.coeff_x) || !all_finite(cut.coeff_y) ||
      !all_finite(cut.coeff_w) || !std::isfinite(cut.rhs)) {
    return std::nullopt;
  }
  return cut;
}

std::optional<Cut> gen_disjunctive_cut(const LpccInstance& inst,
                                       const LpModel& work,
                                       const LpSolution& sol, int i) {
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  const int p = work.num_vars();

  // The working polyhedron in pure >= form over the structurals: model rows
  // (equalities split), finite bounds, then one slot for the branch row.
  std::vector<RowList> ge_rows;
  std::vector<double> ge_rhs;
  const std::vector<RowList> rows = row_lists(work);
  for (int r = 0; r < work.num_rows(); ++r) {
    if (work.senses[r] != RowSense::Le) {
      ge_rows.push_back(rows[r]);
      ge_rhs.push_back(work.rhs[r]);
    }
    if (work.senses[r] != RowSense::Ge) {
      RowList neg = rows[r];
      for (auto& [col, a] : neg) a = -a;
      ge_rows.push_back(std::move(neg));
      ge_rhs.push_back(-work.rhs[r]);
    }
  }
  for (int j = 0; j < p; ++j) {
    if (std::isfinite(work.lower[j])) {
      ge_rows.push_back({{j, 1.0}});
      ge_rhs.push_back(work.lower[j]);
    }
    if (std::isfinite(work.upper[j])) {
      ge_rows.push_back({{j, -1.0}});
      ge_rhs.push_back(-work.upper[j]);
    }
  }
  const int branch = static_cast<int>(ge_rows.size());
  ge_rows.push_back({});  // filled per side below
  ge_rhs.push_back(0.0);
  const int nrows_side = branch + 1;

  const auto branch_row = [&](BoundSide side) -> RowList {
    const int var = side == BoundSide::Y ? inst.y_var(i) : inst.w_var(i);
    return {{var, -1.0}};
  };

  // Cut-generating LP over multipliers u for both sides plus the violation
  // t:  max t  s.t.  G_Y^T u_Y = G_W^T u_W (the cut coefficients agree),
  // (g - G v*)^T u >= t on each side, and sum of all multipliers <= 1.
  const int uy0 = 0;
  const int uw0 = nrows_side;
  const int tvar = 2 * nrows_side;
  LpModel cglp;
  cglp.objective.assign(tvar + 1, 0.0);
  cglp.objective[tvar] = -1.0;
  cglp.lower.assign(tvar + 1, 0.0);
  cglp.upper.assign(tvar + 1, kInf);
  cglp.constraints = SparseMatrix(p + 3, tvar + 1);
  cglp.senses.assign(p + 3, RowSense::Eq);
  cglp.senses[p] = RowSense::Ge;
  cglp.senses[p + 1] = RowSense::Ge;
  cglp.senses[p + 2] = RowSense::Le;
  cglp.rhs.assign(p + 3, 0.0);
  cglp.rhs[p + 2] = 1.0;

  const auto add_side = [&](int base, BoundSide side, int viol_row) {
    const RowList br = branch_row(side);
    const double sgn = base == uy0 ? 1.0 : -1.0;
    for (int r = 0; r < nrows_side; ++r) {
      const RowList& row = r == branch ? br : ge_rows[r];
      double act = 0.0;
      for (const auto& [col, a] : row) {
        cglp.constraints.add(col, base + r, sgn * a);
        act += a * sol.x[col];
      }
      cglp.constraints.add(viol_row, base + r, ge_rhs[r] - act);
      cglp.constraints.add(p + 2, base + r, 1.0);
    }
  };
  add_side(uy0, BoundSide::Y, p);
  add_side(uw0, BoundSide::W, p + 1);
  cglp.constraints.add(p, tvar, -1.0);
  cglp.constraints.add(p + 1, tvar, -1.0);

  const LpSolution cg = solve_lp(cglp);
  if (cg.status != LpStatus::Optimal) return std::nullopt;
  if (-cg.objective <= kViolationTol) return std::nullopt;

  // Rebuild the cut from each side's multipliers; both must agree for the
  // duality certificate to hold.
  std::vector<double> alpha_y(p, 0.0);
  std::vector<double> alpha_w(p, 0.0);
  double beta_y = 0.0;
  double beta_w = 0.0;
  for (int r = 0; r < nrows_side; ++r) {
    const double u_y = cg.x[uy0 + r];
    const double u_w = cg.x[uw0 + r];
    const RowList& row_y = r == branch ? branch_row(BoundSide::Y) : ge_rows[r];
    const RowList& row_w = r == branch ? branch_row(BoundSide::W) : ge_rows[r];
    if (u_y != 0.0) {
      for (const auto& [col, a] : row_y) alpha_y[col] += u_y * a;
      beta_y += u_y * ge_rhs[r];
    }
    if (u_w != 0.0) {
      for (const auto& [col, a] : row_w) alpha_w[col] += u_w * a;
      beta_w += u_w * ge_rhs[r];
    }
  }
  double scale = 1.0;
  for (int j = 0; j < p; ++j) scale = std::max(scale, std::abs(alpha_y[j]));
  for (int j = 0; j < p; ++j) {
    if (std::abs(alpha_y[j] - alpha_w[j]) > 1e-7 * scale) return std::nullopt;
  }
  const double beta = std::min(beta_y, beta_w);
  double act = 0.0;
  for (int j = 0; j < p; ++j) act += alpha_y[j] * sol.x[j];
  if (beta - act <= kViolationTol) return std::nullopt;

  Cut cut;
  cut.kind = CutKind::Disjunctive;
  cut.source = i;
  cut.coeff_x.assign(alpha_y.begin(), alpha_y.begin() + inst.n);
  cut.coeff_y.assign(alpha_y.begin() + inst.n,
                     alpha_y.begin() + inst.n + inst.m);
  cut.coeff_w.assign(alpha_y.begin() + inst.n + inst.m, alpha_y.end());
  cut.rhs = beta;
  drop_small(cut.coeff_x);
  drop_small(cut.coeff_y);
  drop_small(cut.coeff_w);
  return cut;
}

double compute_bound(const LpccInstance& inst, BoundSide side, int i,
                     const BoundBox& box) {
  LpModel lp = build_relaxation(inst);
  std::fill(lp.objective.begin(), lp.objective.end(), 0.0);
  lp.objective[side == BoundSide::Y ? inst.y_var(i) : inst.w_var(i)] = -1.0;
  for (int j = 0; j < inst.m; ++j) {
    lp.upper[inst.y_var(j)] = box.u_y[j];
    lp.upper[inst.w_var(j)] = box.u_w[j];
  }
  if (std::isfinite(box.ub_obj)) {
    const int row = lp.add_row(RowSense::Le, box.ub_obj);
    for (int j = 0; j < inst.n; ++j) {
      if (inst.c[j] != 0.0) lp.constraints.add(row, inst.x_var(j), inst.c[j]);
    }
    for (int j = 0; j < inst.m; ++j) {
      if (inst.d[j] != 0.0) lp.constraints.add(row, inst.y_var(j), inst.d[j]);
    }
  }
  for (int j = 0; j < inst.m; ++j) {
    if (!std::isfinite(box.u_y[j]) || !std::isfinite(box.u_w[j])) continue;
    const int row =
        lp.add_row(RowSense::Le, box.u_w[j] * box.u_y[j]);
    lp.constraints.add(row, inst.y_var(j), box.u_w[j]);
    lp.constraints.add(row, inst.w_var(j), box.u_y[j]);
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status == LpStatus::UnboundedBelow) return kInf;
  if (sol.status == LpStatus::Infeasible) return 0.0;  // empty cutoff region
  return -sol.objective;
}

Cut gen_bound_cut(const LpccInstance& inst, int i, double u_y_i,
                  double u_w_i) {
  Cut cut;
  cut.kind = CutKind::Bound;
  cut.source = i;
  cut.coeff_x.assign(inst.n, 0.0);
  cut.coeff_y.assign(inst.m, 0.0);
  cut.coeff_w.assign(inst.m, 0.0);
  cut.coeff_y[i] = -u_w_i;
  cut.coeff_w[i] = -u_y_i;
  cut.rhs = -u_w_i * u_y_i;
  return cut;
}

PreprocessResult run_preprocessor(const LpccInstance& inst,
                                  const PreprocessParams& params) {
  const Timer t_total;
  PreprocessResult res;
  res.box = BoundBox::unknown(inst.m);
  res.root_model = build_relaxation(inst);
  res.root_sol = solve_lp(res.root_model);
  ++res.lp_solves;
  if (res.root_sol.status != LpStatus::Optimal) {
    res.root_lb = res.root_sol.status == LpStatus::Infeasible ? kInf : -kInf;
    res.total_seconds = t_total.seconds();
    return res;
  }
  res.root_lb = res.root_sol.objective;

  if (params.use_recovery) {
    const Timer t_rec;
    // The deep walk handles relaxation optima that round far from any
    // feasible piece; the fixed-budget local search remains as a fallback
    // with a different exploration pattern.
    RecoveryResult rec = descent_recovery(inst, res.root_sol);
    res.lp_solves += rec.gap_evaluations;
    if (!rec.recovered) {
      RecoveryResult local =
          local_search_recovery(inst, res.root_sol, params.recovery);
      res.lp_solves += local.gap_evaluations;
      if (local.recovered) rec = std::move(local);
    }
    if (rec.recovered) {
      res.incumbent = rec.point;
      res.incumbent_z = rec.z;
      // Bisect to a few tenths of a percent; tighter windows cost more
      // rounds than the bound they add is worth at the root.
      const double refine_gap =
          params.recovery.search_gap_min >= 0.0
              ? params.recovery.search_gap_min
              : 2e-3 * std::max(1.0, std::abs(rec.point.objective));
      const RecoveryResult refined = descent_refined_recovery(
          inst, rec.point.objective, res.root_sol.objective, refine_gap);
      res.lp_solves += refined.gap_evaluations;
      if (refined.recovered &&
          refined.point.objective < res.incumbent->objective) {
        res.incumbent = refined.point;
        res.incumbent_z = refined.z;
      }
    }
    res.recovery_seconds = t_rec.seconds();
  }
  if (res.incumbent) res.box.ub_obj = res.incumbent->objective;

  if (params.use_cuts) {
    const Timer t_cuts;
    bool empty_proven = false;
    const auto resolve = [&]() -> bool {
      res.root_model = res.pool.attach(inst);
      res.root_sol = solve_lp(res.root_model);
      ++res.lp_solves;
      if (res.root_sol.status != LpStatus::Optimal) {
        // Every pooled cut is globally valid, so an infeasible re-solve
        // certifies there is no complementary-feasible point.
        res.root_lb = kInf;
        empty_proven = true;
        return false;
      }
      res.root_lb = std::max(res.root_lb, res.root_sol.objective);
      res.pool.purge_slack_basic(res.root_sol);
      return true;
    };

    const int disj_rounds =
        params.disj_rounds < 0 ? inst.m / 100 : params.disj_rounds;
    for (int round = 0; round < disj_rounds && !empty_proven; ++round) {
      const std::vector<int> cand = select_disjunction_candidates(
          inst, res.root_sol, params.disj_per_round, params.comp_tol);
      res.lp_solves += static_cast<long>(cand.size());
      int added = 0;
      for (int i : cand) {
        std::optional<Cut> cut =
            gen_disjunctive_cut(inst, res.root_model, res.root_sol, i);
        if (cut && res.pool.add(std::move(*cut))) {
          ++added;
          ++res.cuts_disjunctive;
        }
      }
      if (added == 0) break;
      if (!resolve()) break;
    }

    const int simple_rounds =
        params.simple_rounds < 0 ? inst.m / 10 : params.simple_rounds;
    for (int round = 0; round < simple_rounds && !empty_proven; ++round) {
      int added = 0;
      for (int i = 0; i < inst.m; ++i) {
        const double yi = res.root_sol.x[inst.y_var(i)];
        const double wi = res.root_sol.x[inst.w_var(i)];
        if (std::min(yi, wi) <= params.comp_tol) continue;
        std::optional<Cut> cut =
            gen_simple_cut(inst, res.root_model, res.root_sol, i);
        if (!cut) continue;
        if (cut_violation(inst, *cut, res.root_sol) <= kViolationTol) continue;
        if (res.pool.add(std::move(*cut))) {
          ++added;
          ++res.cuts_simple;
        }
      }
      if (added == 0) break;
      if (!resolve()) break;
    }

    for (int pass = 0; pass < params.bound_passes && !empty_proven; ++pass) {
      const std::vector<int> pairs = select_disjunction_candidates(
          inst, res.root_sol, params.bound_pairs, params.comp_tol);
      if (pairs.empty()) break;
      int added = 0;
      bool tightened = false;
      for (int i : pairs) {
        const double uy = compute_bound(inst, BoundSide::Y, i, res.box);
        const double uw = compute_bound(inst, BoundSide::W, i, res.box);
        res.lp_solves += 2;
        if (uy < res.box.u_y[i]) {
          res.box.u_y[i] = uy;
          tightened = true;
        }
        if (uw < res.box.u_w[i]) {
          res.box.u_w[i] = uw;
          tightened = true;
        }
        if (!std::isfinite(res.box.u_y[i]) || !std::isfinite(res.box.u_w[i])) {
          continue;
        }
        Cut cut = gen_bound_cut(inst, i, res.box.u_y[i], res.box.u_w[i]);
        if (cut_violation(inst, cut, res.root_sol) <= kViolationTol) continue;
        if (res.pool.add(std::move(cut))) {
          ++added;
          ++res.cuts_bound;
        }
      }
      if (added > 0) {
        if (!resolve()) break;
      } else if (!tightened) {
        break;
      }
    }
    res.cuts_seconds = t_cuts.seconds();
  }

  res.total_seconds = t_total.seconds();
  return res;
}

}  // namespace lpcc

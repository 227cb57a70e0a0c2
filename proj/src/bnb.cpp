// SPDX-License-Identifier: Apache-2.0

#include "lpcc/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "lpcc/recovery.hpp"
#include "lpcc/simplex.hpp"

namespace lpcc {

namespace {

constexpr double kDeltaSentinel = 1e12;
constexpr double kPresolveTol = 1e-9;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

struct Node {
  std::vector<signed char> fix;  // -1 free, 0 forces y_i = 0, 1 forces w_i = 0
  double lb = -kInf;
  int depth = 0;
  long id = 0;
  Basis basis;  // own optimal basis when solved, else the parent's
  bool unbounded = false;
};

// Heap priority: smallest lb first, most recently created on ties.
struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.lb != b.lb) return a.lb > b.lb;
    return a.id < b.id;
  }
};

double norm2(const std::vector<std::pair<int, double>>& coeffs) {
  double s = 0.0;
  for (const auto& [id, a] : coeffs) s += a * a;
  return std::sqrt(s);
}

// Divides by the 2-norm over the set; an all-zero vector stays zero.
void normalize(std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  if (s <= 0.0) return;
  const double inv = 1.0 / std::sqrt(s);
  for (double& c : v) c *= inv;
}

class Search {
 public:
  Search(const LpccInstance& inst, const SolverParams& params)
      : inst_(inst), params_(params), stats_(inst.m) {}

  SolveReport run();

 private:
  enum class NodeExit { Fathomed, Restart, Terminated };

  bool budget_exceeded() const {
    if (params_.time_limit > 0.0 && timer_.seconds() > params_.time_limit) {
      return true;
    }
    return params_.node_limit > 0 && report_.nodes >= params_.node_limit;
  }

  void apply_bounds(const std::vector<signed char>& fix) {
    for (int i = 0; i < inst_.m; ++i) {
      engine_->set_var_bounds(inst_.y_var(i), 0.0,
                              fix[i] == 0 ? 0.0 : kInf);
      engine_->set_var_bounds(inst_.w_var(i), 0.0,
                              fix[i] == 1 ? 0.0 : kInf);
    }
  }

  LpSolution solve_node(const Node& node) {
    apply_bounds(node.fix);
    ++report_.lp_solves;
    return engine_->solve(node.basis.empty() ? nullptr : &node.basis);
  }

  // Child LP relative to the bounds currently applied for `node`.
  LpSolution solve_child(const LpSolution& at, int i, int side) {
    const int var = side == 0 ? inst_.y_var(i) : inst_.w_var(i);
    engine_->set_var_bounds(var, 0.0, 0.0);
    ++report_.lp_solves;
    LpSolution out = engine_->solve(&at.basis);
    engine_->set_var_bounds(var, 0.0, kInf);
    return out;
  }

  std::vector<int> violated(const LpSolution& sol) const {
    std::vector<int> out;
    for (int i = 0; i < inst_.m; ++i) {
      if (std::min(sol.x[inst_.y_var(i)], sol.x[inst_.w_var(i)]) >
          params_.comp_tol) {
        out.push_back(i);
      }
    }
    return out;
  }

  double satisfied_fraction(const LpSolution& sol) const {
    if (inst_.m == 0) return 1.0;
    int sat = 0;
    for (int i = 0; i < inst_.m; ++i) {
      if (std::min(sol.x[inst_.y_var(i)], sol.x[inst_.w_var(i)]) <=
          params_.comp_tol) {
        ++sat;
      }
    }
    return static_cast<double>(sat) / inst_.m;
  }

  void update_stats(int i, int side, const LpSolution& parent,
                    const LpSolution& child) {
    if (child.status != LpStatus::Optimal) return;
    const double delta = std::max(0.0, child.objective - parent.objective);
    const double viol =
        parent.x[side == 0 ? inst_.y_var(i) : inst_.w_var(i)];
    auto& sigma = side == 0 ? stats_.sigma_y : stats_.sigma_w;
    auto& phi = side == 0 ? stats_.phi_y : stats_.phi_w;
    auto& eta = side == 0 ? stats_.eta_y : stats_.eta_w;
    sigma[i] += delta / viol;
    phi[i] += satisfied_fraction(child);
    ++eta[i];
  }

  // A complementary LP point: re-solve its piece so the incumbent carries
  // exact zeros, falling back to the raw point if the piece solve balks.
  void offer_incumbent(const LpSolution& sol) {
    const Assignment z = round_assignment(inst_, sol);
    ++report_.lp_solves;
    const LpSolution ps = solve_lp(build_piece_lp(inst_, z));
    LpccPoint pt;
    if (ps.status == LpStatus::Optimal) {
      pt = point_from_solution(inst_, ps);
    } else {
      pt = point_from_solution(inst_, sol);
      if (!check_feasible(inst_, pt, params_.comp_tol)) return;
    }
    for (int i = 0; i < inst_.m; ++i) {
      (z[i] == 0 ? pt.y[i] : pt.w[i]) = 0.0;
    }
    pt.objective = objective_value(inst_, pt.x, pt.y);
    if (pt.objective < ub_) {
      ub_ = pt.objective;
      incumbent_ = pt;
      incumbent_z_ = z;
    }
  }

  double median_lb() const {
    if (list_.empty()) return kInf;
    std::vector<double> lbs;
    lbs.reserve(list_.size());
    for (const Node& n : list_) lbs.push_back(n.lb);
    const std::size_t mid = lbs.size() / 2;
    std::nth_element(lbs.begin(), lbs.begin() + mid, lbs.end());
    return lbs[mid];
  }

  void push_bounded(Node node) {
    list_.push_back(std::move(node));
    std::push_heap(list_.begin(), list_.end(), NodeOrder{});
  }

  Node pop_node() {
    if (!stack_.empty()) {
      Node n = std::move(stack_.back());
      stack_.pop_back();
      return n;
    }
    std::pop_heap(list_.begin(), list_.end(), NodeOrder{});
    Node n = std::move(list_.back());
    list_.pop_back();
    return n;
  }

  double current_zlow() const {
    double z = std::min(ub_, kInf);
    if (!stack_.empty()) return -kInf;
    if (!list_.empty()) z = std::min(z, list_.front().lb);
    return z;
  }

  Node make_child(const Node& parent, int i, int side,
                  const LpSolution& child_sol) {
    Node child;
    child.fix = parent.fix;
    child.fix[i] = static_cast<signed char>(side);
    child.depth = parent.depth + 1;
    child.id = ++next_id_;
    child.basis = child_sol.basis;
    return child;
  }

  // Certified unbounded direction from an unbounded node LP: the ray must be
  // complementary, and the piece it selects must be nonempty; that piece's
  // own unbounded solve supplies both the base vertex and the ray.
  std::optional<UnboundedCertificate> try_certify(
      const std::vector<signed char>& fix, const LpSolution& sol) {
    const double tol = params_.comp_tol;
    Assignment z(static_cast<std::size_t>(inst_.m));
    for (int i = 0; i < inst_.m; ++i) {
      const double ry = sol.ray[inst_.y_var(i)];
      const double rw = sol.ray[inst_.w_var(i)];
      if (ry > tol && rw > tol) return std::nullopt;
      if (fix[i] >= 0) {
        z[i] = static_cast<std::uint8_t>(fix[i]);
      } else if (ry > tol) {
        z[i] = 1;
      } else if (rw > tol) {
        z[i] = 0;
      } else {
        z[i] = sol.x[inst_.y_var(i)] < sol.x[inst_.w_var(i)] ? 0 : 1;
      }
    }
    ++report_.lp_solves;
    const LpSolution ps = solve_lp(build_piece_lp(inst_, z));
    if (ps.status != LpStatus::UnboundedBelow) return std::nullopt;

    UnboundedCertificate cert;
    cert.base = point_from_solution(inst_, ps);
    cert.ray.x.assign(inst_.n, 0.0);
    cert.ray.y.assign(inst_.m, 0.0);
    cert.ray.w.assign(inst_.m, 0.0);
    for (int j = 0; j < inst_.n; ++j) cert.ray.x[j] = ps.ray[inst_.x_var(j)];
    for (int i = 0; i < inst_.m; ++i) {
      cert.ray.y[i] = ps.ray[inst_.y_var(i)];
      cert.ray.w[i] = ps.ray[inst_.w_var(i)];
    }
    for (int i = 0; i < inst_.m; ++i) {
      if (z[i] == 0) {
        cert.base.y[i] = 0.0;
        cert.ray.y[i] = 0.0;
      } else {
        cert.base.w[i] = 0.0;
        cert.ray.w[i] = 0.0;
      }
    }
    cert.base.objective = objective_value(inst_, cert.base.x, cert.base.y);
    cert.ray.objective = objective_value(inst_, cert.ray.x, cert.ray.y);
    return cert;
  }

  // Branching pair for an unbounded node: largest ray violation product,
  // then largest vertex violation product, then the lowest free pair that
  // participates in the ray, then the lowest free pair.
  int pick_unbounded_branch(const Node& node, const LpSolution& sol) const {
    const double tol = params_.comp_tol;
    int best = -1;
    double best_prod = 0.0;
    for (int i = 0; i < inst_.m; ++i) {
      if (node.fix[i] >= 0) continue;
      const double ry = sol.ray[inst_.y_var(i)];
      const double rw = sol.ray[inst_.w_var(i)];
      if (std::min(ry, rw) > tol && ry * rw > best_prod) {
        best_prod = ry * rw;
        best = i;
      }
    }
    if (best >= 0) return best;
    for (int i = 0; i < inst_.m; ++i) {
      if (node.fix[i] >= 0) continue;
      const double yv = sol.x[inst_.y_var(i)];
      const double wv = sol.x[inst_.w_var(i)];
      if (std::min(yv, wv) > tol && yv * wv > best_prod) {
        best_prod = yv * wv;
        best = i;
      }
    }
    if (best >= 0) return best;
    for (int i = 0; i < inst_.m; ++i) {
      if (node.fix[i] >= 0) continue;
      if (sol.ray[inst_.y_var(i)] > tol || sol.ray[inst_.w_var(i)] > tol) {
        return i;
      }
    }
    for (int i = 0; i < inst_.m; ++i) {
      if (node.fix[i] < 0) return i;
    }
    return -1;
  }

  // Evaluates candidates in order, solving both children of each.  Returns
  // the selected pair, or signals that the node was fathomed (every
  // complementary point needs both sides of some pair at zero) or that a
  // one-sided fixing was applied and the node must be re-solved.
  int strong_branch(Node& node, const LpSolution& sol,
                    const std::vector<int>& candidates, bool* fathomed,
                    bool* restart) {
    const double median = median_lb();
    const double eps = params_.weights.epsilon;
    int best = -1;
    double best_score = -kInf;
    for (int i : candidates) {
      LpSolution cy = solve_child(sol, i, 0);
      LpSolution cw = solve_child(sol, i, 1);
      update_stats(i, 0, sol, cy);
      update_stats(i, 1, sol, cw);
      const bool fy = cy.status == LpStatus::Optimal;
      const bool fw = cw.status == LpStatus::Optimal;
      const double oy = fy ? cy.objective : kInf;
      const double ow = fw ? cw.objective : kInf;
      if (median < kInf && (oy >= median || ow >= median)) {
        child_y_ = std::move(cy);
        child_w_ = std::move(cw);
        return i;
      }
      if (!fy && !fw) {
        *fathomed = true;
        return -1;
      }
      if (!fy || !fw) {
        node.fix[i] = static_cast<signed char>(fy ? 0 : 1);
        *restart = true;
        return -1;
      }
      const double dy = std::min(oy - sol.objective, kDeltaSentinel);
      const double dw = std::min(ow - sol.objective, kDeltaSentinel);
      const double score = std::max(dy, eps) * std::max(dw, eps);
      if (score > best_score) {
        best_score = score;
        best = i;
        child_y_ = std::move(cy);
        child_w_ = std::move(cw);
      }
    }
    return best;
  }

  // The three bounded fathoming rules for one child.
  void place_child(const Node& parent, int j, int side,
                   const LpSolution& child_sol) {
    if (child_sol.status == LpStatus::Infeasible) return;
    if (child_sol.status == LpStatus::UnboundedBelow) {
      // Unreachable from a bounded parent; kept as a defensive route back
      // to the unbounded list.
      Node child = make_child(parent, j, side, child_sol);
      child.unbounded = true;
      stack_.push_back(std::move(child));
      return;
    }
    if (violated(child_sol).empty()) {
      offer_incumbent(child_sol);
      return;
    }
    if (relative_gap(ub_, child_sol.objective) < params_.rel_gap) return;
    Node child = make_child(parent, j, side, child_sol);
    child.lb = child_sol.objective;
    push_bounded(std::move(child));
  }

  NodeExit process_bounded(Node& node, LpSolution sol) {
    while (true) {
      if (sol.status == LpStatus::Infeasible) return NodeExit::Fathomed;
      if (sol.status == LpStatus::UnboundedBelow) {
        return process_unbounded(node, sol);
      }
      node.lb = std::max(node.lb, sol.objective);
      if (relative_gap(ub_, node.lb) < params_.rel_gap) {
        return NodeExit::Fathomed;
      }
      std::vector<int> vio = violated(sol);
      if (vio.empty()) {
        offer_incumbent(sol);
        return NodeExit::Fathomed;
      }

      const auto fixings = node_presolve(inst_, sol, params_.comp_tol);
      if (!fixings.empty()) {
        for (const auto& [i, side] : fixings) {
          node.fix[i] = static_cast<signed char>(side == 0 ? 0 : 1);
        }
        sol = solve_node(node);
        continue;
      }

      int j = -1;
      bool have_children = false;
      if (node.depth <= params_.weights.strong_depth) {
        std::sort(vio.begin(), vio.end(), [&](int a, int b) {
          const double pa =
              sol.x[inst_.y_var(a)] * sol.x[inst_.w_var(a)];
          const double pb =
              sol.x[inst_.y_var(b)] * sol.x[inst_.w_var(b)];
          if (pa != pb) return pa > pb;
          return a < b;
        });
        bool fathomed = false;
        bool restart = false;
        j = strong_branch(node, sol, vio, &fathomed, &restart);
        if (fathomed) return NodeExit::Fathomed;
        if (restart) {
          sol = solve_node(node);
          continue;
        }
        have_children = true;
      } else {
        const auto scores = branch_scores(inst_, sol, stats_,
                                          params_.weights, params_.comp_tol);
        double best = -kInf;
        for (const auto& [i, s] : scores) {
          if (s > best) {
            best = s;
            j = i;
          }
        }
      }
      if (params_.branch_trace) params_.branch_trace->push_back(j);

      if (have_children) {
        place_child(node, j, 0, child_y_);
        place_child(node, j, 1, child_w_);
      } else {
        apply_bounds(node.fix);
        const LpSolution cy = solve_child(sol, j, 0);
        update_stats(j, 0, sol, cy);
        place_child(node, j, 0, cy);
        const LpSolution cw = solve_child(sol, j, 1);
        update_stats(j, 1, sol, cw);
        place_child(node, j, 1, cw);
      }
      return NodeExit::Fathomed;
    }
  }

  // An unbounded node either certifies the instance unbounded or branches;
  // children are triaged into both lists with no statistics recorded.
  NodeExit process_unbounded(Node& node, const LpSolution& sol) {
    if (auto cert = try_certify(node.fix, sol)) {
      report_.certificate = std::move(*cert);
      return NodeExit::Terminated;
    }
    const int j = pick_unbounded_branch(node, sol);
    if (j < 0) return NodeExit::Fathomed;  // fully fixed, nothing to split
    if (params_.branch_trace) params_.branch_trace->push_back(j);
    for (int side = 0; side < 2; ++side) {
      apply_bounds(node.fix);
      const LpSolution child_sol = solve_child(sol, j, side);
      if (child_sol.status == LpStatus::Infeasible) continue;
      if (child_sol.status == LpStatus::UnboundedBelow) {
        if (auto cert = try_certify_child(node, j, side, child_sol)) {
          report_.certificate = std::move(*cert);
          return NodeExit::Terminated;
        }
        Node child = make_child(node, j, side, child_sol);
        child.unbounded = true;
        stack_.push_back(std::move(child));
        continue;
      }
      if (violated(child_sol).empty()) {
        offer_incumbent(child_sol);
        continue;
      }
      if (relative_gap(ub_, child_sol.objective) < params_.rel_gap) continue;
      Node child = make_child(node, j, side, child_sol);
      child.lb = child_sol.objective;
      push_bounded(std::move(child));
    }
    return NodeExit::Fathomed;
  }

  std::optional<UnboundedCertificate> try_certify_child(
      const Node& parent, int j, int side, const LpSolution& child_sol) {
    std::vector<signed char> fix = parent.fix;
    fix[j] = static_cast<signed char>(side);
    return try_certify(fix, child_sol);
  }

  const LpccInstance& inst_;
  const SolverParams& params_;
  BranchStats stats_;
  Timer timer_;
  SolveReport report_;
  std::optional<SimplexSolver> engine_;
  std::vector<Node> list_;   // bounded, heap by NodeOrder
  std::vector<Node> stack_;  // unbounded, LIFO
  double ub_ = kInf;
  std::optional<LpccPoint> incumbent_;
  Assignment incumbent_z_;
  long next_id_ = 0;
  LpSolution child_y_, child_w_;  // strong-branch solves of the selection
};

SolveReport Search::run() {
  const PreprocessResult pre = run_preprocessor(inst_, params_.preprocess);
  report_.lp_solves += pre.lp_solves;
  report_.cuts_simple = pre.cuts_simple;
  report_.cuts_disjunctive = pre.cuts_disjunctive;
  report_.cuts_bound = pre.cuts_bound;
  report_.preprocess_seconds = pre.total_seconds;

  if (pre.incumbent) {
    incumbent_ = pre.incumbent;
    incumbent_z_ = pre.incumbent_z;
    ub_ = pre.incumbent->objective;
  }

  if (pre.root_lb == kInf && !incumbent_) {
    report_.status = SolveStatus::Infeasible;
    report_.lower_bound = kInf;
    report_.upper_bound = kInf;
    report_.total_seconds = timer_.seconds();
    return report_;
  }

  engine_.emplace(pre.root_model);
  Node root;
  root.fix.assign(static_cast<std::size_t>(inst_.m), -1);
  root.depth = 1;
  root.id = 0;
  if (pre.root_sol.status == LpStatus::UnboundedBelow) {
    root.unbounded = true;
    stack_.push_back(std::move(root));
  } else if (pre.root_lb == kInf) {
    // Every cut holds at every complementary point, so an emptied root LP
    // alongside a feasible incumbent is a tolerance artifact; the incumbent
    // is the best certified point and the bound closes on it.
    report_.status = SolveStatus::Optimal;
    report_.incumbent = incumbent_;
    report_.incumbent_z = incumbent_z_;
    report_.lower_bound = ub_;
    report_.upper_bound = ub_;
    report_.gap = 0.0;
    report_.total_seconds = timer_.seconds();
    return report_;
  } else {
    root.lb = pre.root_lb;
    root.basis = pre.root_sol.basis;
    push_bounded(std::move(root));
  }

  bool terminated = false;
  while (true) {
    if (stack_.empty() && list_.empty()) {
      report_.status =
          incumbent_ ? SolveStatus::Optimal : SolveStatus::Infeasible;
      report_.lower_bound = incumbent_ ? ub_ : kInf;
      break;
    }
    if (budget_exceeded()) {
      report_.status = SolveStatus::Limit;
      report_.lower_bound = current_zlow();
      break;
    }
    const double zlow = current_zlow();
    if (relative_gap(ub_, zlow) < params_.rel_gap) {
      report_.status = SolveStatus::Optimal;
      report_.lower_bound = zlow;
      break;
    }
    Node node = pop_node();
    if (!node.unbounded && relative_gap(ub_, node.lb) < params_.rel_gap) {
      continue;
    }
    ++report_.nodes;
    LpSolution sol = solve_node(node);
    if (process_bounded(node, std::move(sol)) == NodeExit::Terminated) {
      report_.status = SolveStatus::UnboundedBelow;
      report_.lower_bound = -kInf;
      terminated = true;
      break;
    }
  }

  if (terminated) {
    report_.upper_bound = -kInf;
    report_.incumbent.reset();
  } else {
    report_.incumbent = incumbent_;
    report_.incumbent_z = incumbent_z_;
    report_.upper_bound = ub_;
    if (report_.status == SolveStatus::Infeasible) {
      report_.lower_bound = kInf;
      report_.upper_bound = kInf;
    }
  }
  report_.gap = relative_gap(report_.upper_bound, report_.lower_bound);
  report_.total_seconds = timer_.seconds();
  return report_;
}

}  // namespace

std::vector<std::pair<int, int>> node_presolve(const LpccInstance& inst,
                                               const LpSolution& sol,
                                               double comp_tol) {
  std::vector<std::pair<int, int>> out;
  const auto all_nonpos = [](const TableauRow& row) {
    for (const auto& [id, a] : row.coeffs) {
      if (a > kPresolveTol) return false;
    }
    return true;
  };
  for (int i = 0; i < inst.m; ++i) {
    const int yv = inst.y_var(i);
    const int wv = inst.w_var(i);
    if (std::min(sol.x[yv], sol.x[wv]) <= comp_tol) continue;
    if (!sol.is_basic(yv) || !sol.is_basic(wv)) continue;
    if (all_nonpos(tableau_row(sol, yv))) {
      out.emplace_back(i, 1);  // y_i stays positive, force w_i = 0
      continue;
    }
    if (all_nonpos(tableau_row(sol, wv))) {
      out.emplace_back(i, 0);
    }
  }
  return out;
}

std::vector<std::pair<int, double>> branch_scores(const LpccInstance& inst,
                                                  const LpSolution& sol,
                                                  const BranchStats& stats,
                                                  const BranchWeights& weights,
                                                  double comp_tol) {
  std::vector<int> idx;
  for (int i = 0; i < inst.m; ++i) {
    if (std::min(sol.x[inst.y_var(i)], sol.x[inst.w_var(i)]) > comp_tol) {
      idx.push_back(i);
    }
  }
  if (idx.empty()) return {};
  const std::size_t nv = idx.size();

  // History averages with the uninitialized-entry fallback: mean of the
  // initialized entries of that side, or 1 when the side has none.
  const auto resolved = [&](const std::vector<double>& sum,
                            const std::vector<long>& cnt) {
    double mean = 0.0;
    long have = 0;
    for (int i = 0; i < inst.m; ++i) {
      if (cnt[i] > 0) {
        mean += sum[i] / cnt[i];
        ++have;
      }
    }
    mean = have > 0 ? mean / have : 1.0;
    std::vector<double> out(nv);
    for (std::size_t t = 0; t < nv; ++t) {
      const int i = idx[t];
      out[t] = cnt[i] > 0 ? sum[i] / cnt[i] : mean;
    }
    return out;
  };
  const std::vector<double> psi_y = resolved(stats.sigma_y, stats.eta_y);
  const std::vector<double> psi_w = resolved(stats.sigma_w, stats.eta_w);
  const std::vector<double> cap_y = resolved(stats.phi_y, stats.eta_y);
  const std::vector<double> cap_w = resolved(stats.phi_w, stats.eta_w);

  std::vector<double> svl(nv), sed(nv), spc(nv), ssl(nv);
  const double eps = weights.epsilon;
  for (std::size_t t = 0; t < nv; ++t) {
    const int i = idx[t];
    const int yv = inst.y_var(i);
    const int wv = inst.w_var(i);
    const double yval = sol.x[yv];
    const double wval = sol.x[wv];
    svl[t] = std::sqrt(yval * wval);
    sed[t] = 0.0;
    if (weights.scaled != 0.0 && sol.is_basic(yv) && sol.is_basic(wv)) {
      const double ny = norm2(tableau_row(sol, yv).coeffs);
      const double nw = norm2(tableau_row(sol, wv).coeffs);
      const double denom = std::sqrt(ny * nw);
      if (denom > 0.0) sed[t] = std::sqrt(yval * wval / denom);
    }
    spc[t] = std::sqrt(std::max(psi_y[t] * yval, eps) *
                       std::max(psi_w[t] * wval, eps));
    ssl[t] = std::sqrt(cap_y[t] * cap_w[t]);
  }
  normalize(svl);
  normalize(sed);
  normalize(spc);
  normalize(ssl);

  std::vector<std::pair<int, double>> out(nv);
  for (std::size_t t = 0; t < nv; ++t) {
    out[t] = {idx[t], weights.violation * svl[t] + weights.scaled * sed[t] +
                          weights.pseudocost * spc[t] +
                          weights.satisfaction * ssl[t]};
  }
  return out;
}

SolveReport solve_lpcc(const LpccInstance& inst, const SolverParams& params) {
  Search search(inst, params);
  return search.run();
}

}  // namespace lpcc

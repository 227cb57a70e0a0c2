// SPDX-License-Identifier: Apache-2.0

#include "lpcc/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpcc/errors.hpp"

namespace lpcc {

void LpccInstance::validate() const {
  if (n < 0 || m < 0 || k < 0) throw DimensionError("negative dimension");
  auto want = [](const char* name, std::size_t got, int expect) {
    if (got != static_cast<std::size_t>(expect)) {
      throw DimensionError(std::string(name) + " has size " +
                           std::to_string(got) + ", expected " +
                           std::to_string(expect));
    }
  };
  want("c", c.size(), n);
  want("d", d.size(), m);
  want("b", b.size(), k);
  want("q", q.size(), m);
  auto shape = [](const char* name, const SparseMatrix& mat, int r, int cc) {
    if (mat.nrows() != r || mat.ncols() != cc) {
      throw DimensionError(std::string(name) + " is " +
                           std::to_string(mat.nrows()) + "x" +
                           std::to_string(mat.ncols()) + ", expected " +
                           std::to_string(r) + "x" + std::to_string(cc));
    }
    mat.validate();
  };
  shape("A", A, k, n);
  shape("B", B, k, m);
  shape("N", N, m, n);
  shape("M", M, m, m);
  for (double v : c)
    if (!std::isfinite(v)) throw DimensionError("non-finite c");
  for (double v : d)
    if (!std::isfinite(v)) throw DimensionError("non-finite d");
  for (double v : b)
    if (!std::isfinite(v)) throw DimensionError("non-finite b");
  for (double v : q)
    if (!std::isfinite(v)) throw DimensionError("non-finite q");
}

LpModel build_relaxation(const LpccInstance& inst) {
  LpModel lp;
  const int nv = inst.num_lp_vars();
  lp.objective.assign(nv, 0.0);
  lp.lower.assign(nv, 0.0);
  lp.upper.assign(nv, kInf);
  for (int j = 0; j < inst.n; ++j) lp.objective[inst.x_var(j)] = inst.c[j];
  for (int i = 0; i < inst.m; ++i) lp.objective[inst.y_var(i)] = inst.d[i];

  const int rows = inst.k + inst.m;
  lp.constraints = SparseMatrix(rows, nv);
  lp.senses.assign(rows, RowSense::Ge);
  lp.rhs.assign(rows, 0.0);

  for (const Triplet& t : inst.A.triplets()) {
    lp.constraints.add(t.row, inst.x_var(t.col), t.value);
  }
  for (const Triplet& t : inst.B.triplets()) {
    lp.constraints.add(t.row, inst.y_var(t.col), t.value);
  }
  for (int i = 0; i < inst.k; ++i) lp.rhs[i] = inst.b[i];

  // w-link rows: N x + M y - w = -q.
  for (const Triplet& t : inst.N.triplets()) {
    lp.constraints.add(inst.wlink_row(t.row), inst.x_var(t.col), t.value);
  }
  for (const Triplet& t : inst.M.triplets()) {
    lp.constraints.add(inst.wlink_row(t.row), inst.y_var(t.col), t.value);
  }
  for (int i = 0; i < inst.m; ++i) {
    lp.constraints.add(inst.wlink_row(i), inst.w_var(i), -1.0);
    lp.senses[inst.wlink_row(i)] = RowSense::Eq;
    lp.rhs[inst.wlink_row(i)] = -inst.q[i];
  }
  return lp;
}

LpModel build_piece_lp(const LpccInstance& inst, const Assignment& z) {
  if (static_cast<int>(z.size()) != inst.m) {
    throw DimensionError("assignment size mismatch");
  }
  LpModel lp = build_relaxation(inst);
  for (int i = 0; i < inst.m; ++i) {
    lp.upper[z[i] ? inst.w_var(i) : inst.y_var(i)] = 0.0;
  }
  return lp;
}

LpModel build_feasibility_gap_lp(const LpccInstance& inst, const Assignment& z,
                                 const ObjectiveWindow* window) {
  if (static_cast<int>(z.size()) != inst.m) {
    throw DimensionError("assignment size mismatch");
  }
  LpModel lp = build_relaxation(inst);
  std::fill(lp.objective.begin(), lp.objective.end(), 0.0);
  for (int i = 0; i < inst.m; ++i) {
    lp.objective[z[i] ? inst.w_var(i) : inst.y_var(i)] = 1.0;
  }
  if (window != nullptr) {
    const int lo_row = lp.add_row(RowSense::Ge, window->lo);
    const int hi_row = lp.add_row(RowSense::Le, window->hi);
    for (int j = 0; j < inst.n; ++j) {
      if (inst.c[j] != 0.0) {
        lp.constraints.add(lo_row, inst.x_var(j), inst.c[j]);
        lp.constraints.add(hi_row, inst.x_var(j), inst.c[j]);
      }
    }
    for (int i = 0; i < inst.m; ++i) {
      if (inst.d[i] != 0.0) {
        lp.constraints.add(lo_row, inst.y_var(i), inst.d[i]);
        lp.constraints.add(hi_row, inst.y_var(i), inst.d[i]);
      }
    }
  }
  return lp;
}

double objective_value(const LpccInstance& inst, const std::vector<double>& x,
                       const std::vector<double>& y) {
  double v = 0.0;
  for (int j = 0; j < inst.n; ++j) v += inst.c[j] * x[j];
  for (int i = 0; i < inst.m; ++i) v += inst.d[i] * y[i];
  return v;
}

LpccPoint point_from_solution(const LpccInstance& inst,
                              const LpSolution& sol) {
  LpccPoint pt;
  pt.x.assign(sol.x.begin(), sol.x.begin() + inst.n);
  pt.y.assign(sol.x.begin() + inst.n, sol.x.begin() + inst.n + inst.m);
  pt.w.assign(sol.x.begin() + inst.n + inst.m,
              sol.x.begin() + inst.n + 2 * inst.m);
  pt.objective = objective_value(inst, pt.x, pt.y);
  return pt;
}

bool check_feasible(const LpccInstance& inst, const LpccPoint& pt,
                    double tol) {
  if (static_cast<int>(pt.x.size()) != inst.n ||
      static_cast<int>(pt.y.size()) != inst.m ||
      static_cast<int>(pt.w.size()) != inst.m) {
    return false;
  }
  double scale = 1.0;
  for (double v : inst.b) scale = std::max(scale, std::fabs(v));
  for (double v : inst.q) scale = std::max(scale, std::fabs(v));
  const double row_tol = tol * scale;

  for (double v : pt.x)
    if (v < -row_tol) return false;
  for (double v : pt.y)
    if (v < -row_tol) return false;
  for (double v : pt.w)
    if (v < -row_tol) return false;

  std::vector<double> ax, by;
  inst.A.multiply(pt.x, ax);
  inst.B.multiply(pt.y, by);
  for (int i = 0; i < inst.k; ++i) {
    if (ax[i] + by[i] < inst.b[i] - row_tol) return false;
  }

  std::vector<double> nx, my;
  inst.N.multiply(pt.x, nx);
  inst.M.multiply(pt.y, my);
  for (int i = 0; i < inst.m; ++i) {
    if (std::fabs(inst.q[i] + nx[i] + my[i] - pt.w[i]) > row_tol) return false;
  }

  for (int i = 0; i < inst.m; ++i) {
    if (std::min(pt.y[i], pt.w[i]) > tol) return false;
  }
  return true;
}

double relative_gap(double ub, double lb) {
  if (!std::isfinite(ub) || !std::isfinite(lb)) return kInf;
  return (ub - lb) / std::max(1.0, std::fabs(lb));
}

}  // namespace lpcc

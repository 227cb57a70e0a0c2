// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the test binaries. Everything here is written
// independently of the library internals it checks: linear systems go
// through a plain Gaussian elimination, LP optima come from exhaustive
// vertex enumeration, and matrix ranks from a pivoted Cholesky. Slow and
// simple on purpose.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lpcc/lp_model.hpp"
#include "lpcc/rng.hpp"
#include "lpcc/sparse.hpp"

namespace lpcc_test {

using Dense = std::vector<std::vector<double>>;

// Solves a*x = rhs in place by Gaussian elimination with partial pivoting.
// Returns false when the matrix is singular to working precision.
inline bool solve_dense(Dense a, std::vector<double>& rhs) {
  const int n = static_cast<int>(a.size());
  std::vector<double>& x = rhs;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    if (std::fabs(a[piv][col]) < 1e-11) return false;
    std::swap(a[piv], a[col]);
    std::swap(x[piv], x[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      x[r] -= f * x[col];
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    x[col] /= a[col][col];
    for (int r = 0; r < col; ++r) x[r] -= a[r][col] * x[col];
  }
  return true;
}

// Column view of an LP in computational form: structural columns first,
// then one logical column per row carrying the sense as a bound.
struct ColumnForm {
  int nrows = 0;
  int ntot = 0;  // structurals + logicals
  Dense cols;    // ntot columns of length nrows
  std::vector<double> cost, lo, hi, rhs;
};

inline ColumnForm column_form(const lpcc::LpModel& model) {
  ColumnForm f;
  f.nrows = model.num_rows();
  const int nvars = model.num_vars();
  f.ntot = nvars + f.nrows;
  f.cols.assign(f.ntot, std::vector<double>(f.nrows, 0.0));
  for (const lpcc::Triplet& t : model.constraints.triplets()) {
    f.cols[t.col][t.row] += t.value;
  }
  f.cost = model.objective;
  f.cost.resize(f.ntot, 0.0);
  f.lo = model.lower;
  f.hi = model.upper;
  f.rhs = model.rhs;
  for (int r = 0; r < f.nrows; ++r) {
    f.cols[nvars + r][r] = 1.0;
    switch (model.senses[r]) {
      case lpcc::RowSense::Ge:
        f.lo.push_back(-lpcc::kInf);
        f.hi.push_back(0.0);
        break;
      case lpcc::RowSense::Le:
        f.lo.push_back(0.0);
        f.hi.push_back(lpcc::kInf);
        break;
      case lpcc::RowSense::Eq:
        f.lo.push_back(0.0);
        f.hi.push_back(0.0);
        break;
    }
  }
  return f;
}

struct BruteResult {
  bool feasible = false;
  double best_obj = std::numeric_limits<double>::infinity();
  std::vector<double> best_point;  // structurals and logicals
};

// Exhaustive vertex enumeration: every choice of basic columns, every
// assignment of the nonbasic columns to their finite bounds. Only sane for
// tiny LPs; the regions built by the tests are pointed (all structurals
// bounded below), so feasibility of the LP equals feasibility of a vertex.
inline BruteResult brute_force_lp(const lpcc::LpModel& model) {
  const ColumnForm f = column_form(model);
  BruteResult out;
  std::vector<int> pick(f.nrows);
  std::vector<double> point(f.ntot);

  auto try_basis = [&](const std::vector<int>& basics) {
    std::vector<char> is_basic(f.ntot, 0);
    for (int j : basics) is_basic[j] = 1;
    std::vector<int> nonbasics;
    for (int j = 0; j < f.ntot; ++j) {
      if (!is_basic[j]) nonbasics.push_back(j);
    }
    // Enumerate nonbasic bound assignments; skip sets with a doubly
    // unbounded nonbasic column (cannot sit at a vertex).
    std::vector<std::vector<double>> choices(nonbasics.size());
    for (std::size_t idx = 0; idx < nonbasics.size(); ++idx) {
      const int j = nonbasics[idx];
      if (std::isfinite(f.lo[j])) choices[idx].push_back(f.lo[j]);
      if (std::isfinite(f.hi[j]) && f.hi[j] != f.lo[j]) {
        choices[idx].push_back(f.hi[j]);
      }
      if (choices[idx].empty()) return;
    }
    std::vector<std::size_t> sel(nonbasics.size(), 0);
    while (true) {
      std::vector<double> resid = f.rhs;
      for (std::size_t idx = 0; idx < nonbasics.size(); ++idx) {
        const int j = nonbasics[idx];
        const double v = choices[idx][sel[idx]];
        point[j] = v;
        if (v != 0.0) {
          for (int r = 0; r < f.nrows; ++r) resid[r] -= f.cols[j][r] * v;
        }
      }
      Dense basis_mat(f.nrows, std::vector<double>(f.nrows));
      for (int bcol = 0; bcol < f.nrows; ++bcol) {
        for (int r = 0; r < f.nrows; ++r) {
          basis_mat[r][bcol] = f.cols[basics[bcol]][r];
        }
      }
      std::vector<double> xb = resid;
      if (solve_dense(basis_mat, xb)) {
        bool ok = true;
        for (int bcol = 0; bcol < f.nrows && ok; ++bcol) {
          const int j = basics[bcol];
          point[j] = xb[bcol];
          ok = xb[bcol] >= f.lo[j] - 1e-7 && xb[bcol] <= f.hi[j] + 1e-7;
        }
        if (ok) {
          double obj = 0.0;
          for (int j = 0; j < f.ntot; ++j) obj += f.cost[j] * point[j];
          out.feasible = true;
          if (obj < out.best_obj) {
            out.best_obj = obj;
            out.best_point = point;
          }
        }
      }
      std::size_t idx = 0;
      while (idx < sel.size() && ++sel[idx] == choices[idx].size()) {
        sel[idx++] = 0;
      }
      if (idx == sel.size()) break;
    }
  };

  // All (ntot choose nrows) basic sets via a manual combination walk.
  std::vector<int> comb(f.nrows);
  for (int i = 0; i < f.nrows; ++i) comb[i] = i;
  if (f.nrows == 0) {
    try_basis({});
    return out;
  }
  while (true) {
    try_basis(comb);
    int i = f.nrows - 1;
    while (i >= 0 && comb[i] == f.ntot - f.nrows + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < f.nrows; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

// Random small LP with mixed senses, finite lower bounds everywhere, and a
// sprinkling of finite uppers. Produces feasible, infeasible and unbounded
// cases alike.
inline lpcc::LpModel random_lp(lpcc::Rng& rng, int max_vars = 6,
                               int max_rows = 5) {
  lpcc::LpModel model;
  const int nvars = 1 + static_cast<int>(rng.below(max_vars));
  const int nrows = static_cast<int>(rng.below(max_rows + 1));
  for (int j = 0; j < nvars; ++j) {
    const double up =
        rng.bernoulli(0.4) ? static_cast<double>(rng.below(6)) : lpcc::kInf;
    model.add_var(static_cast<double>(rng.int_range(-5, 5)), 0.0, up);
  }
  for (int r = 0; r < nrows; ++r) {
    const lpcc::RowSense sense = rng.bernoulli(0.15) ? lpcc::RowSense::Eq
                                 : rng.bernoulli(0.5) ? lpcc::RowSense::Ge
                                                      : lpcc::RowSense::Le;
    const int row = model.add_row(sense, static_cast<double>(rng.int_range(-4, 4)));
    for (int j = 0; j < nvars; ++j) {
      if (rng.bernoulli(0.6)) {
        const double v = static_cast<double>(rng.int_range(-4, 4));
        if (v != 0.0) model.constraints.add(row, j, v);
      }
    }
  }
  model.validate();
  return model;
}

// Residual feasibility of a structural point against the row senses.
inline double max_row_violation(const lpcc::LpModel& model,
                                const std::vector<double>& x) {
  double worst = 0.0;
  std::vector<double> ax(model.num_rows(), 0.0);
  for (const lpcc::Triplet& t : model.constraints.triplets()) {
    ax[t.row] += t.value * x[t.col];
  }
  for (int r = 0; r < model.num_rows(); ++r) {
    const double gap = ax[r] - model.rhs[r];
    switch (model.senses[r]) {
      case lpcc::RowSense::Ge: worst = std::max(worst, -gap); break;
      case lpcc::RowSense::Le: worst = std::max(worst, gap); break;
      case lpcc::RowSense::Eq: worst = std::max(worst, std::fabs(gap)); break;
    }
  }
  for (int j = 0; j < model.num_vars(); ++j) {
    worst = std::max(worst, model.lower[j] - x[j]);
    worst = std::max(worst, x[j] - model.upper[j]);
  }
  return worst;
}

// Checks an unbounded ray: recession direction for every row and bound,
// strictly negative objective slope.
inline bool valid_ray(const lpcc::LpModel& model,
                      const std::vector<double>& ray, double tol = 1e-7) {
  std::vector<double> ar(model.num_rows(), 0.0);
  for (const lpcc::Triplet& t : model.constraints.triplets()) {
    ar[t.row] += t.value * ray[t.col];
  }
  for (int r = 0; r < model.num_rows(); ++r) {
    switch (model.senses[r]) {
      case lpcc::RowSense::Ge:
        if (ar[r] < -tol) return false;
        break;
      case lpcc::RowSense::Le:
        if (ar[r] > tol) return false;
        break;
      case lpcc::RowSense::Eq:
        if (std::fabs(ar[r]) > tol) return false;
        break;
    }
  }
  double slope = 0.0;
  for (int j = 0; j < model.num_vars(); ++j) {
    if (ray[j] < -tol && !std::isfinite(model.lower[j])) {
      // fine: unbounded below in that coordinate
    } else if (ray[j] < -tol && std::isfinite(model.lower[j])) {
      return false;
    }
    if (ray[j] > tol && std::isfinite(model.upper[j])) return false;
    slope += model.objective[j] * ray[j];
  }
  return slope < -tol;
}

inline Dense to_dense2(const lpcc::SparseMatrix& m) {
  Dense out(m.nrows(), std::vector<double>(m.ncols(), 0.0));
  for (const lpcc::Triplet& t : m.triplets()) out[t.row][t.col] = t.value;
  return out;
}

// Rank of a symmetric positive semidefinite matrix by pivoted Cholesky.
inline int psd_rank(Dense a, double tol = 1e-8) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::fabs(a[i][i]));
  int rank = 0;
  for (int step = 0; step < n; ++step) {
    int piv = step;
    for (int i = step + 1; i < n; ++i) {
      if (a[perm[i]][perm[i]] > a[perm[piv]][perm[piv]]) piv = i;
    }
    std::swap(perm[step], perm[piv]);
    const int p = perm[step];
    const double d = a[p][p];
    if (d <= tol * scale) break;
    ++rank;
    const double root = std::sqrt(d);
    for (int i = step + 1; i < n; ++i) {
      a[perm[i]][p] /= root;
      a[p][perm[i]] = a[perm[i]][p];
    }
    a[p][p] = root;
    for (int i = step + 1; i < n; ++i) {
      for (int j = step + 1; j <= i; ++j) {
        a[perm[i]][perm[j]] -= a[perm[i]][p] * a[perm[j]][p];
        a[perm[j]][perm[i]] = a[perm[i]][perm[j]];
      }
    }
  }
  return rank;
}

}  // namespace lpcc_test

// SPDX-License-Identifier: Apache-2.0

#include "lpcc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lpcc/errors.hpp"
#include "lpcc/rng.hpp"

namespace lpcc {

namespace {

std::vector<double> int_vector(Rng& rng, int len, int lo, int hi) {
  std::vector<double> v(len);
  for (int i = 0; i < len; ++i) {
    v[i] = static_cast<double>(rng.int_range(lo, hi));
  }
  return v;
}

// Row-major Bernoulli(p) sparsity mask with integer values in [lo, hi].
// The value draw happens only for hit entries, so the stream layout is
// (mask, value?) per cell.
SparseMatrix int_matrix(Rng& rng, int nrows, int ncols, double p, int lo,
                        int hi) {
  SparseMatrix mat(nrows, ncols);
  for (int r = 0; r < nrows; ++r) {
    for (int c = 0; c < ncols; ++c) {
      if (!rng.bernoulli(p)) continue;
      const double v = static_cast<double>(rng.int_range(lo, hi));
      if (v != 0.0) mat.add(r, c, v);
    }
  }
  return mat;
}

std::vector<double> dense_times(const std::vector<double>& rowmajor, int nrows,
                                int ncols, const std::vector<double>& x) {
  std::vector<double> out(nrows, 0.0);
  for (int r = 0; r < nrows; ++r) {
    double s = 0.0;
    for (int c = 0; c < ncols; ++c) {
      s += rowmajor[static_cast<std::size_t>(r) * ncols + c] * x[c];
    }
    out[r] = s;
  }
  return out;
}

}  // namespace

GeneratedInstance gen_random_lpcc(const RandomLpccConfig& cfg) {
  if (cfg.n < 0 || cfg.m < 0 || cfg.k < 0 || cfg.rank_m < 0 ||
      cfg.rank_m > cfg.m || cfg.dense <= 0.0 || cfg.dense > 100.0) {
    throw DimensionError("bad random LPCC config");
  }
  Rng rng(cfg.seed);
  const double p = cfg.dense / 100.0;

  const std::vector<double> xbar = int_vector(rng, cfg.n, 0, 10);
  std::vector<double> ybar(cfg.m, 0.0);
  for (int i = 0; i < cfg.m; ++i) {
    if (i < cfg.m / 3) ybar[i] = static_cast<double>(rng.int_range(0, 10));
  }

  LpccInstance inst;
  inst.n = cfg.n;
  inst.m = cfg.m;
  inst.k = cfg.k;
  inst.c = int_vector(rng, cfg.n, 0, 10);
  inst.d = int_vector(rng, cfg.m, 0, 10);
  inst.A = int_matrix(rng, cfg.k, cfg.n, p, -5, 6);
  inst.B = int_matrix(rng, cfg.k, cfg.m, p, -5, 6);
  inst.N = int_matrix(rng, cfg.m, cfg.n, p, -5, 6);

  // M = L L^T + (dM - dM^T): PSD symmetric part of rank <= rank_m plus a
  // skew part, assembled densely then re-sparsified.
  const SparseMatrix lfac = int_matrix(rng, cfg.m, cfg.rank_m, p, -5, 6);
  std::vector<double> mdense(static_cast<std::size_t>(cfg.m) * cfg.m, 0.0);
  {
    const std::vector<double> ld = lfac.to_dense();
    for (int i = 0; i < cfg.m; ++i) {
      for (int j = 0; j < cfg.m; ++j) {
        double s = 0.0;
        for (int t = 0; t < cfg.rank_m; ++t) {
          s += ld[static_cast<std::size_t>(i) * cfg.rank_m + t] *
               ld[static_cast<std::size_t>(j) * cfg.rank_m + t];
        }
        mdense[static_cast<std::size_t>(i) * cfg.m + j] = s;
      }
    }
    // Upper triangle of dM, diagonal included (it cancels in dM - dM^T).
    for (int i = 0; i < cfg.m; ++i) {
      for (int j = i; j < cfg.m; ++j) {
        const double v = static_cast<double>(rng.int_range(-2, 2));
        if (i == j || v == 0.0) continue;
        mdense[static_cast<std::size_t>(i) * cfg.m + j] += v;
        mdense[static_cast<std::size_t>(j) * cfg.m + i] -= v;
      }
    }
  }
  inst.M = SparseMatrix::from_dense(cfg.m, cfg.m, mdense);

  const std::vector<double> delta_b = int_vector(rng, cfg.k, 1, 11);
  std::vector<double> ax(cfg.k, 0.0), by(cfg.k, 0.0);
  inst.A.multiply(xbar, ax);
  inst.B.multiply(ybar, by);
  inst.b.resize(cfg.k);
  for (int i = 0; i < cfg.k; ++i) inst.b[i] = ax[i] + by[i] - delta_b[i];

  std::vector<double> delta_q(cfg.m, 0.0);
  for (int i = 0; i < cfg.m; ++i) {
    if (i >= 2 * cfg.m / 3) {
      delta_q[i] = static_cast<double>(rng.int_range(1, 11));
    }
  }
  std::vector<double> nx(cfg.m, 0.0), my(cfg.m, 0.0);
  inst.N.multiply(xbar, nx);
  inst.M.multiply(ybar, my);
  inst.q.resize(cfg.m);
  for (int i = 0; i < cfg.m; ++i) inst.q[i] = -nx[i] - my[i] + delta_q[i];

  inst.validate();
  GeneratedInstance out;
  out.instance = std::move(inst);
  LpccPoint wit;
  wit.x = xbar;
  wit.y = ybar;
  wit.w = delta_q;  // q + N xbar + M ybar by construction
  wit.objective = objective_value(out.instance, wit.x, wit.y);
  out.witness = std::move(wit);
  return out;
}

GeneratedInstance gen_bilevel(const BilevelConfig& cfg) {
  if (cfg.dim_v <= 0 || cfg.dim_x != cfg.dim_v || cfg.dim_b < 0 ||
      cfg.dim_g < 0 || cfg.rank_q < 0 || cfg.rank_q > cfg.dim_x) {
    throw DimensionError("bad bilevel config");
  }
  Rng rng(cfg.seed);
  const int dv = cfg.dim_v;
  const int dx = cfg.dim_x;
  const int db = cfg.dim_b;
  const int dg = cfg.dim_g;

  // Draw order follows the data description: b, c, d, g, A, B, H, then L.
  std::vector<double> bvec(db), cvec(dx), dvec(dv), gvec(dg);
  for (double& v : bvec) v = rng.real01();
  for (double& v : cvec) v = rng.real01();
  for (double& v : dvec) v = rng.real01();
  for (double& v : gvec) v = rng.real01();
  std::vector<double> amat(static_cast<std::size_t>(db) * dx);
  std::vector<double> bmat(static_cast<std::size_t>(db) * dv);
  std::vector<double> hmat(static_cast<std::size_t>(dg) * dx);
  for (double& v : amat) v = rng.real01();
  for (double& v : bmat) v = rng.real01();
  for (double& v : hmat) v = rng.real01();
  std::vector<double> lmat(static_cast<std::size_t>(dx) * cfg.rank_q);
  for (double& v : lmat) v = rng.real_range(-1.0, 1.0);
  std::vector<double> qmat(static_cast<std::size_t>(dx) * dx, 0.0);
  for (int i = 0; i < dx; ++i) {
    for (int j = 0; j < dx; ++j) {
      double s = 0.0;
      for (int t = 0; t < cfg.rank_q; ++t) {
        s += lmat[static_cast<std::size_t>(i) * cfg.rank_q + t] *
             lmat[static_cast<std::size_t>(j) * cfg.rank_q + t];
      }
      qmat[static_cast<std::size_t>(i) * dx + j] = s;
    }
  }

  // Standard form: x_lpcc = (x, v), y_lpcc = (lambda, y).
  //   pairs   [0, dx):       0 <= lambda_i perp x_i >= 0
  //   pairs   [dx, dx+dg):   0 <= y_j     perp (H x - g)_j >= 0
  //   rows    [0, db):       A x + B v >= b
  //   rows    [db, db+2dx):  +-(Q x + v - lambda - H^T y) >= 0
  //   rows    [db+2dx, +dv): -v >= -1
  LpccInstance inst;
  inst.n = dx + dv;
  inst.m = dx + dg;
  inst.k = db + 2 * dx + dv;
  inst.c.resize(inst.n);
  for (int j = 0; j < dx; ++j) inst.c[j] = cvec[j];
  for (int j = 0; j < dv; ++j) inst.c[dx + j] = dvec[j];
  inst.d.assign(inst.m, 0.0);
  inst.A = SparseMatrix(inst.k, inst.n);
  inst.B = SparseMatrix(inst.k, inst.m);
  inst.N = SparseMatrix(inst.m, inst.n);
  inst.M = SparseMatrix(inst.m, inst.m);
  inst.b.assign(inst.k, 0.0);
  inst.q.assign(inst.m, 0.0);

  for (int r = 0; r < db; ++r) {
    inst.b[r] = bvec[r];
    for (int j = 0; j < dx; ++j) {
      inst.A.add(r, j, amat[static_cast<std::size_t>(r) * dx + j]);
    }
    for (int j = 0; j < dv; ++j) {
      inst.A.add(r, dx + j, bmat[static_cast<std::size_t>(r) * dv + j]);
    }
  }
  for (int i = 0; i < dx; ++i) {
    const int plus = db + i;
    const int minus = db + dx + i;
    for (int j = 0; j < dx; ++j) {
      const double qv = qmat[static_cast<std::size_t>(i) * dx + j];
      if (qv != 0.0) {
        inst.A.add(plus, j, qv);
        inst.A.add(minus, j, -qv);
      }
    }
    inst.A.add(plus, dx + i, 1.0);
    inst.A.add(minus, dx + i, -1.0);
    inst.B.add(plus, i, -1.0);
    inst.B.add(minus, i, 1.0);
    for (int j = 0; j < dg; ++j) {
      const double hv = hmat[static_cast<std::size_t>(j) * dx + i];
      inst.B.add(plus, dx + j, -hv);
      inst.B.add(minus, dx + j, hv);
    }
  }
  for (int j = 0; j < dv; ++j) {
    const int r = db + 2 * dx + j;
    inst.A.add(r, dx + j, -1.0);
    inst.b[r] = -1.0;
  }
  for (int i = 0; i < dx; ++i) inst.N.add(i, i, 1.0);
  for (int j = 0; j < dg; ++j) {
    inst.q[dx + j] = -gvec[j];
    for (int i = 0; i < dx; ++i) {
      inst.N.add(dx + j, i, hmat[static_cast<std::size_t>(j) * dx + i]);
    }
  }

  inst.validate();
  GeneratedInstance out;
  out.instance = std::move(inst);
  return out;
}

GeneratedInstance gen_inverse_qp(const InverseQpConfig& cfg) {
  if (cfg.m_tilde <= 0 || cfg.n_tilde <= 0) {
    throw DimensionError("bad inverse QP config");
  }
  Rng rng(cfg.seed);
  const int mt = cfg.m_tilde;
  const int nt = cfg.n_tilde;

  // Q = F F^T with three nonzeroes per row of F: the diagonal in (0.5, 1)
  // and two entries in (0, 1) at distinct off-diagonal columns.
  std::vector<double> fmat(static_cast<std::size_t>(nt) * nt, 0.0);
  for (int i = 0; i < nt; ++i) {
    fmat[static_cast<std::size_t>(i) * nt + i] = rng.real_range(0.5, 1.0);
    const int offs = std::min(2, nt - 1);
    int first_col = -1;
    for (int t = 0; t < offs; ++t) {
      const int avail = nt - 1 - t;
      int pick = static_cast<int>(rng.below(avail));
      // Map the pick onto columns != i (and != first_col on the second draw).
      int col = -1, seen = 0;
      for (int c = 0; c < nt; ++c) {
        if (c == i || c == first_col) continue;
        if (seen++ == pick) {
          col = c;
          break;
        }
      }
      fmat[static_cast<std::size_t>(i) * nt + col] = rng.real_range(0.0, 1.0);
      if (t == 0) first_col = col;
    }
  }
  std::vector<double> qmat(static_cast<std::size_t>(nt) * nt, 0.0);
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < nt; ++j) {
      double s = 0.0;
      for (int t = 0; t < nt; ++t) {
        s += fmat[static_cast<std::size_t>(i) * nt + t] *
             fmat[static_cast<std::size_t>(j) * nt + t];
      }
      qmat[static_cast<std::size_t>(i) * nt + j] = s;
    }
  }

  // About 10 nonzeroes per row of A, uniform (0,1) values.
  std::vector<double> adense(static_cast<std::size_t>(mt) * nt, 0.0);
  const double pa = std::min(1.0, 10.0 / nt);
  for (int r = 0; r < mt; ++r) {
    for (int c = 0; c < nt; ++c) {
      if (rng.bernoulli(pa)) {
        adense[static_cast<std::size_t>(r) * nt + c] = rng.real_range(0.0, 1.0);
      }
    }
  }

  std::vector<double> xt(nt);
  for (double& v : xt) v = rng.normal();
  std::vector<double> lam_hat(mt), w_hat(mt);
  for (double& v : lam_hat) v = rng.real_range(0.0, 10.0);
  for (double& v : w_hat) v = rng.real_range(0.0, 10.0);
  std::vector<double> lam_t(mt), w_t(mt);
  for (int i = 0; i < mt; ++i) {
    const bool active = rng.bernoulli(0.5);
    lam_t[i] = active ? lam_hat[i] : 0.0;
    w_t[i] = active ? 0.0 : w_hat[i];
  }
  const std::vector<double> axt = dense_times(adense, mt, nt, xt);
  std::vector<double> bt(mt);
  for (int i = 0; i < mt; ++i) bt[i] = axt[i] - w_t[i];
  std::vector<double> ct(nt);
  {
    const std::vector<double> qx = dense_times(qmat, nt, nt, xt);
    for (int j = 0; j < nt; ++j) {
      double s = 0.0;
      for (int i = 0; i < mt; ++i) {
        s += adense[static_cast<std::size_t>(i) * nt + j] * lam_t[i];
      }
      ct[j] = s - qx[j];
    }
  }
  std::vector<double> xbar(nt), bbar(mt), cbar(nt);
  for (int j = 0; j < nt; ++j) xbar[j] = xt[j] + rng.normal();
  for (int i = 0; i < mt; ++i) bbar[i] = bt[i] + rng.normal();
  for (int j = 0; j < nt; ++j) cbar[j] = ct[j] + rng.normal();

  auto max_abs = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double t : v) s = std::max(s, std::fabs(t));
    return s;
  };
  const double ux = 10.0 * max_abs(xt);
  const double ub = 10.0 * max_abs(bt);
  const double uc = 10.0 * max_abs(ct);
  const double ul = 10.0 * max_abs(lam_t);

  // Standard form after shifting the boxed variables into [0, 2u]:
  //   x_lpcc = (x', b', c', zx, zb, zc) with x = x' - ux, etc.
  //   y_lpcc = lambda;  w = A x - b = A x' - b' + (ub - ux * A 1).
  // Rows: +-stationarity (2 nt), six abs-value blocks (2 nt + 2 mt + 2 nt),
  // box ceilings (nt + mt + nt), lambda ceiling (mt).
  const int off_x = 0;
  const int off_b = nt;
  const int off_c = nt + mt;
  const int off_zx = 2 * nt + mt;
  const int off_zb = 3 * nt + mt;
  const int off_zc = 3 * nt + 2 * mt;

  LpccInstance inst;
  inst.n = 4 * nt + 2 * mt;
  inst.m = mt;
  inst.k = 8 * nt + 4 * mt;
  inst.c.assign(inst.n, 0.0);
  for (int j = 0; j < nt; ++j) inst.c[off_zx + j] = 1.0;
  for (int i = 0; i < mt; ++i) inst.c[off_zb + i] = 1.0;
  for (int j = 0; j < nt; ++j) inst.c[off_zc + j] = 1.0;
  inst.d.assign(mt, 0.0);
  inst.A = SparseMatrix(inst.k, inst.n);
  inst.B = SparseMatrix(inst.k, inst.m);
  inst.N = SparseMatrix(inst.m, inst.n);
  inst.M = SparseMatrix(inst.m, inst.m);
  inst.b.assign(inst.k, 0.0);
  inst.q.assign(inst.m, 0.0);

  int row = 0;
  // Q x + c - A^T lambda = 0, shifted rhs = Q (ux 1) + uc 1 per sign.
  for (int sign = 0; sign < 2; ++sign) {
    const double sg = sign == 0 ? 1.0 : -1.0;
    for (int i = 0; i < nt; ++i) {
      double qrow_sum = 0.0;
      for (int j = 0; j < nt; ++j) {
        const double qv = qmat[static_cast<std::size_t>(i) * nt + j];
        qrow_sum += qv;
        if (qv != 0.0) inst.A.add(row, off_x + j, sg * qv);
      }
      inst.A.add(row, off_c + i, sg);
      for (int r = 0; r < mt; ++r) {
        const double av = adense[static_cast<std::size_t>(r) * nt + i];
        if (av != 0.0) inst.B.add(row, r, -sg * av);
      }
      inst.b[row] = sg * (ux * qrow_sum + uc);
      ++row;
    }
  }
  // x + zx >= xbar and -x + zx >= -xbar, in shifted coordinates.
  for (int j = 0; j < nt; ++j, ++row) {
    inst.A.add(row, off_x + j, 1.0);
    inst.A.add(row, off_zx + j, 1.0);
    inst.b[row] = xbar[j] + ux;
  }
  for (int j = 0; j < nt; ++j, ++row) {
    inst.A.add(row, off_x + j, -1.0);
    inst.A.add(row, off_zx + j, 1.0);
    inst.b[row] = -xbar[j] - ux;
  }
  for (int i = 0; i < mt; ++i, ++row) {
    inst.A.add(row, off_b + i, 1.0);
    inst.A.add(row, off_zb + i, 1.0);
    inst.b[row] = bbar[i] + ub;
  }
  for (int i = 0; i < mt; ++i, ++row) {
    inst.A.add(row, off_b + i, -1.0);
    inst.A.add(row, off_zb + i, 1.0);
    inst.b[row] = -bbar[i] - ub;
  }
  for (int j = 0; j < nt; ++j, ++row) {
    inst.A.add(row, off_c + j, 1.0);
    inst.A.add(row, off_zc + j, 1.0);
    inst.b[row] = cbar[j] + uc;
  }
  for (int j = 0; j < nt; ++j, ++row) {
    inst.A.add(row, off_c + j, -1.0);
    inst.A.add(row, off_zc + j, 1.0);
    inst.b[row] = -cbar[j] - uc;
  }
  // Box ceilings x' <= 2 ux, b' <= 2 ub, c' <= 2 uc as >= rows.
  for (int j = 0; j < nt; ++j, ++row) {
    inst.A.add(row, off_x + j, -1.0);
    inst.b[row] = -2.0 * ux;
  }
  for (int i = 0; i < mt; ++i, ++row) {
    inst.A.add(row, off_b + i, -1.0);
    inst.b[row] = -2.0 * ub;
  }
  for (int j = 0; j < nt; ++j, ++row) {
    inst.A.add(row, off_c + j, -1.0);
    inst.b[row] = -2.0 * uc;
  }
  // lambda <= ul.
  for (int i = 0; i < mt; ++i, ++row) {
    inst.B.add(row, i, -1.0);
    inst.b[row] = -ul;
  }

  for (int i = 0; i < mt; ++i) {
    double arow_sum = 0.0;
    for (int j = 0; j < nt; ++j) {
      const double av = adense[static_cast<std::size_t>(i) * nt + j];
      arow_sum += av;
      if (av != 0.0) inst.N.add(i, off_x + j, av);
    }
    inst.N.add(i, off_b + i, -1.0);
    inst.q[i] = ub - ux * arow_sum;
  }

  inst.validate();
  GeneratedInstance out;
  out.instance = std::move(inst);

  LpccPoint wit;
  wit.x.assign(inst.n, 0.0);
  for (int j = 0; j < nt; ++j) {
    wit.x[off_x + j] = xt[j] + ux;
    wit.x[off_c + j] = ct[j] + uc;
    wit.x[off_zx + j] = std::fabs(xt[j] - xbar[j]);
    wit.x[off_zc + j] = std::fabs(ct[j] - cbar[j]);
  }
  for (int i = 0; i < mt; ++i) {
    wit.x[off_b + i] = bt[i] + ub;
    wit.x[off_zb + i] = std::fabs(bt[i] - bbar[i]);
  }
  wit.y = lam_t;
  wit.w = w_t;
  wit.objective = objective_value(out.instance, wit.x, wit.y);
  out.witness = std::move(wit);
  return out;
}

}  // namespace lpcc

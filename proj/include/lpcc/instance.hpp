// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpcc/lp_model.hpp"
#include "lpcc/sparse.hpp"

namespace lpcc {

// Linear program with complementarity constraints in the standard shape
//
//   min  c^T x + d^T y
//   s.t. A x + B y >= b
//        x >= 0
//        0 <= y  complementary to  w := q + N x + M y >= 0
//
// n = dim(x), m = number of complementarity pairs, k = rows of A.
struct LpccInstance {
  int n = 0;
  int m = 0;
  int k = 0;
  std::vector<double> c;  // n
  std::vector<double> d;  // m
  std::vector<double> b;  // k
  std::vector<double> q;  // m
  SparseMatrix A;         // k x n
  SparseMatrix B;         // k x m
  SparseMatrix N;         // m x n
  SparseMatrix M;         // m x m

  void validate() const;

  // Variable ids in every LP built from this instance.
  int x_var(int j) const { return j; }
  int y_var(int i) const { return n + i; }
  int w_var(int i) const { return n + m + i; }
  int num_lp_vars() const { return n + 2 * m; }
  // Row ids: [0, k) are the A|B rows, [k, k+m) the w-link equalities.
  int wlink_row(int i) const { return k + i; }
};

// Branch / piece selector: z[i] == 0 forces y_i = 0, z[i] == 1 forces w_i = 0.
using Assignment = std::vector<std::uint8_t>;

struct LpccPoint {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> w;
  double objective = 0.0;
};

// Known upper bounds per complementarity side (+inf when unknown) plus an
// optional incumbent objective cutoff.
struct BoundBox {
  std::vector<double> u_y;
  std::vector<double> u_w;
  double ub_obj = kInf;

  static BoundBox unknown(int m) {
    return BoundBox{std::vector<double>(m, kInf), std::vector<double>(m, kInf),
                    kInf};
  }
};

enum class OutcomeKind : unsigned char { Infeasible, UnboundedBelow, Optimal };

// Certified unbounded direction: base is feasible, base + t*ray stays
// feasible and complementary for all t >= 0, and the ray's objective slope
// (stored in ray.objective) is negative.
struct UnboundedCertificate {
  LpccPoint base;
  LpccPoint ray;
};

struct Outcome {
  OutcomeKind kind = OutcomeKind::Infeasible;
  std::optional<LpccPoint> point;
  std::optional<UnboundedCertificate> certificate;
  double lower_bound = -kInf;
  long nodes = 0;
};

// Objective value restriction lb <= c^T x + d^T y <= ub appended as two rows.
struct ObjectiveWindow {
  double lo = -kInf;
  double hi = kInf;
};

// LP relaxation over (x, y, w): the A|B rows, then the m w-link equalities
// N x + M y - w = -q, all variables >= 0.
LpModel build_relaxation(const LpccInstance& inst);

// Relaxation plus upper bound 0 on the side selected by z (y_i when
// z_i == 0, w_i when z_i == 1).
LpModel build_piece_lp(const LpccInstance& inst, const Assignment& z);

// Relaxation with objective sum over forced sides ((1-z)^T y + z^T w); the
// optional window appends its two rows after the w-links.  Optimal value 0
// exactly when the piece selected by z is feasible.
LpModel build_feasibility_gap_lp(const LpccInstance& inst, const Assignment& z,
                                 const ObjectiveWindow* window = nullptr);

double objective_value(const LpccInstance& inst, const std::vector<double>& x,
                       const std::vector<double>& y);

// Builds the (x, y, w) point stored in an LP solution over this instance's
// variable layout; the objective is recomputed from c and d.
LpccPoint point_from_solution(const LpccInstance& inst, const LpSolution& sol);

// Feasibility including complementarity.  Row residuals, the w-link and
// nonnegativity are tested relative to the instance's data scale
// (max of 1, |b|_inf, |q|_inf); complementarity is the absolute test
// min(y_i, w_i) <= tol.
bool check_feasible(const LpccInstance& inst, const LpccPoint& pt,
                    double tol = 1e-6);

// (ub - lb) / max(1, |lb|); +inf when either bound is infinite.
double relative_gap(double ub, double lb);

// ---- serialization (instance_io.cpp) ----

// Plain-text LPCC1 format: header "LPCC1 n m k", dense sections c d b q,
// triplet sections A B N M.  Reals carry 17 significant digits so values
// round-trip exactly.
LpccInstance read_instance(const std::string& path);
void write_instance(const std::string& path, const LpccInstance& inst);

// Mixed-integer reformulation with binaries z and the usual big-M rows
// y_i <= uy_i z_i, 0 <= q + N x + M y <= uw_i (1 - z_i), written as a
// CPLEX-style LP file.  Throws MissingBounds unless every pair has finite
// bounds in box.
void export_bigm_mip(const std::string& path, const LpccInstance& inst,
                     const BoundBox& box);

}  // namespace lpcc

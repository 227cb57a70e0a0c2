// SPDX-License-Identifier: Apache-2.0
//
// Seeded instance generators for three problem families.  All sampling is
// fully pinned (one RNG stream per instance, fixed draw order, row-major
// within matrices), so a config is a complete description of the instance:
// the same seed yields byte-identical files on any platform.

#pragma once

#include <cstdint>
#include <optional>

#include "lpcc/instance.hpp"

namespace lpcc {

struct GeneratedInstance {
  LpccInstance instance;
  // A complementarity-feasible point by construction, when the family
  // provides one (random and inverse-QP families do, bilevel does not).
  std::optional<LpccPoint> witness;
};

// Random LPCC: integer data, a planted feasible point (x-bar, y-bar), and
// M = L L^T plus a skew part, so the symmetric part of M is PSD with rank
// at most rank_m.  dense is a percentage in (0, 100]: each matrix entry is
// nonzero with probability dense/100, its value an integer from the range
// stated for the section.
struct RandomLpccConfig {
  int n = 0;
  int m = 0;
  int k = 0;
  int rank_m = 0;
  double dense = 100.0;  // percentage
  std::uint64_t seed = 0;
};

GeneratedInstance gen_random_lpcc(const RandomLpccConfig& cfg);

// Two-stage problem, first stage v, second stage x solving a convex QP
// parametrized by v.  The stationarity system of the inner QP turns the
// whole problem into an LPCC over (x, v) with multipliers (lambda, y):
//
//   min  c^T x + d^T v
//   s.t. A x + B v >= b,   Q x + v - H^T y - lambda = 0,   0 <= v <= 1
//        0 <= lambda perp x >= 0,    0 <= y perp H x - g >= 0
//
// Dimensions map to m = dim_g + dim_v, n = 2 dim_v, k = dim_b + 3 dim_v.
// Data uniform in (0,1), Q = L L^T with L uniform in (-1,1), u = 1.
struct BilevelConfig {
  int dim_v = 0;
  int dim_x = 0;  // must equal dim_v
  int dim_b = 0;
  int dim_g = 0;
  int rank_q = 0;
  std::uint64_t seed = 0;
};

GeneratedInstance gen_bilevel(const BilevelConfig& cfg);

// Inverse QP: recover (x, b, c) near noisy observations subject to x
// solving min 1/2 x^T Q x + c^T x over A x >= b.  The KKT system gives one
// complementarity family 0 <= lambda perp A x - b >= 0 (m_tilde pairs) and
// an L1 objective linearized through z variables.  Box bounds from the
// planted solution shift every boxed variable into [0, 2u], keeping the
// standard nonnegative form; the planted point itself is the witness.
struct InverseQpConfig {
  int m_tilde = 0;
  int n_tilde = 0;
  std::uint64_t seed = 0;
};

GeneratedInstance gen_inverse_qp(const InverseQpConfig& cfg);

}  // namespace lpcc

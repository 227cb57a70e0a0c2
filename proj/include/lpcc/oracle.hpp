// SPDX-License-Identifier: Apache-2.0
//
// Reference solver by exhaustive piece enumeration.  A complementarity
// problem with m pairs splits into 2^m linear pieces; solving every piece
// and aggregating gives ground truth for small instances.  Exponential by
// design; used by tests and for --exact runs, never by the search itself.

#pragma once

#include "lpcc/instance.hpp"

namespace lpcc {

// Solves by enumerating all 2^m pieces in ascending bitmask order (bit i of
// the mask is z_i).  Outcomes:
//   - any piece unbounded: UnboundedBelow with a certificate from the first
//     such piece,
//   - otherwise the best finite piece optimum (earliest mask wins ties),
//   - Infeasible when no piece is feasible.
// Throws DimensionError when m exceeds max_m.
Outcome enumerate_pieces(const LpccInstance& inst, int max_m = 20);

// Independent validity check of an unbounded certificate: the base point is
// feasible, base + t * ray stays feasible and complementary for every
// t >= 0, and the slope stored in ray.objective is negative and matches
// c^T ray.x + d^T ray.y.
bool verify_certificate(const LpccInstance& inst,
                        const UnboundedCertificate& cert, double tol = 1e-6);

}  // namespace lpcc

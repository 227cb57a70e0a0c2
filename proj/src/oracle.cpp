// SPDX-License-Identifier: Apache-2.0

#include "lpcc/oracle.hpp"

#include <cmath>
#include <string>

#include "lpcc/errors.hpp"
#include "lpcc/simplex.hpp"

namespace lpcc {

Outcome enumerate_pieces(const LpccInstance& inst, int max_m) {
  inst.validate();
  if (inst.m > max_m) {
    throw DimensionError("piece enumeration over " + std::to_string(inst.m) +
                         " pairs exceeds the cap of " + std::to_string(max_m));
  }

  SimplexSolver solver(build_relaxation(inst));
  Outcome out;
  out.kind = OutcomeKind::Infeasible;
  out.lower_bound = kInf;

  Basis warm;
  const std::uint64_t pieces = std::uint64_t{1} << inst.m;
  for (std::uint64_t mask = 0; mask < pieces; ++mask) {
    for (int i = 0; i < inst.m; ++i) {
      const bool w_side = (mask >> i) & 1;
      solver.set_var_bounds(inst.y_var(i), 0.0, w_side ? kInf : 0.0);
      solver.set_var_bounds(inst.w_var(i), 0.0, w_side ? 0.0 : kInf);
    }
    const LpSolution sol = solver.solve(warm.empty() ? nullptr : &warm);
    warm = sol.basis;
    if (sol.status == LpStatus::Infeasible) continue;

    if (sol.status == LpStatus::UnboundedBelow) {
      UnboundedCertificate cert;
      cert.base = point_from_solution(inst, sol);
      cert.ray.x.assign(sol.ray.begin(), sol.ray.begin() + inst.n);
      cert.ray.y.assign(sol.ray.begin() + inst.n,
                        sol.ray.begin() + inst.n + inst.m);
      cert.ray.w.assign(sol.ray.begin() + inst.n + inst.m,
                        sol.ray.begin() + inst.n + 2 * inst.m);
      cert.ray.objective = objective_value(inst, cert.ray.x, cert.ray.y);
      out.kind = OutcomeKind::UnboundedBelow;
      out.certificate = std::move(cert);
      out.point.reset();
      out.lower_bound = -kInf;
      return out;
    }

    if (out.kind == OutcomeKind::Infeasible || sol.objective < out.lower_bound) {
      out.kind = OutcomeKind::Optimal;
      out.lower_bound = sol.objective;
      out.point = point_from_solution(inst, sol);
    }
  }

  if (out.kind == OutcomeKind::Infeasible) out.lower_bound = kInf;
  return out;
}

bool verify_certificate(const LpccInstance& inst,
                        const UnboundedCertificate& cert, double tol) {
  if (!check_feasible(inst, cert.base, tol)) return false;
  const LpccPoint& r = cert.ray;
  if (static_cast<int>(r.x.size()) != inst.n ||
      static_cast<int>(r.y.size()) != inst.m ||
      static_cast<int>(r.w.size()) != inst.m) {
    return false;
  }

  // Recession direction: nonnegative, A|B rows nonnegative, w-link exact.
  for (double v : r.x) {
    if (v < -tol) return false;
  }
  for (double v : r.y) {
    if (v < -tol) return false;
  }
  for (double v : r.w) {
    if (v < -tol) return false;
  }
  std::vector<double> ax(inst.k, 0.0), by(inst.k, 0.0);
  inst.A.multiply(r.x, ax);
  inst.B.multiply(r.y, by);
  for (int i = 0; i < inst.k; ++i) {
    if (ax[i] + by[i] < -tol) return false;
  }
  std::vector<double> nx(inst.m, 0.0), my(inst.m, 0.0);
  inst.N.multiply(r.x, nx);
  inst.M.multiply(r.y, my);
  for (int i = 0; i < inst.m; ++i) {
    if (std::fabs(nx[i] + my[i] - r.w[i]) > tol) return false;
  }

  // Complementarity along the whole half line: each pair keeps one side at
  // zero both in the base point and in the direction.
  for (int i = 0; i < inst.m; ++i) {
    const bool y_stays_zero =
        std::fabs(cert.base.y[i]) <= tol && std::fabs(r.y[i]) <= tol;
    const bool w_stays_zero =
        std::fabs(cert.base.w[i]) <= tol && std::fabs(r.w[i]) <= tol;
    if (!y_stays_zero && !w_stays_zero) return false;
  }

  const double slope = objective_value(inst, r.x, r.y);
  if (std::fabs(slope - r.objective) > tol * std::max(1.0, std::fabs(slope))) {
    return false;
  }
  return slope < -tol;
}

}  // namespace lpcc

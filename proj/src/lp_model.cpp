// SPDX-License-Identifier: Apache-2.0

#include "lpcc/lp_model.hpp"

#include <cmath>
#include <string>

#include "lpcc/errors.hpp"
#include "lpcc/simplex.hpp"

namespace lpcc {

int LpModel::add_var(double cost, double lo, double hi) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  SparseMatrix grown(num_rows(), num_vars());
  for (const Triplet& t : constraints.triplets()) {
    grown.add(t.row, t.col, t.value);
  }
  constraints = std::move(grown);
  return num_vars() - 1;
}

int LpModel::add_row(RowSense sense, double rhs_value) {
  senses.push_back(sense);
  rhs.push_back(rhs_value);
  SparseMatrix grown(num_rows(), num_vars());
  for (const Triplet& t : constraints.triplets()) {
    grown.add(t.row, t.col, t.value);
  }
  constraints = std::move(grown);
  return num_rows() - 1;
}

void LpModel::validate() const {
  const int n = num_vars();
  const int r = num_rows();
  if (static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n) {
    throw DimensionError("bound vectors do not match variable count");
  }
  if (static_cast<int>(senses.size()) != r) {
    throw DimensionError("sense vector does not match row count");
  }
  if (constraints.nrows() != r || constraints.ncols() != n) {
    throw DimensionError("constraint matrix is " +
                         std::to_string(constraints.nrows()) + "x" +
                         std::to_string(constraints.ncols()) + ", expected " +
                         std::to_string(r) + "x" + std::to_string(n));
  }
  for (int j = 0; j < n; ++j) {
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j]) {
      throw DimensionError("bad bounds on variable " + std::to_string(j));
    }
    if (!std::isfinite(objective[j])) {
      throw DimensionError("non-finite objective coefficient");
    }
  }
  for (int i = 0; i < r; ++i) {
    if (!std::isfinite(rhs[i])) {
      throw DimensionError("non-finite right-hand side");
    }
  }
  constraints.validate();
}

int LpSolution::num_structural() const {
  return static_cast<int>(x.size());
}

int LpSolution::num_rows() const {
  return static_cast<int>(basis.status.size()) - num_structural();
}

VarStatus LpSolution::var_status(int id) const {
  return basis.status.at(static_cast<std::size_t>(id));
}

double LpSolution::var_value(int id) const {
  return simplex_detail::snapshot_value(*this, id);
}

bool LpSolution::is_basic(int id) const {
  return var_status(id) == VarStatus::Basic;
}

}  // namespace lpcc

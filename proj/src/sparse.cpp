// SPDX-License-Identifier: Apache-2.0

#include "lpcc/sparse.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "lpcc/errors.hpp"

namespace lpcc {

SparseMatrix::SparseMatrix(int nrows, int ncols)
    : nrows_(nrows), ncols_(ncols) {
  if (nrows < 0 || ncols < 0) {
    throw DimensionError("negative matrix dimension");
  }
}

void SparseMatrix::add(int row, int col, double value) {
  if (row < 0 || row >= nrows_ || col < 0 || col >= ncols_) {
    throw DimensionError("entry (" + std::to_string(row) + "," +
                         std::to_string(col) + ") outside " +
                         std::to_string(nrows_) + "x" + std::to_string(ncols_));
  }
  if (!std::isfinite(value)) {
    throw DimensionError("non-finite matrix entry");
  }
  if (value == 0.0) return;
  entries_.push_back({row, col, value});
}

void SparseMatrix::validate() const {
  std::unordered_set<long long> seen;
  seen.reserve(entries_.size() * 2);
  for (const Triplet& t : entries_) {
    const long long key =
        static_cast<long long>(t.row) * (ncols_ > 0 ? ncols_ : 1) + t.col;
    if (!seen.insert(key).second) {
      throw DimensionError("duplicate entry at (" + std::to_string(t.row) +
                           "," + std::to_string(t.col) + ")");
    }
  }
}

void SparseMatrix::multiply(const std::vector<double>& x,
                            std::vector<double>& out) const {
  out.assign(nrows_, 0.0);
  for (const Triplet& t : entries_) out[t.row] += t.value * x[t.col];
}

void SparseMatrix::multiply_transpose(const std::vector<double>& x,
                                      std::vector<double>& out) const {
  out.assign(ncols_, 0.0);
  for (const Triplet& t : entries_) out[t.col] += t.value * x[t.row];
}

double SparseMatrix::row_dot(int row, const std::vector<double>& x) const {
  double s = 0.0;
  for (const Triplet& t : entries_) {
    if (t.row == row) s += t.value * x[t.col];
  }
  return s;
}

std::vector<double> SparseMatrix::to_dense() const {
  std::vector<double> dense(static_cast<std::size_t>(nrows_) * ncols_, 0.0);
  for (const Triplet& t : entries_) {
    dense[static_cast<std::size_t>(t.row) * ncols_ + t.col] += t.value;
  }
  return dense;
}

SparseMatrix SparseMatrix::from_dense(int nrows, int ncols,
                                      const std::vector<double>& dense) {
  SparseMatrix m(nrows, ncols);
  for (int i = 0; i < nrows; ++i) {
    for (int j = 0; j < ncols; ++j) {
      const double v = dense[static_cast<std::size_t>(i) * ncols + j];
      if (v != 0.0) m.add(i, j, v);
    }
  }
  return m;
}

}  // namespace lpcc

// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace lpcc {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Triplet-form sparse matrix.  Entries are kept in insertion order; the
// class enforces index ranges and finite values on insertion and rejects
// duplicate (row, col) pairs in validate().  This is the storage format for
// all instance matrices; the simplex kernel converts to column-major form
// internally.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int nrows, int ncols);

  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Triplet>& triplets() const { return entries_; }

  // Adds one entry.  Throws DimensionError on out-of-range indices or
  // non-finite values.  Exact zeros are dropped.
  void add(int row, int col, double value);

  // Throws DimensionError if any (row, col) pair appears twice.
  void validate() const;

  // out = this * x        (out sized nrows, overwritten)
  void multiply(const std::vector<double>& x, std::vector<double>& out) const;
  // out = this^T * x      (out sized ncols, overwritten)
  void multiply_transpose(const std::vector<double>& x,
                          std::vector<double>& out) const;

  // Row dot product against a dense vector of length ncols.
  double row_dot(int row, const std::vector<double>& x) const;

  // Dense copy, row-major, for small-instance tests and oracles.
  std::vector<double> to_dense() const;

  // Builds from a dense row-major array, dropping exact zeros.
  static SparseMatrix from_dense(int nrows, int ncols,
                                 const std::vector<double>& dense);

 private:
  int nrows_ = 0;
  int ncols_ = 0;
  std::vector<Triplet> entries_;
};

}  // namespace lpcc

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <span>
#include <vector>

namespace polydg {

struct Triplet {
  int row, col;
  double value;
};

// Square sparse matrix in compressed row storage. Built once from a
// triplet list (duplicates summed in deterministic order), immutable after.
class CsrMatrix {
 public:
  CsrMatrix() = default;
  static CsrMatrix from_triplets(int n, std::vector<Triplet> triplets);

  int rows() const { return n_; }
  std::size_t nnz() const { return values_.size(); }

  void multiply(std::span<const double> x, std::span<double> y) const;

  double max_abs() const;
  // max_ij |A_ij - A_ji|; structural zeros count as zero entries.
  double max_asymmetry() const;

  std::span<const int> row_offsets() const { return row_offsets_; }
  std::span<const int> col_indices() const { return col_indices_; }
  std::span<const double> values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<int> row_offsets_;
  std::vector<int> col_indices_;
  std::vector<double> values_;
};

}  // namespace polydg

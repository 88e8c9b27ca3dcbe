// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polydg {

CsrMatrix CsrMatrix::from_triplets(int n, std::vector<Triplet> triplets) {
  for (const Triplet& t : triplets)
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
      throw std::invalid_argument("CsrMatrix: triplet index out of range");

  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  CsrMatrix m;
  m.n_ = n;
  m.row_offsets_.assign(n + 1, 0);
  m.col_indices_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  for (std::size_t i = 0; i < triplets.size();) {
    const int r = triplets[i].row, c = triplets[i].col;
    double v = 0.0;
    while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c)
      v += triplets[i++].value;
    m.col_indices_.push_back(c);
    m.values_.push_back(v);
    ++m.row_offsets_[r + 1];
  }
  for (int r = 0; r < n; ++r) m.row_offsets_[r + 1] += m.row_offsets_[r];
  return m;
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (int r = 0; r < n_; ++r) {
    double s = 0.0;
    for (int i = row_offsets_[r]; i < row_offsets_[r + 1]; ++i)
      s += values_[i] * x[col_indices_[i]];
    y[r] = s;
  }
}

double CsrMatrix::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double CsrMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (int r = 0; r < n_; ++r)
    for (int i = row_offsets_[r]; i < row_offsets_[r + 1]; ++i) {
      const int c = col_indices_[i];
      // Binary search for A(c, r).
      const int lo = row_offsets_[c], hi = row_offsets_[c + 1];
      auto it = std::lower_bound(col_indices_.begin() + lo, col_indices_.begin() + hi, r);
      const double ji = (it != col_indices_.begin() + hi && *it == r)
                            ? values_[static_cast<std::size_t>(it - col_indices_.begin())]
                            : 0.0;
      worst = std::max(worst, std::abs(values_[i] - ji));
    }
  return worst;
}

}  // namespace polydg

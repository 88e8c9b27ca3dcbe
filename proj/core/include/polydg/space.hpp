// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "polydg/mesh.hpp"

namespace polydg {

using ScalarField = std::function<double(Point)>;
using VectorField = std::function<std::array<double, 2>(Point)>;

// Scaled monomial basis of P_n on one cell:
//   phi_ab(x,y) = ((x - x_K)/h_K)^a * ((y - y_K)/h_K)^b,  a + b <= n,
// ordered by total degree, then a descending. The centroid centering and
// h_K scaling keep the local mass matrix conditioned independently of h_K.
class LocalBasis {
 public:
  LocalBasis(Point center, double scale, int degree);
  LocalBasis(const Mesh& mesh, int cell, int degree);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(exps_.size()); }
  static int dimension(int degree) { return (degree + 1) * (degree + 2) / 2; }

  double eval(int i, Point p) const;
  std::array<double, 2> grad(int i, Point p) const;

  // Values/gradients of all basis functions at p; out spans dim() entries.
  void eval_all(Point p, std::span<double> out) const;
  void grad_all(Point p, std::span<std::array<double, 2>> out) const;

  std::pair<int, int> exponents(int i) const { return exps_[i]; }

 private:
  Point center_;
  double scale_;
  int degree_;
  std::vector<std::pair<int, int>> exps_;
};

// Per-cell contiguous dof blocks of the discontinuous space V_h with a
// uniform polynomial degree.
struct DofMap {
  int degree = 1;
  int num_cells = 0;

  int block_dim() const { return LocalBasis::dimension(degree); }
  int offset(int cell) const { return cell * block_dim(); }
  int total() const { return num_cells * block_dim(); }
};

// A member of V_h: one coefficient per scaled-monomial dof.
struct DiscreteFunction {
  const Mesh* mesh = nullptr;
  DofMap dofs;
  std::vector<double> coeffs;

  DiscreteFunction() = default;
  DiscreteFunction(const Mesh& m, int degree)
      : mesh(&m), dofs{degree, m.num_cells()}, coeffs(dofs.total(), 0.0) {}

  std::span<const double> cell_coeffs(int cell) const {
    return {coeffs.data() + dofs.offset(cell), static_cast<std::size_t>(dofs.block_dim())};
  }

  // Value / gradient of the local polynomial; on an interface this is the
  // trace from the given cell's side.
  double eval(int cell, Point p) const;
  std::array<double, 2> eval_grad(int cell, Point p) const;
};

// Cell-wise L2 projection Q_h f onto V_h: solves the local mass systems
// M c = b with M_ij = (phi_i, phi_j)_K and b_i = (f, phi_i)_K.
// quad_order < 0 picks the default 2*degree + 2.
DiscreteFunction l2_project(const ScalarField& f, const Mesh& mesh, int degree,
                            int quad_order = -1);

}  // namespace polydg

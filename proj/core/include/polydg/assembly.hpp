// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <vector>

#include "polydg/mesh.hpp"
#include "polydg/space.hpp"
#include "polydg/sparse.hpp"

namespace polydg {

// Knobs of the interior penalty bilinear form
//   A(u,v) = sum_K (grad u, grad v)_K - sum_e <{grad u},[v]>_e
//            - delta * sum_e <{grad v},[u]>_e + alpha * sum_e 1/h_e <[u],[v]>_e
// with the sums over all interfaces, boundary included. delta = 1 gives the
// symmetric variant, 0 the incomplete one, -1 the nonsymmetric one.
struct DGParams {
  int delta = 1;      // one of {-1, 0, 1}
  double alpha = 10;  // penalty, > 0
  int degree = 1;

  void validate() const;
};

struct SparseSystem {
  CsrMatrix matrix;
  std::vector<double> rhs;
  bool symmetric = false;          // set when delta == 1
  std::vector<int> block_offsets;  // per-cell dof block starts, plus total
};

// Assembles the linear system of the DG formulation A(u_h, v) = (f, v) plus
// Nitsche-type right-hand-side terms imposing u = g on the boundary:
//   rhs_i += alpha/h_e <g, phi_i>_e - delta <grad phi_i . n, g>_e.
// Entirely deterministic: triplets are accumulated in entity order and
// compressed by a stable sort.
SparseSystem assemble(const Mesh& mesh, const DGParams& params, const ScalarField& f,
                      const ScalarField& g);

// A(u, v) evaluated by direct quadrature of the traces of u and v,
// bypassing the assembled matrix. Oracle path for tests.
double apply_bilinear(const DiscreteFunction& u, const DiscreteFunction& v,
                      const DGParams& params);

}  // namespace polydg

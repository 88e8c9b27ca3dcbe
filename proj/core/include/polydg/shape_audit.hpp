// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <vector>

#include "polydg/mesh.hpp"

namespace polydg {

// Shape-regularity audit of a polygonal mesh. All quantities are discrete
// surrogates for mesh-family regularity constants: the pyramid apex is
// fixed at the cell centroid, and simplex overlap is replaced by a
// bounding-box overlap count.
struct ShapeReport {
  double rho_v = 0.0;       // min_K |K| / h_K^2
  double rho_e = 0.0;       // min_e |e| / h_e, identically 1 in 2D
  double kappa = 0.0;       // min over incident (e,K) of h_e / h_K
  double sigma_star = 0.0;  // min over (e,K) of dist(centroid, line e) / h_K
  double theta0 = 0.0;      // max angle (radians) between x_e - A_e and the
                            // outward normal of e, sampled at endpoints and midpoint
  int a4_overlap_proxy = 0;  // max number of other cells whose bounding box
                             // intersects one cell's bounding box

  int worst_rho_v_cell = -1;
  int worst_kappa_cell = -1, worst_kappa_interface = -1;
  int worst_sigma_cell = -1, worst_sigma_interface = -1;
  int worst_theta_cell = -1, worst_theta_interface = -1;

  std::vector<int> non_star_shaped_cells;  // flagged, never rejected
};

ShapeReport audit_shape(const Mesh& mesh);

}  // namespace polydg

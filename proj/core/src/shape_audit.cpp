// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/shape_audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace polydg {

namespace {

double point_line_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  return std::abs(cross(d, p - a)) / norm(d);
}

double angle_to_normal(Point xe, Point apex, Point n) {
  const Point d = xe - apex;
  const double len = norm(d);
  if (len == 0.0) return 0.0;
  const double c = std::clamp(dot(d, n) / len, -1.0, 1.0);
  return std::acos(c);
}

struct BBox {
  double xmin, ymin, xmax, ymax;
  bool overlaps(const BBox& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }
};

// Max count of other cells whose bounding box intersects a given cell's
// box, via a uniform grid so large meshes stay near-linear.
int bbox_overlap_proxy(const Mesh& mesh) {
  const int nc = mesh.num_cells();
  std::vector<BBox> boxes(nc);
  double max_extent = 0.0;
  for (int k = 0; k < nc; ++k) {
    BBox b{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
           -std::numeric_limits<double>::max(), -std::numeric_limits<double>::max()};
    for (int v : mesh.cells[k].vertex_ids) {
      const Point p = mesh.vertices[v];
      b.xmin = std::min(b.xmin, p.x);
      b.ymin = std::min(b.ymin, p.y);
      b.xmax = std::max(b.xmax, p.x);
      b.ymax = std::max(b.ymax, p.y);
    }
    boxes[k] = b;
    max_extent = std::max({max_extent, b.xmax - b.xmin, b.ymax - b.ymin});
  }
  const double cell = std::max(max_extent, 1e-300);
  auto bucket = [&](double x) { return static_cast<std::int64_t>(std::floor(x / cell)); };
  auto pack = [](std::int64_t ix, std::int64_t iy) {
    return (static_cast<std::uint64_t>(ix) << 32) ^ static_cast<std::uint32_t>(iy);
  };
  std::unordered_map<std::uint64_t, std::vector<int>> grid;
  for (int k = 0; k < nc; ++k)
    grid[pack(bucket(boxes[k].xmin), bucket(boxes[k].ymin))].push_back(k);

  int worst = 0;
  for (int k = 0; k < nc; ++k) {
    int count = 0;
    const BBox& b = boxes[k];
    // Any overlapping box has its min corner within one bucket of b's range.
    for (std::int64_t ix = bucket(b.xmin) - 1; ix <= bucket(b.xmax); ++ix)
      for (std::int64_t iy = bucket(b.ymin) - 1; iy <= bucket(b.ymax); ++iy) {
        auto it = grid.find(pack(ix, iy));
        if (it == grid.end()) continue;
        for (int j : it->second)
          if (j != k && b.overlaps(boxes[j])) ++count;
      }
    worst = std::max(worst, count);
  }
  return worst;
}

}  // namespace

ShapeReport audit_shape(const Mesh& mesh) {
  ShapeReport rep;
  rep.rho_v = std::numeric_limits<double>::max();
  rep.rho_e = std::numeric_limits<double>::max();
  rep.kappa = std::numeric_limits<double>::max();
  rep.sigma_star = std::numeric_limits<double>::max();

  for (int k = 0; k < mesh.num_cells(); ++k) {
    const Cell& cell = mesh.cells[k];
    const double rv = cell.area / (cell.diameter * cell.diameter);
    if (rv < rep.rho_v) {
      rep.rho_v = rv;
      rep.worst_rho_v_cell = k;
    }
    // Star-shapedness about the centroid: every boundary fan triangle CCW.
    const auto poly = mesh.cell_polygon(k);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point a = poly[i], b = poly[(i + 1) % poly.size()];
      if (cross(a - cell.centroid, b - cell.centroid) < 0.0) {
        rep.non_star_shaped_cells.push_back(k);
        break;
      }
    }
  }

  for (int i = 0; i < mesh.num_interfaces(); ++i) {
    const Interface& e = mesh.interfaces[i];
    rep.rho_e = std::min(rep.rho_e, 1.0);  // |e| / h_e with h_e = |e|
    const int sides[2] = {e.k1, e.k2};
    for (int s = 0; s < (e.interior() ? 2 : 1); ++s) {
      const Cell& cell = mesh.cells[sides[s]];
      const double kap = e.length / cell.diameter;
      if (kap < rep.kappa) {
        rep.kappa = kap;
        rep.worst_kappa_cell = sides[s];
        rep.worst_kappa_interface = i;
      }
      const double sigma = point_line_distance(cell.centroid, e.a, e.b) / cell.diameter;
      if (sigma < rep.sigma_star) {
        rep.sigma_star = sigma;
        rep.worst_sigma_cell = sides[s];
        rep.worst_sigma_interface = i;
      }
      // Outward normal with respect to this side.
      const Point n = (s == 0) ? e.normal : Point{-e.normal.x, -e.normal.y};
      for (const Point& xe : {e.a, e.midpoint(), e.b}) {
        const double theta = angle_to_normal(xe, cell.centroid, n);
        if (theta > rep.theta0) {
          rep.theta0 = theta;
          rep.worst_theta_cell = sides[s];
          rep.worst_theta_interface = i;
        }
      }
    }
  }

  rep.a4_overlap_proxy = bbox_overlap_proxy(mesh);
  return rep;
}

}  // namespace polydg

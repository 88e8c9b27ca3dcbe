// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polydg/geometry.hpp"

namespace polydg {

// Raised on invalid input meshes (self-intersecting cells, tiling overlaps,
// coverage gaps). The message names the offending cell or segment.
struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cell {
  std::vector<int> vertex_ids;  // CCW
  double area = 0.0;            // |K|
  double diameter = 0.0;        // h_K
  Point centroid;
};

enum class InterfaceKind { interior, boundary };

// A straight mesh interface: the (maximal) common sub-segment of two cell
// boundaries, or a cell's uncovered boundary sub-segment. Hanging nodes
// split long edges, so every interior interface has exactly two cells.
struct Interface {
  Point a, b;
  InterfaceKind kind = InterfaceKind::boundary;
  int k1 = -1;          // owning cell; normal points outward from k1
  int k2 = -1;          // opposite cell, -1 on the boundary
  Point normal;         // unit, outward from k1
  double length = 0.0;  // |e| = h_e in 2D

  bool interior() const { return kind == InterfaceKind::interior; }
  Point midpoint() const { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
};

struct Mesh {
  std::vector<Point> vertices;
  std::vector<Cell> cells;
  std::vector<Interface> interfaces;
  std::vector<std::vector<int>> cell_interfaces;  // incident interface ids per cell
  double h = 0.0;                                 // max_K h_K

  int num_cells() const { return static_cast<int>(cells.size()); }
  int num_interfaces() const { return static_cast<int>(interfaces.size()); }
  int num_interior_interfaces() const;
  int num_boundary_interfaces() const { return num_interfaces() - num_interior_interfaces(); }

  std::vector<Point> cell_polygon(int cell) const;
  double total_area() const;
};

// Builds a validated mesh from shared vertices and CCW cell vertex lists.
// Interfaces are extracted as maximal common sub-segments of the cell
// boundaries; geometric coincidence uses a relative tolerance of 1e-12
// times the domain diameter. Throws MeshError on non-simple cells and on
// tiling overlaps.
Mesh build_mesh(std::vector<Point> vertices, std::vector<std::vector<int>> cell_vertex_ids);

}  // namespace polydg

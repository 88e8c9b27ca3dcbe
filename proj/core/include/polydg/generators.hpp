// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <string>

#include "polydg/mesh.hpp"

namespace polydg {

// Triangular-quadrilateral hybrid mesh of the unit square with hanging
// nodes on the midline x = 1/2. The left half is an n/2 x n grid of
// side-1/n squares split into triangle pairs; the right half is a grid of
// side-1/(2n) squares. Requires even n >= 2. Characteristic h = sqrt(2)/n.
Mesh generate_hybrid(int n);

// Hexagon-dominant dual of the structured n x n triangular mesh of the
// unit square: one dual cell per primal vertex, built from the centroids
// of its incident triangles, boundary edge midpoints and (on the boundary)
// the vertex itself. Interior vertices yield hexagons. Requires n >= 2.
Mesh generate_dual_hex(int n);

// Dispatch by family name ("hybrid" or "dualhex").
Mesh generate_mesh(const std::string& family, int n);

}  // namespace polydg

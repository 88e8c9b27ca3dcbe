// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "polydg/geometry.hpp"

namespace polydg {

// Quadrature rule on a reference element. For triangles the points live on
// the unit triangle (0,0),(1,0),(0,1) and the weights sum to 1/2; for
// segments the points live on [-1,1] and the weights sum to 2.
struct QuadRule {
  std::vector<Point> points;
  std::vector<double> weights;
  int exactness = 0;
};

inline constexpr int kMaxQuadOrder = 40;

// Gauss-Legendre rule on [-1,1] exact for polynomials of degree 2n-1.
const QuadRule& segment_rule_npoints(int npoints);

// Smallest Gauss-Legendre rule exact for 1D polynomials of the given degree.
const QuadRule& segment_rule(int degree);

// Collapsed-coordinate Gauss rule on the reference triangle, exact for
// bivariate polynomials of the given total degree. Positive weights.
const QuadRule& triangle_rule(int degree);

// Fan triangulation of a polygon about its centroid; triangle cells pass
// through unchanged. Falls back to ear clipping if the polygon is not
// star-shaped with respect to its centroid. Throws if both fail.
std::vector<std::array<Point, 3>> triangulate(std::span<const Point> poly);

// Quadrature points of `rule` mapped to a physical triangle; weights carry
// the Jacobian (2*area).
struct MappedPoint {
  Point p;
  double w;
};
void map_to_triangle(const QuadRule& rule, const std::array<Point, 3>& tri,
                     std::vector<MappedPoint>& out);

// All quadrature points for integrating over a polygonal cell.
std::vector<MappedPoint> cell_points(std::span<const Point> poly, int order);

// Quadrature points along a segment [a,b]; weights carry |b-a|/2.
std::vector<MappedPoint> edge_points(Point a, Point b, int order);

template <class F>
double integrate_cell(std::span<const Point> poly, F&& f, int order) {
  double sum = 0.0;
  for (const MappedPoint& q : cell_points(poly, order)) sum += q.w * f(q.p);
  return sum;
}

template <class F>
double integrate_edge(Point a, Point b, F&& f, int order) {
  double sum = 0.0;
  for (const MappedPoint& q : edge_points(a, b, order)) sum += q.w * f(q.p);
  return sum;
}

}  // namespace polydg

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace polydg {

double polygon_signed_area(std::span<const Point> poly) {
  const std::size_t m = poly.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    twice += cross(p, q);
  }
  return 0.5 * twice;
}

CellGeometry cell_geometry(std::span<const Point> poly) {
  const std::size_t m = poly.size();
  if (m < 3) throw std::invalid_argument("cell_geometry: polygon needs at least 3 vertices");

  double twice = 0.0;
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    const double w = cross(p, q);
    twice += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  const double area = 0.5 * twice;
  if (!(area > 0.0)) throw std::invalid_argument("cell_geometry: degenerate or clockwise polygon");

  CellGeometry g;
  g.area = area;
  g.centroid = {cx / (6.0 * area), cy / (6.0 * area)};
  double d2 = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Point d = poly[i] - poly[j];
      d2 = std::max(d2, dot(d, d));
    }
  g.diameter = std::sqrt(d2);
  return g;
}

namespace {

// Does segment [a,b] properly intersect or overlap segment [c,d]?
// Shared endpoints of adjacent polygon edges are excluded by the caller.
bool segments_intersect(Point a, Point b, Point c, Point d, double tol) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  if (((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) &&
      ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol)))
    return true;
  // Collinear overlap: project onto the dominant axis.
  auto on_segment = [&](Point p, Point q, Point r) {
    return std::abs(cross(q - p, r - p)) <= tol &&
           r.x >= std::min(p.x, q.x) - tol && r.x <= std::max(p.x, q.x) + tol &&
           r.y >= std::min(p.y, q.y) - tol && r.y <= std::max(p.y, q.y) + tol;
  };
  if (std::abs(d1) <= tol && std::abs(d2) <= tol) {
    // All four points collinear; overlap iff the 1D intervals overlap beyond a point.
    const Point dir = b - a;
    const bool use_x = std::abs(dir.x) >= std::abs(dir.y);
    auto coord = [&](Point p) { return use_x ? p.x : p.y; };
    const double lo1 = std::min(coord(a), coord(b)), hi1 = std::max(coord(a), coord(b));
    const double lo2 = std::min(coord(c), coord(d)), hi2 = std::max(coord(c), coord(d));
    return std::min(hi1, hi2) - std::max(lo1, lo2) > tol;
  }
  if (std::abs(d1) <= tol && on_segment(a, b, c)) return true;
  if (std::abs(d2) <= tol && on_segment(a, b, d)) return true;
  if (std::abs(d3) <= tol && on_segment(c, d, a)) return true;
  if (std::abs(d4) <= tol && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

bool polygon_is_simple(std::span<const Point> poly, double tol) {
  const std::size_t m = poly.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i)
    if (dist(poly[i], poly[(i + 1) % m]) <= tol) return false;  // zero-length edge

  for (std::size_t i = 0; i < m; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % m];
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t jn = (j + 1) % m;
      if (j == i || jn == i || j == (i + 1) % m) continue;  // adjacent edges share a vertex
      if (segments_intersect(a, b, poly[j], poly[jn], tol)) return false;
    }
    // Adjacent edges must not fold back onto each other (zero-angle spike).
    const Point prev = poly[(i + m - 1) % m];
    const Point u = b - a, v = prev - a;
    if (std::abs(cross(u, v)) <= tol * norm(u) * norm(v) && dot(u, v) > 0.0) return false;
  }
  return true;
}

}  // namespace polydg

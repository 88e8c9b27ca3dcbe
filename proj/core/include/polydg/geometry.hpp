// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <array>
#include <cmath>
#include <span>

namespace polydg {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

// z-component of the 2D cross product a x b.
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

struct CellGeometry {
  double area = 0.0;      // signed area taken positive; shoelace
  double diameter = 0.0;  // max pairwise vertex distance
  Point centroid;
};

// Signed area of a polygon, positive for counter-clockwise orientation.
double polygon_signed_area(std::span<const Point> poly);

// Area, diameter and area-weighted centroid of a simple CCW polygon.
// Throws std::invalid_argument on fewer than 3 vertices or zero area.
CellGeometry cell_geometry(std::span<const Point> poly);

// True if no two non-adjacent edges intersect and no edge degenerates
// to a point. Collinear consecutive edges (straight vertices) are fine.
bool polygon_is_simple(std::span<const Point> poly, double tol);

}  // namespace polydg

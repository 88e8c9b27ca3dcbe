// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace polydg {

namespace {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1,1] by Newton
// iteration on P_n. Symmetric, positive weights.
QuadRule make_gauss_legendre(int n) {
  QuadRule rule;
  rule.exactness = 2 * n - 1;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[i] = {-x, 0.0};
    rule.points[n - 1 - i] = {x, 0.0};
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

// Duffy-collapsed tensor rule on the unit triangle (0,0),(1,0),(0,1):
// x = u, y = v(1-u) with the extra (1-u) Jacobian folded into the weights.
// A q-point 1D rule per direction is exact for total degree 2q-2.
QuadRule make_triangle_rule(int q) {
  const QuadRule& gl = segment_rule_npoints(q);
  QuadRule rule;
  rule.exactness = 2 * q - 2;
  rule.points.reserve(q * q);
  rule.weights.reserve(q * q);
  for (int i = 0; i < q; ++i) {
    const double u = 0.5 * (gl.points[i].x + 1.0);
    const double wu = 0.5 * gl.weights[i];
    for (int j = 0; j < q; ++j) {
      const double v = 0.5 * (gl.points[j].x + 1.0);
      const double wv = 0.5 * gl.weights[j];
      rule.points.push_back({u, v * (1.0 - u)});
      rule.weights.push_back(wu * wv * (1.0 - u));
    }
  }
  return rule;
}

std::mutex cache_mutex;

// Build outside the lock: the triangle factory itself asks for a segment
// rule, and map references stay valid across insertions.
const QuadRule& cached(std::map<int, QuadRule>& cache, int key, QuadRule (*make)(int)) {
  {
    std::scoped_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  QuadRule rule = make(key);
  std::scoped_lock lock(cache_mutex);
  return cache.try_emplace(key, std::move(rule)).first->second;
}

}  // namespace

const QuadRule& segment_rule_npoints(int npoints) {
  if (npoints < 1 || npoints > kMaxQuadOrder)
    throw std::invalid_argument("segment_rule: unsupported point count");
  static std::map<int, QuadRule> cache;
  return cached(cache, npoints, make_gauss_legendre);
}

const QuadRule& segment_rule(int degree) {
  if (degree < 0 || degree > kMaxQuadOrder)
    throw std::invalid_argument("segment_rule: unsupported order");
  return segment_rule_npoints(degree / 2 + 1);
}

const QuadRule& triangle_rule(int degree) {
  if (degree < 0 || degree > kMaxQuadOrder)
    throw std::invalid_argument("triangle_rule: unsupported order");
  const int q = (degree + 3) / 2;  // 2q-2 >= degree
  static std::map<int, QuadRule> cache;
  return cached(cache, q, make_triangle_rule);
}

std::vector<std::array<Point, 3>> triangulate(std::span<const Point> poly) {
  const std::size_t m = poly.size();
  if (m < 3) throw std::invalid_argument("triangulate: polygon needs at least 3 vertices");
  if (m == 3) return {{{poly[0], poly[1], poly[2]}}};

  const CellGeometry g = cell_geometry(poly);
  const double tol = 1e-14 * g.diameter * g.diameter;

  std::vector<std::array<Point, 3>> fan;
  fan.reserve(m);
  bool ok = true;
  for (std::size_t i = 0; i < m; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % m];
    if (cross(a - g.centroid, b - g.centroid) < -tol) {
      ok = false;
      break;
    }
    fan.push_back({g.centroid, a, b});
  }
  if (ok) return fan;

  // Ear clipping for polygons not star-shaped about the centroid.
  std::vector<Point> rest(poly.begin(), poly.end());
  std::vector<std::array<Point, 3>> ears;
  auto inside_tri = [&](Point p, Point a, Point b, Point c) {
    const double s1 = cross(b - a, p - a);
    const double s2 = cross(c - b, p - b);
    const double s3 = cross(a - c, p - c);
    return s1 >= -tol && s2 >= -tol && s3 >= -tol;
  };
  while (rest.size() > 3) {
    const std::size_t k = rest.size();
    bool clipped = false;
    for (std::size_t i = 0; i < k; ++i) {
      const Point a = rest[(i + k - 1) % k], b = rest[i], c = rest[(i + 1) % k];
      if (cross(b - a, c - b) <= tol) continue;  // reflex or straight corner
      bool ear = true;
      for (std::size_t j = 0; j < k && ear; ++j) {
        if (j == i || j == (i + k - 1) % k || j == (i + 1) % k) continue;
        if (inside_tri(rest[j], a, b, c)) ear = false;
      }
      if (!ear) continue;
      ears.push_back({a, b, c});
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) throw std::runtime_error("triangulate: ear clipping failed on degenerate polygon");
  }
  ears.push_back({rest[0], rest[1], rest[2]});
  return ears;
}

void map_to_triangle(const QuadRule& rule, const std::array<Point, 3>& tri,
                     std::vector<MappedPoint>& out) {
  const Point e1 = tri[1] - tri[0];
  const Point e2 = tri[2] - tri[0];
  const double jac = cross(e1, e2);  // = 2*area for CCW triangles
  for (std::size_t k = 0; k < rule.points.size(); ++k) {
    const double u = rule.points[k].x, v = rule.points[k].y;
    out.push_back({{tri[0].x + u * e1.x + v * e2.x, tri[0].y + u * e1.y + v * e2.y},
                   rule.weights[k] * jac});
  }
}

std::vector<MappedPoint> cell_points(std::span<const Point> poly, int order) {
  const QuadRule& rule = triangle_rule(order);
  std::vector<MappedPoint> out;
  const auto tris = triangulate(poly);
  out.reserve(tris.size() * rule.points.size());
  for (const auto& t : tris) map_to_triangle(rule, t, out);
  return out;
}

std::vector<MappedPoint> edge_points(Point a, Point b, int order) {
  const QuadRule& rule = segment_rule(order);
  std::vector<MappedPoint> out;
  out.reserve(rule.points.size());
  const double half = 0.5 * dist(a, b);
  for (std::size_t k = 0; k < rule.points.size(); ++k) {
    const double t = 0.5 * (rule.points[k].x + 1.0);
    out.push_back({{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}, rule.weights[k] * half});
  }
  return out;
}

}  // namespace polydg

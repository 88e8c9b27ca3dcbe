// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.
//
// Test-only oracles, independent of the library's integration paths.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "polydg/geometry.hpp"

namespace polydg::testing {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline double binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Exact integral of x^a y^b over a triangle: affine map to the reference
// triangle, multinomial expansion, and the closed form
// int_ref u^p v^q = p! q! / (p+q+2)!.
inline double triangle_monomial_integral(const Point& p0, const Point& p1, const Point& p2,
                                         int a, int b) {
  const double ax = p1.x - p0.x, bx = p2.x - p0.x;
  const double ay = p1.y - p0.y, by = p2.y - p0.y;
  const double jac = ax * by - ay * bx;  // 2 * signed area

  double total = 0.0;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; i + j <= a; ++j) {
      const double cx = factorial(a) / (factorial(i) * factorial(j) * factorial(a - i - j)) *
                        std::pow(p0.x, a - i - j) * std::pow(ax, i) * std::pow(bx, j);
      for (int k = 0; k <= b; ++k)
        for (int l = 0; k + l <= b; ++l) {
          const double cy = factorial(b) / (factorial(k) * factorial(l) * factorial(b - k - l)) *
                            std::pow(p0.y, b - k - l) * std::pow(ay, k) * std::pow(by, l);
          const int p = i + k, q = j + l;
          total += cx * cy * factorial(p) * factorial(q) / factorial(p + q + 2);
        }
    }
  return total * jac;
}

// Exact integral of x^a y^b over a convex polygon by fanning from the
// first vertex (valid for convex polygons only).
inline double convex_polygon_monomial_integral(const std::vector<Point>& poly, int a, int b) {
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i)
    total += triangle_monomial_integral(poly[0], poly[i], poly[i + 1], a, b);
  return total;
}

// Random convex polygon: sorted angles on a circle of random radius and
// center. Deterministic for a given generator state. Coordinates stay O(1)
// so degree-7 monomial exactness is measurable at 1e-12 relative without
// cancellation noise dominating.
inline std::vector<Point> random_convex_polygon(std::mt19937& rng) {
  std::uniform_int_distribution<int> nsides(3, 8);
  std::uniform_real_distribution<double> uang(0.0, 2.0 * 3.14159265358979323846);
  std::uniform_real_distribution<double> urad(0.4, 1.2);
  std::uniform_real_distribution<double> uctr(-1.0, 1.0);
  const int m = nsides(rng);
  const double r = urad(rng);
  const Point c{uctr(rng), uctr(rng)};
  std::vector<double> angles(m);
  for (double& a : angles) a = uang(rng);
  std::sort(angles.begin(), angles.end());
  // Re-draw until the angles are well separated, so cells stay non-degenerate.
  for (int i = 1; i < m; ++i)
    if (angles[i] - angles[i - 1] < 0.05) return random_convex_polygon(rng);
  std::vector<Point> poly;
  poly.reserve(m);
  for (double a : angles) poly.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  return poly;
}

}  // namespace polydg::testing

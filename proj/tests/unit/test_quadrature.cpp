// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polydg/quadrature.hpp"
#include "support/oracles.hpp"

using namespace polydg;
namespace oracle = polydg::testing;

namespace {

std::vector<Point> unit_square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

std::vector<Point> regular_hexagon(double circumradius) {
  std::vector<Point> p;
  for (int i = 0; i < 6; ++i) {
    const double a = 2.0 * 3.14159265358979323846 * i / 6.0;
    p.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  return p;
}

}  // namespace

TEST_CASE("gauss-legendre segment rules") {
  SUBCASE("weights sum to the reference measure") {
    for (int n = 1; n <= 12; ++n) {
      const QuadRule& r = segment_rule_npoints(n);
      double s = 0.0;
      for (double w : r.weights) {
        CHECK(w > 0.0);
        s += w;
      }
      CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
    }
  }
  SUBCASE("monomial exactness on [-1,1]") {
    for (int deg = 0; deg <= 15; ++deg) {
      const QuadRule& r = segment_rule(deg);
      for (int p = 0; p <= deg; ++p) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.points.size(); ++i)
          s += r.weights[i] * std::pow(r.points[i].x, p);
        const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
        CHECK(s == doctest::Approx(exact).epsilon(1e-14));
      }
    }
  }
  SUBCASE("unsupported order rejected") {
    CHECK_THROWS(segment_rule(-1));
    CHECK_THROWS(segment_rule(kMaxQuadOrder + 1));
  }
}

TEST_CASE("triangle rules integrate reference monomials exactly") {
  for (int deg = 0; deg <= 11; ++deg) {
    const QuadRule& r = triangle_rule(deg);
    REQUIRE(r.exactness >= deg);
    double wsum = 0.0;
    for (double w : r.weights) {
      CHECK(w > 0.0);
      wsum += w;
    }
    CHECK(wsum == doctest::Approx(0.5).epsilon(1e-14));
    for (int a = 0; a + 0 <= deg; ++a)
      for (int b = 0; a + b <= deg; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < r.points.size(); ++i)
          s += r.weights[i] * std::pow(r.points[i].x, a) * std::pow(r.points[i].y, b);
        const double exact =
            oracle::factorial(a) * oracle::factorial(b) / oracle::factorial(a + b + 2);
        CHECK(s == doctest::Approx(exact).epsilon(1e-13));
      }
  }
}

TEST_CASE("triangulate") {
  SUBCASE("triangle cells pass through") {
    const std::vector<Point> tri{{0, 0}, {1, 0}, {0, 1}};
    const auto tris = triangulate(tri);
    REQUIRE(tris.size() == 1);
    CHECK(cross(tris[0][1] - tris[0][0], tris[0][2] - tris[0][0]) == doctest::Approx(1.0));
  }
  SUBCASE("unit square fans into 4 quarter triangles") {
    const auto tris = triangulate(unit_square());
    REQUIRE(tris.size() == 4);
    for (const auto& t : tris)
      CHECK(0.5 * cross(t[1] - t[0], t[2] - t[0]) == doctest::Approx(0.25).epsilon(1e-14));
  }
  SUBCASE("regular hexagon: 6 triangles, area 3*sqrt(3)/2") {
    const auto tris = triangulate(regular_hexagon(1.0));
    REQUIRE(tris.size() == 6);
    double area = 0.0;
    for (const auto& t : tris) area += 0.5 * cross(t[1] - t[0], t[2] - t[0]);
    CHECK(area == doctest::Approx(1.5 * std::sqrt(3.0)).epsilon(1e-14));
  }
  SUBCASE("non-star-shaped polygon falls back to ear clipping") {
    // L-shaped hexagon whose centroid does not see every edge.
    const std::vector<Point> ell{{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 4}, {0, 4}};
    const auto tris = triangulate(ell);
    double area = 0.0;
    for (const auto& t : tris) {
      const double a = 0.5 * cross(t[1] - t[0], t[2] - t[0]);
      CHECK(a > 0.0);
      area += a;
    }
    CHECK(area == doctest::Approx(7.0).epsilon(1e-13));
  }
}

TEST_CASE("integrate_cell") {
  SUBCASE("constant over the unit square") {
    CHECK(integrate_cell(unit_square(), [](Point) { return 1.0; }, 2) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("x over the reference triangle") {
    const std::vector<Point> tri{{0, 0}, {1, 0}, {0, 1}};
    CHECK(integrate_cell(tri, [](Point p) { return p.x; }, 3) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  }
  SUBCASE("x^2 y^3 over the unit square at order 5") {
    const double v = integrate_cell(unit_square(), [](Point p) { return p.x * p.x * p.y * p.y * p.y; }, 5);
    CHECK(std::abs(v - 1.0 / 12.0) < 1e-14);
  }
}

TEST_CASE("integrate_edge") {
  SUBCASE("constant gives the length") {
    CHECK(integrate_edge({0, 0}, {3, 4}, [](Point) { return 1.0; }, 1) ==
          doctest::Approx(5.0).epsilon(1e-15));
  }
  SUBCASE("arc-length parameter on a unit interface") {
    CHECK(integrate_edge({0, 0}, {1, 0}, [](Point p) { return p.x; }, 3) ==
          doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("t^4 with the 3-point rule") {
    // order 5 maps to 3 Gauss points, exact through degree 5
    const double v = integrate_edge({0, 0}, {1, 0}, [](Point p) { return std::pow(p.x, 4); }, 5);
    CHECK(std::abs(v - 0.2) < 1e-14);
    CHECK(segment_rule(5).points.size() == 3);
  }
}

TEST_CASE("cell integration matches the exact oracle on random convex polygons") {
  std::mt19937 rng(20260808);
  for (int trial = 0; trial < 10; ++trial) {
    const auto poly = oracle::random_convex_polygon(rng);
    for (int deg = 0; deg <= 7; ++deg)
      for (int a = 0; a <= deg; ++a) {
        const int b = deg - a;
        const double got =
            integrate_cell(poly, [&](Point p) { return std::pow(p.x, a) * std::pow(p.y, b); }, 7);
        const double exact = oracle::convex_polygon_monomial_integral(poly, a, b);
        CHECK(got == doctest::Approx(exact).epsilon(1e-12));
      }
  }
}

TEST_CASE("cell integration is additive over the fan") {
  const auto poly = regular_hexagon(1.0);
  auto f = [](Point p) { return std::sin(p.x) + p.y * p.y; };
  double by_fan = 0.0;
  for (const auto& t : triangulate(poly)) {
    const std::vector<Point> tri{t[0], t[1], t[2]};
    by_fan += integrate_cell(tri, f, 7);
  }
  CHECK(integrate_cell(poly, f, 7) == doctest::Approx(by_fan).epsilon(1e-14));
}

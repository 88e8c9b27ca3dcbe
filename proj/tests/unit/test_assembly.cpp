// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "polydg/analysis.hpp"
#include "polydg/assembly.hpp"
#include "polydg/generators.hpp"
#include "polydg/quadrature.hpp"
#include "polydg/solver.hpp"
#include "polydg/space.hpp"

using namespace polydg;

namespace {

const ScalarField zero_field = [](Point) { return 0.0; };

DiscreteFunction random_df(const Mesh& mesh, int degree, std::mt19937& rng) {
  DiscreteFunction df(mesh, degree);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double& c : df.coeffs) c = u(rng);
  return df;
}

double quadratic_form(const SparseSystem& sys, const std::vector<double>& u,
                      const std::vector<double>& v) {
  std::vector<double> au(u.size());
  sys.matrix.multiply(u, au);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += v[i] * au[i];
  return s;
}

}  // namespace

TEST_CASE("single-cell degree-0 system by hand") {
  const Mesh mesh = build_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2, 3}});
  const DGParams params{1, 10.0, 0};
  const SparseSystem sys = assemble(mesh, params, [](Point) { return 1.0; }, zero_field);
  REQUIRE(sys.matrix.rows() == 1);
  // No volume or consistency terms for constants; four unit edges with
  // h_e = 1 leave only the penalty: 4 * alpha.
  CHECK(sys.matrix.values()[0] == doctest::Approx(40.0).epsilon(1e-13));
  CHECK(sys.rhs[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symmetry follows delta") {
  const Mesh mesh = generate_dual_hex(4);
  SUBCASE("delta = 1 gives a symmetric matrix") {
    const SparseSystem sys = assemble(mesh, {1, 10.0, 1}, zero_field, zero_field);
    CHECK(sys.symmetric);
    CHECK(sys.matrix.max_asymmetry() <= 1e-12 * sys.matrix.max_abs());
  }
  SUBCASE("delta = 0 is measurably nonsymmetric") {
    const SparseSystem sys = assemble(mesh, {0, 10.0, 1}, zero_field, zero_field);
    CHECK_FALSE(sys.symmetric);
    CHECK(sys.matrix.max_asymmetry() > 1e-3 * sys.matrix.max_abs());
  }
  SUBCASE("delta = -1 is measurably nonsymmetric") {
    const SparseSystem sys = assemble(mesh, {-1, 10.0, 1}, zero_field, zero_field);
    CHECK(sys.matrix.max_asymmetry() > 1e-3 * sys.matrix.max_abs());
  }
}

TEST_CASE("consistency: a global linear solution is reproduced exactly") {
  auto u = [](Point p) { return p.x + 2.0 * p.y; };
  auto grad_u = [](Point) { return std::array<double, 2>{1.0, 2.0}; };
  for (const char* family : {"hybrid", "dualhex"}) {
    const Mesh mesh = generate_mesh(family, 4);
    const DGParams params{1, 10.0, 1};
    const SparseSystem sys = assemble(mesh, params, zero_field, u);
    const SolveReport sol = solve(sys, 1e-12);
    REQUIRE(sol.converged);
    DiscreteFunction u_h(mesh, 1);
    u_h.coeffs = sol.solution;
    const ErrorTriple err = errors(u_h, u, grad_u, params.alpha);
    CHECK(err.h1_broken <= 1e-10);
    CHECK(err.l2 <= 1e-10);
  }
}

TEST_CASE("consistency at higher degrees: harmonic polynomials are exact") {
  // f = 0 for both, so the discrete solution must coincide with u up to
  // solver tolerance at the matching degree.
  struct Case {
    int degree;
    ScalarField u;
    VectorField grad_u;
  };
  const std::vector<Case> cases{
      {3, [](Point p) { return p.x * p.x * p.x - 3.0 * p.x * p.y * p.y + p.y; },
       [](Point p) {
         return std::array<double, 2>{3.0 * p.x * p.x - 3.0 * p.y * p.y,
                                      -6.0 * p.x * p.y + 1.0};
       }},
      {4,
       [](Point p) {
         return p.x * p.x * p.x * p.x - 6.0 * p.x * p.x * p.y * p.y + p.y * p.y * p.y * p.y;
       },
       [](Point p) {
         return std::array<double, 2>{4.0 * p.x * p.x * p.x - 12.0 * p.x * p.y * p.y,
                                      -12.0 * p.x * p.x * p.y + 4.0 * p.y * p.y * p.y};
       }},
  };
  const Mesh mesh = generate_dual_hex(3);
  for (const Case& c : cases) {
    // The coercivity threshold grows with the squared inverse constant, so
    // the penalty must scale with the degree.
    const DGParams params{1, 20.0 * c.degree * c.degree, c.degree};
    const SparseSystem sys = assemble(mesh, params, zero_field, c.u);
    const SolveReport sol = solve(sys, 1e-12);
    REQUIRE(sol.converged);
    DiscreteFunction u_h(mesh, c.degree);
    u_h.coeffs = sol.solution;
    const ErrorTriple err = errors(u_h, c.u, c.grad_u, params.alpha);
    CHECK(err.energy <= 1e-8);
  }
}

TEST_CASE("apply_bilinear") {
  SUBCASE("piecewise indicator on two squares") {
    const Mesh mesh = build_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {2, 0}, {2, 1}},
                                 {{0, 1, 2, 3}, {1, 4, 5, 2}});
    DiscreteFunction v(mesh, 0);
    v.coeffs = {1.0, 0.0};
    const DGParams params{1, 10.0, 0};
    // Gradients vanish, so only penalties remain: the shared edge sees the
    // unit jump, and the indicator's three boundary edges see its trace.
    CHECK(apply_bilinear(v, v, params) == doctest::Approx(40.0).epsilon(1e-13));
  }
  SUBCASE("matches the assembled matrix on random pairs") {
    const Mesh mesh = generate_dual_hex(4);
    std::mt19937 rng(99);
    for (int degree : {1, 2}) {
      const DGParams params{1, 10.0, degree};
      const SparseSystem sys = assemble(mesh, params, zero_field, zero_field);
      for (int trial = 0; trial < 5; ++trial) {
        const DiscreteFunction u = random_df(mesh, degree, rng);
        const DiscreteFunction v = random_df(mesh, degree, rng);
        const double direct = apply_bilinear(u, v, params);
        const double via_matrix = quadratic_form(sys, u.coeffs, v.coeffs);
        CHECK(direct == doctest::Approx(via_matrix).epsilon(1e-11));
      }
    }
  }
  SUBCASE("A(0, v) = 0") {
    const Mesh mesh = generate_dual_hex(3);
    std::mt19937 rng(7);
    const DiscreteFunction v = random_df(mesh, 1, rng);
    DiscreteFunction zero(mesh, 1);
    CHECK(apply_bilinear(zero, v, {1, 10.0, 1}) == 0.0);
  }
  SUBCASE("mismatched spaces rejected") {
    const Mesh m1 = generate_dual_hex(3);
    const Mesh m2 = generate_dual_hex(3);
    DiscreteFunction u(m1, 1), v(m2, 1);
    CHECK_THROWS(apply_bilinear(u, v, {1, 10.0, 1}));
  }
}

TEST_CASE("coercivity sample at the default penalty") {
  std::mt19937 rng(2024);
  for (const char* family : {"hybrid", "dualhex"}) {
    const Mesh mesh = generate_mesh(family, 4);
    const DGParams params{1, 10.0, 1};
    const SparseSystem sys = assemble(mesh, params, zero_field, zero_field);
    double c_observed = 1e300;
    for (int trial = 0; trial < 100; ++trial) {
      const DiscreteFunction v = random_df(mesh, 1, rng);
      const double a_vv = quadratic_form(sys, v.coeffs, v.coeffs);
      CHECK(a_vv > 0.0);
      const EnergyParts parts = energy_parts(v);
      c_observed = std::min(c_observed, a_vv / (parts.grad_sq + params.alpha * parts.jump_sq));
    }
    CHECK(c_observed > 0.0);
    MESSAGE("observed coercivity constant on ", std::string(family), ": ", c_observed);
  }
}

TEST_CASE("penalty terms vanish on continuous interpolants") {
  const Mesh mesh = generate_dual_hex(4);

  SUBCASE("interior jumps of interpolated global polynomials") {
    for (int degree : {1, 2}) {
      ScalarField poly = degree == 1
                             ? ScalarField([](Point p) { return 1.0 + p.x - 3.0 * p.y; })
                             : ScalarField([](Point p) { return p.x * p.x + p.x * p.y - p.y; });
      const DiscreteFunction u = l2_project(poly, mesh, degree);
      double jump_sq = 0.0;
      for (const Interface& e : mesh.interfaces) {
        if (!e.interior()) continue;
        jump_sq += integrate_edge(e.a, e.b,
                                  [&](Point p) {
                                    const double j = u.eval(e.k1, p) - u.eval(e.k2, p);
                                    return j * j / e.length;
                                  },
                                  2 * degree + 3);
      }
      CHECK(jump_sq <= 1e-22);
    }
  }

  SUBCASE("alpha-invariance of A(u,u) for a zero-trace polynomial") {
    // x(1-x)y(1-y) vanishes on the whole boundary, so no penalty term
    // survives anywhere and alpha must drop out of A(u,u).
    auto bubble = [](Point p) { return p.x * (1.0 - p.x) * p.y * (1.0 - p.y); };
    const DiscreteFunction u = l2_project(bubble, mesh, 4);
    const double a1 = apply_bilinear(u, u, {1, 10.0, 4});
    const double a2 = apply_bilinear(u, u, {1, 1000.0, 4});
    CHECK(a1 == doctest::Approx(a2).epsilon(1e-9));
  }
}

TEST_CASE("block sparsity pattern") {
  for (const char* family : {"hybrid", "dualhex"}) {
    const Mesh mesh = generate_mesh(family, 4);
    const DGParams params{1, 10.0, 1};
    const SparseSystem sys = assemble(mesh, params, zero_field, zero_field);
    const int dim = LocalBasis::dimension(params.degree);
    std::set<std::pair<int, int>> blocks;
    const auto offsets = sys.matrix.row_offsets();
    const auto cols = sys.matrix.col_indices();
    for (int r = 0; r < sys.matrix.rows(); ++r)
      for (int i = offsets[r]; i < offsets[r + 1]; ++i)
        blocks.insert({r / dim, cols[i] / dim});
    CHECK(static_cast<int>(blocks.size()) ==
          mesh.num_cells() + 2 * mesh.num_interior_interfaces());
  }
}

TEST_CASE("parameter validation") {
  const Mesh mesh = generate_dual_hex(3);
  CHECK_THROWS(assemble(mesh, {2, 10.0, 1}, zero_field, zero_field));
  CHECK_THROWS(assemble(mesh, {1, -1.0, 1}, zero_field, zero_field));
  CHECK_THROWS(assemble(mesh, {1, 0.0, 1}, zero_field, zero_field));
}

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "polydg/analysis.hpp"
#include "polydg/assembly.hpp"
#include "polydg/generators.hpp"
#include "polydg/manufactured.hpp"
#include "polydg/quadrature.hpp"

using namespace polydg;

namespace {

ConvergenceLevel level(double h, double l2, double h1 = 1.0, double en = 1.0) {
  ConvergenceLevel l;
  l.h = h;
  l.err = {l2, h1, en};
  return l;
}

DiscreteFunction random_df(const Mesh& mesh, int degree, std::mt19937& rng) {
  DiscreteFunction df(mesh, degree);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double& c : df.coeffs) c = u(rng);
  return df;
}

}  // namespace

TEST_CASE("error norms") {
  SUBCASE("interpolants of global polynomials are reproduced") {
    const Mesh mesh = generate_hybrid(4);
    auto u = [](Point p) { return 2.0 - p.x + 0.5 * p.y; };
    auto gu = [](Point) { return std::array<double, 2>{-1.0, 0.5}; };
    const DiscreteFunction u_h = l2_project(u, mesh, 1);
    const ErrorTriple e = errors(u_h, u, gu, 10.0);
    CHECK(e.l2 <= 1e-10);
    CHECK(e.h1_broken <= 1e-10);
    CHECK(e.energy <= 1e-10);
  }
  SUBCASE("zero discrete function against the manufactured solution") {
    // ||u|| = 1/2 and ||grad u|| = pi*sqrt(2) for u = sin(2 pi x) cos(2 pi y).
    const Mesh mesh = generate_dual_hex(8);
    const Problem& prob = problem_by_name("paper");
    DiscreteFunction zero(mesh, 1);
    const ErrorTriple e = errors(zero, prob.u, prob.grad_u, 10.0);
    CHECK(e.l2 == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(e.h1_broken == doctest::Approx(3.14159265358979323846 * std::sqrt(2.0)).epsilon(1e-5));
    CHECK(e.energy >= e.h1_broken);
  }
  SUBCASE("all norms of the zero function vanish") {
    const Mesh mesh = generate_dual_hex(3);
    DiscreteFunction zero(mesh, 1);
    const ErrorTriple e = errors(zero, [](Point) { return 0.0; },
                                 [](Point) { return std::array<double, 2>{0.0, 0.0}; }, 10.0);
    CHECK(e.l2 == 0.0);
    CHECK(e.h1_broken == 0.0);
    CHECK(e.energy == 0.0);
  }
}

TEST_CASE("energy norm structure on random discrete functions") {
  const Mesh mesh = generate_dual_hex(4);
  std::mt19937 rng(5150);
  const double alpha = 10.0;
  for (int trial = 0; trial < 20; ++trial) {
    const DiscreteFunction v = random_df(mesh, 1, rng);
    const EnergyParts p = energy_parts(v);
    const double triple = p.triple_norm(alpha);
    CHECK(triple * triple >= p.grad_sq);                  // dominates broken H1
    CHECK(triple * triple >= alpha * p.jump_sq - 1e-14);  // dominates the penalty part
  }
}

TEST_CASE("boundedness sample of the bilinear form") {
  const double alpha = 10.0;
  std::mt19937 rng(31);
  for (const char* family : {"hybrid", "dualhex"}) {
    const Mesh mesh = generate_mesh(family, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const DiscreteFunction u = random_df(mesh, 1, rng);
      const DiscreteFunction v = random_df(mesh, 1, rng);
      const double a = std::abs(apply_bilinear(u, v, {1, alpha, 1}));
      const double bound = (1.0 + alpha) / alpha * energy_parts(u).triple_norm(alpha) *
                           energy_parts(v).triple_norm(alpha);
      worst = std::max(worst, a / bound);
      CHECK(a <= bound);
    }
    MESSAGE("sharpest observed boundedness ratio on ", std::string(family), ": ", worst);
  }
}

TEST_CASE("fit_rates") {
  SUBCASE("textbook second-order pair") {
    const ConvergenceReport rep = fit_rates({level(0.1, 0.1), level(0.05, 0.025)});
    CHECK(rep.rate_l2.fitted == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(rep.rate_l2.pairwise.size() == 1);
    CHECK(rep.rate_l2.pairwise[0] == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("reference hybrid-mesh H1 column") {
    const ConvergenceReport rep = fit_rates({level(1.0 / 16, 1, 1.2006), level(1.0 / 32, 1, 0.5904),
                                             level(1.0 / 64, 1, 0.2917), level(1.0 / 128, 1, 0.1452),
                                             level(1.0 / 256, 1, 0.0725)});
    CHECK(rep.rate_h1.fitted == doctest::Approx(1.0124).epsilon(5e-3));
  }
  SUBCASE("reference dual-mesh L2 column") {
    const ConvergenceReport rep = fit_rates({level(1.0 / 16, 0.0461), level(1.0 / 32, 0.0129),
                                             level(1.0 / 64, 0.0034), level(1.0 / 128, 0.0009),
                                             level(1.0 / 256, 0.0002)});
    CHECK(rep.rate_l2.fitted == doctest::Approx(1.9393).epsilon(2e-2));
  }
  SUBCASE("zero-error levels are excluded and flagged") {
    const ConvergenceReport rep =
        fit_rates({level(0.1, 0.1), level(0.05, 0.0), level(0.025, 0.00625)});
    CHECK(rep.rate_l2.fitted == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE_FALSE(rep.excluded_levels.empty());
    CHECK(rep.excluded_levels[0] == 1);
  }
  SUBCASE("validation") {
    CHECK_THROWS(fit_rates({level(0.1, 1.0)}));
    CHECK_THROWS(fit_rates({level(0.1, 1.0), level(0.1, 0.5)}));  // h must decrease
  }
}

TEST_CASE("inverse inequality constant") {
  SUBCASE("degree 0 has no gradient") {
    const Mesh mesh = build_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2, 3}});
    CHECK(inverse_constant(mesh, 0, 0) == 0.0);
  }
  SUBCASE("unit square at degree 1: lambda_max = 12, C_I = sqrt(24)") {
    const Mesh mesh = build_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2, 3}});
    CHECK(inverse_constant(mesh, 0, 1) ==
          doctest::Approx(std::sqrt(24.0)).epsilon(1e-8 / 5.0));
  }
  SUBCASE("scale invariance under dilation") {
    const Mesh big = build_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2, 3}});
    const Mesh small = build_mesh({{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}}, {{0, 1, 2, 3}});
    for (int degree : {1, 2, 3}) {
      const double ci_big = inverse_constant(big, 0, degree);
      const double ci_small = inverse_constant(small, 0, degree);
      CHECK(std::abs(ci_big - ci_small) <= 1e-10 * ci_big);
    }
  }
  SUBCASE("agrees with a dense generalized eigensolver on a hexagon") {
    const Mesh mesh = generate_dual_hex(4);
    const int cell = 2 * 5 + 2;  // interior hexagon
    const int degree = 2;
    const LocalBasis basis(mesh, cell, degree);
    const int dim = basis.dim();
    Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd stiff = Eigen::MatrixXd::Zero(dim, dim);
    for (const MappedPoint& q : cell_points(mesh.cell_polygon(cell), 2 * degree + 2)) {
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          const auto gi = basis.grad(i, q.p), gj = basis.grad(j, q.p);
          mass(i, j) += q.w * basis.eval(i, q.p) * basis.eval(j, q.p);
          stiff(i, j) += q.w * (gi[0] * gj[0] + gi[1] * gj[1]);
        }
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(stiff, mass);
    const double expected = mesh.cells[cell].diameter *
                            std::sqrt(es.eigenvalues().maxCoeff());
    CHECK(inverse_constant(mesh, cell, degree) == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("penalty threshold formula") {
  CHECK(penalty_threshold(10.0 / 1.0, 0.0, 1, 0.5) == doctest::Approx(40.0));
  // C_1 = C_T (1 + C_I)^2 = 10 with C_I = 0, C_T = 10
  CHECK(penalty_threshold(10.0, 0.0, -1, 0.5) == 0.0);
  CHECK(penalty_threshold(10.0, 0.0, -1, 0.9) == 0.0);
  CHECK(penalty_threshold(10.0, 0.0, 0, 0.5) == doctest::Approx(10.0));
  CHECK_THROWS(penalty_threshold(10.0, 0.0, 1, 0.0));
  CHECK_THROWS(penalty_threshold(10.0, 0.0, 1, 1.0));
  CHECK_THROWS(penalty_threshold(10.0, 0.0, 1, -2.0));

  SUBCASE("monotone in C_I and in C") {
    double prev = 0.0;
    for (double ci : {0.0, 1.0, 2.0, 5.0}) {
      const double a = penalty_threshold(10.0, ci, 1, 0.5);
      CHECK(a > prev);
      prev = a;
    }
    prev = 0.0;
    for (double c : {0.1, 0.5, 0.9, 0.99}) {
      const double a = penalty_threshold(10.0, 0.0, 1, c);
      CHECK(a > prev);
      prev = a;
    }
  }
}

TEST_CASE("constants report") {
  const Mesh mesh = generate_dual_hex(3);
  const ConstantsReport rep = constants_report(mesh, 1);
  REQUIRE(rep.c_i.size() == static_cast<std::size_t>(mesh.num_cells()));
  for (double ci : rep.c_i) {
    CHECK(ci > 0.0);
    CHECK(ci <= rep.c_i_max);
  }
  CHECK(rep.c_1 == doctest::Approx(10.0 * (1 + rep.c_i_max) * (1 + rep.c_i_max)));
  CHECK(rep.alpha_min == doctest::Approx(4.0 * rep.c_1));  // delta=1, C=1/2
}

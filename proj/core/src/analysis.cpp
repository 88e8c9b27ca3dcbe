// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/analysis.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "polydg/quadrature.hpp"

namespace polydg {

ErrorTriple errors(const DiscreteFunction& u_h, const ScalarField& u_exact,
                   const VectorField& grad_exact, double alpha, int quad_order) {
  const Mesh& mesh = *u_h.mesh;
  double l2_sq = 0.0, h1_sq = 0.0, avg_sq = 0.0, jump_sq = 0.0;

  for (int k = 0; k < mesh.num_cells(); ++k)
    for (const MappedPoint& q : cell_points(mesh.cell_polygon(k), quad_order)) {
      const double d = u_exact(q.p) - u_h.eval(k, q.p);
      const auto ge = grad_exact(q.p);
      const auto gh = u_h.eval_grad(k, q.p);
      l2_sq += q.w * d * d;
      h1_sq += q.w * ((ge[0] - gh[0]) * (ge[0] - gh[0]) + (ge[1] - gh[1]) * (ge[1] - gh[1]));
    }

  for (const Interface& e : mesh.interfaces)
    for (const MappedPoint& q : edge_points(e.a, e.b, quad_order)) {
      const auto ge = grad_exact(q.p);
      if (e.interior()) {
        const auto g1 = u_h.eval_grad(e.k1, q.p);
        const auto g2 = u_h.eval_grad(e.k2, q.p);
        const double ax = ge[0] - 0.5 * (g1[0] + g2[0]);
        const double ay = ge[1] - 0.5 * (g1[1] + g2[1]);
        avg_sq += q.w * e.length * (ax * ax + ay * ay);
        // [u - u_h] = -[u_h] since the exact solution is continuous.
        const double j = u_h.eval(e.k1, q.p) - u_h.eval(e.k2, q.p);
        jump_sq += q.w / e.length * j * j;
      } else {
        const auto g1 = u_h.eval_grad(e.k1, q.p);
        const double ax = ge[0] - g1[0];
        const double ay = ge[1] - g1[1];
        avg_sq += q.w * e.length * (ax * ax + ay * ay);
        const double j = u_exact(q.p) - u_h.eval(e.k1, q.p);
        jump_sq += q.w / e.length * j * j;
      }
    }

  ErrorTriple t;
  t.l2 = std::sqrt(l2_sq);
  t.h1_broken = std::sqrt(h1_sq);
  t.energy = std::sqrt(h1_sq + avg_sq + alpha * jump_sq);
  return t;
}

double EnergyParts::triple_norm(double alpha) const {
  return std::sqrt(grad_sq + avg_sq + alpha * jump_sq);
}

EnergyParts energy_parts(const DiscreteFunction& v, int quad_order) {
  const Mesh& mesh = *v.mesh;
  if (quad_order < 0) quad_order = 2 * v.dofs.degree + 3;
  EnergyParts parts;

  for (int k = 0; k < mesh.num_cells(); ++k)
    for (const MappedPoint& q : cell_points(mesh.cell_polygon(k), quad_order)) {
      const auto g = v.eval_grad(k, q.p);
      parts.grad_sq += q.w * (g[0] * g[0] + g[1] * g[1]);
    }

  for (const Interface& e : mesh.interfaces)
    for (const MappedPoint& q : edge_points(e.a, e.b, quad_order)) {
      if (e.interior()) {
        const auto g1 = v.eval_grad(e.k1, q.p);
        const auto g2 = v.eval_grad(e.k2, q.p);
        const double ax = 0.5 * (g1[0] + g2[0]);
        const double ay = 0.5 * (g1[1] + g2[1]);
        parts.avg_sq += q.w * e.length * (ax * ax + ay * ay);
        const double j = v.eval(e.k1, q.p) - v.eval(e.k2, q.p);
        parts.jump_sq += q.w / e.length * j * j;
      } else {
        const auto g1 = v.eval_grad(e.k1, q.p);
        parts.avg_sq += q.w * e.length * (g1[0] * g1[0] + g1[1] * g1[1]);
        const double j = v.eval(e.k1, q.p);
        parts.jump_sq += q.w / e.length * j * j;
      }
    }
  return parts;
}

ConvergenceReport fit_rates(std::vector<ConvergenceLevel> levels) {
  if (levels.size() < 2) throw std::invalid_argument("fit_rates: need at least 2 levels");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!(levels[i].h < levels[i - 1].h))
      throw std::invalid_argument("fit_rates: levels must have strictly decreasing h");

  ConvergenceReport rep;
  rep.levels = std::move(levels);

  auto fit = [&](auto get) {
    RateFit f;
    std::vector<double> lh, le;
    for (std::size_t i = 0; i < rep.levels.size(); ++i) {
      const double e = get(rep.levels[i].err);
      if (e <= 0.0) {
        rep.excluded_levels.push_back(static_cast<int>(i));
        continue;
      }
      lh.push_back(std::log(rep.levels[i].h));
      le.push_back(std::log(e));
    }
    for (std::size_t i = 0; i + 1 < lh.size(); ++i)
      f.pairwise.push_back((le[i] - le[i + 1]) / (lh[i] - lh[i + 1]));
    if (lh.size() >= 2) {
      double mx = 0.0, my = 0.0;
      for (std::size_t i = 0; i < lh.size(); ++i) {
        mx += lh[i];
        my += le[i];
      }
      mx /= static_cast<double>(lh.size());
      my /= static_cast<double>(lh.size());
      double sxy = 0.0, sxx = 0.0;
      for (std::size_t i = 0; i < lh.size(); ++i) {
        sxy += (lh[i] - mx) * (le[i] - my);
        sxx += (lh[i] - mx) * (lh[i] - mx);
      }
      f.fitted = sxy / sxx;
      f.valid = true;
    }
    return f;
  };

  rep.rate_l2 = fit([](const ErrorTriple& e) { return e.l2; });
  rep.rate_h1 = fit([](const ErrorTriple& e) { return e.h1_broken; });
  rep.rate_energy = fit([](const ErrorTriple& e) { return e.energy; });
  return rep;
}

double inverse_constant(const Mesh& mesh, int cell, int degree) {
  if (cell < 0 || cell >= mesh.num_cells())
    throw std::out_of_range("inverse_constant: cell id out of range");
  const LocalBasis basis(mesh, cell, degree);
  const int dim = basis.dim();
  if (degree == 0) return 0.0;  // gradients vanish on constants

  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd stiff = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<double> phi(dim);
  std::vector<std::array<double, 2>> gphi(dim);
  for (const MappedPoint& q : cell_points(mesh.cell_polygon(cell), 2 * degree + 2)) {
    basis.eval_all(q.p, phi);
    basis.grad_all(q.p, gphi);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        mass(i, j) += q.w * phi[i] * phi[j];
        stiff(i, j) += q.w * (gphi[i][0] * gphi[j][0] + gphi[i][1] * gphi[j][1]);
      }
  }

  const Eigen::LLT<Eigen::MatrixXd> llt(mass);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("inverse_constant: singular mass matrix on cell " +
                             std::to_string(cell));

  // Shifted power iteration on M^{-1} S + I; the shift keeps the iteration
  // well-defined when S is rank deficient (constants in the basis).
  Eigen::VectorXd x(dim);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < dim; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    x(i) = 0.5 + static_cast<double>(state >> 11) / 9.007199254740992e15;
  }
  x.normalize();
  double lambda = 0.0;
  bool converged = false;
  for (int it = 0; it < 2000; ++it) {
    Eigen::VectorXd y = llt.solve(stiff * x) + x;
    y.normalize();
    const double num = y.dot(stiff * y);
    const double den = y.dot(mass * y);
    const double next = num / den;
    if (std::abs(next - lambda) <= 1e-10 * std::max(1.0, std::abs(next))) {
      lambda = next;
      converged = true;
      break;
    }
    lambda = next;
    x = y;
  }
  if (!converged) throw std::runtime_error("inverse_constant: power iteration stagnated");
  return mesh.cells[cell].diameter * std::sqrt(std::max(lambda, 0.0));
}

double penalty_threshold(double c_t, double c_i, int delta, double c) {
  if (!(c > 0.0 && c < 1.0))
    throw std::invalid_argument("penalty_threshold: C must lie in (0,1)");
  if (!(c_t > 0.0) || c_i < 0.0)
    throw std::invalid_argument("penalty_threshold: require C_T > 0 and C_I >= 0");
  const double c1 = c_t * (1.0 + c_i) * (1.0 + c_i);
  const double d = 1.0 + delta;
  return d * d * c1 / (4.0 * (1.0 - c) * (1.0 - c));
}

ConstantsReport constants_report(const Mesh& mesh, int degree, double c_t, int delta, double c) {
  ConstantsReport rep;
  rep.c_i.reserve(mesh.cells.size());
  for (int k = 0; k < mesh.num_cells(); ++k) {
    rep.c_i.push_back(inverse_constant(mesh, k, degree));
    rep.c_i_max = std::max(rep.c_i_max, rep.c_i.back());
  }
  rep.c_1 = c_t * (1.0 + rep.c_i_max) * (1.0 + rep.c_i_max);
  rep.alpha_min = penalty_threshold(c_t, rep.c_i_max, delta, c);
  return rep;
}

}  // namespace polydg

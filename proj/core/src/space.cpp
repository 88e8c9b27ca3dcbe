// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/space.hpp"

#include <Eigen/Dense>

#include <stdexcept>

#include "polydg/quadrature.hpp"

namespace polydg {

LocalBasis::LocalBasis(Point center, double scale, int degree)
    : center_(center), scale_(scale), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("LocalBasis: negative degree");
  exps_.reserve(dimension(degree));
  for (int d = 0; d <= degree; ++d)
    for (int a = d; a >= 0; --a) exps_.emplace_back(a, d - a);
}

LocalBasis::LocalBasis(const Mesh& mesh, int cell, int degree)
    : LocalBasis(mesh.cells[cell].centroid, mesh.cells[cell].diameter, degree) {}

namespace {
inline double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}
}  // namespace

double LocalBasis::eval(int i, Point p) const {
  const auto [a, b] = exps_[i];
  const double X = (p.x - center_.x) / scale_;
  const double Y = (p.y - center_.y) / scale_;
  return ipow(X, a) * ipow(Y, b);
}

std::array<double, 2> LocalBasis::grad(int i, Point p) const {
  const auto [a, b] = exps_[i];
  const double X = (p.x - center_.x) / scale_;
  const double Y = (p.y - center_.y) / scale_;
  return {a == 0 ? 0.0 : a * ipow(X, a - 1) * ipow(Y, b) / scale_,
          b == 0 ? 0.0 : b * ipow(X, a) * ipow(Y, b - 1) / scale_};
}

void LocalBasis::eval_all(Point p, std::span<double> out) const {
  const double X = (p.x - center_.x) / scale_;
  const double Y = (p.y - center_.y) / scale_;
  for (int i = 0; i < dim(); ++i) {
    const auto [a, b] = exps_[i];
    out[i] = ipow(X, a) * ipow(Y, b);
  }
}

void LocalBasis::grad_all(Point p, std::span<std::array<double, 2>> out) const {
  const double X = (p.x - center_.x) / scale_;
  const double Y = (p.y - center_.y) / scale_;
  for (int i = 0; i < dim(); ++i) {
    const auto [a, b] = exps_[i];
    out[i] = {a == 0 ? 0.0 : a * ipow(X, a - 1) * ipow(Y, b) / scale_,
              b == 0 ? 0.0 : b * ipow(X, a) * ipow(Y, b - 1) / scale_};
  }
}

double DiscreteFunction::eval(int cell, Point p) const {
  if (cell < 0 || cell >= mesh->num_cells())
    throw std::out_of_range("DiscreteFunction::eval: cell id out of range");
  const LocalBasis basis(*mesh, cell, dofs.degree);
  const auto c = cell_coeffs(cell);
  double v = 0.0;
  for (int i = 0; i < basis.dim(); ++i) v += c[i] * basis.eval(i, p);
  return v;
}

std::array<double, 2> DiscreteFunction::eval_grad(int cell, Point p) const {
  if (cell < 0 || cell >= mesh->num_cells())
    throw std::out_of_range("DiscreteFunction::eval_grad: cell id out of range");
  const LocalBasis basis(*mesh, cell, dofs.degree);
  const auto c = cell_coeffs(cell);
  std::array<double, 2> g{0.0, 0.0};
  for (int i = 0; i < basis.dim(); ++i) {
    const auto gi = basis.grad(i, p);
    g[0] += c[i] * gi[0];
    g[1] += c[i] * gi[1];
  }
  return g;
}

DiscreteFunction l2_project(const ScalarField& f, const Mesh& mesh, int degree, int quad_order) {
  if (quad_order < 0) quad_order = 2 * degree + 2;
  DiscreteFunction df(mesh, degree);
  const int dim = df.dofs.block_dim();
  Eigen::MatrixXd M(dim, dim);
  Eigen::VectorXd b(dim);
  std::vector<double> phi(dim);

  for (int k = 0; k < mesh.num_cells(); ++k) {
    const LocalBasis basis(mesh, k, degree);
    M.setZero();
    b.setZero();
    for (const MappedPoint& q : cell_points(mesh.cell_polygon(k), quad_order)) {
      basis.eval_all(q.p, phi);
      const double fq = f(q.p);
      for (int i = 0; i < dim; ++i) {
        b(i) += q.w * fq * phi[i];
        for (int j = 0; j <= i; ++j) M(i, j) += q.w * phi[i] * phi[j];
      }
    }
    M = M.selfadjointView<Eigen::Lower>();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(M);
    if (ldlt.info() != Eigen::Success)
      throw std::runtime_error("l2_project: singular local mass matrix on cell " +
                               std::to_string(k));
    Eigen::VectorXd c = ldlt.solve(b);
    for (int i = 0; i < dim; ++i) df.coeffs[df.dofs.offset(k) + i] = c(i);
  }
  return df;
}

}  // namespace polydg

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/assembly.hpp"

#include <stdexcept>
#include <vector>

#include "polydg/quadrature.hpp"

namespace polydg {

void DGParams::validate() const {
  if (delta != -1 && delta != 0 && delta != 1)
    throw std::invalid_argument("DGParams: delta must be -1, 0 or +1");
  if (!(alpha > 0.0)) throw std::invalid_argument("DGParams: alpha must be positive");
  if (degree < 0) throw std::invalid_argument("DGParams: degree must be non-negative");
}

namespace {

struct SideTrace {
  int cell;
  Point normal;                                     // outward from this side
  std::vector<double> phi;                          // dim values per quad point, flattened
  std::vector<std::array<double, 2>> grad;
};

}  // namespace

SparseSystem assemble(const Mesh& mesh, const DGParams& params, const ScalarField& f,
                      const ScalarField& g) {
  params.validate();
  if (mesh.num_cells() == 0) throw std::invalid_argument("assemble: empty mesh");

  const int n = params.degree;
  const int dim = LocalBasis::dimension(n);
  const int vol_order = 2 * n + 2;
  const int edge_order = 2 * n + 3;
  const DofMap dofs{n, mesh.num_cells()};

  SparseSystem sys;
  sys.symmetric = (params.delta == 1);
  sys.rhs.assign(dofs.total(), 0.0);
  sys.block_offsets.resize(mesh.num_cells() + 1);
  for (int k = 0; k <= mesh.num_cells(); ++k) sys.block_offsets[k] = k * dim;

  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(mesh.num_cells() + 4 * mesh.num_interfaces()) * dim *
                   dim);

  // Volume terms: (grad phi_j, grad phi_i)_K and (f, phi_i)_K.
  std::vector<double> phi(dim);
  std::vector<std::array<double, 2>> gphi(dim);
  for (int k = 0; k < mesh.num_cells(); ++k) {
    const LocalBasis basis(mesh, k, n);
    const int off = dofs.offset(k);
    std::vector<double> local(static_cast<std::size_t>(dim) * dim, 0.0);
    for (const MappedPoint& q : cell_points(mesh.cell_polygon(k), vol_order)) {
      basis.grad_all(q.p, gphi);
      basis.eval_all(q.p, phi);
      const double fq = f(q.p);
      for (int i = 0; i < dim; ++i) {
        sys.rhs[off + i] += q.w * fq * phi[i];
        for (int j = 0; j < dim; ++j)
          local[i * dim + j] += q.w * (gphi[i][0] * gphi[j][0] + gphi[i][1] * gphi[j][1]);
      }
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) triplets.push_back({off + i, off + j, local[i * dim + j]});
  }

  // Interface terms over all e, boundary included.
  for (const Interface& e : mesh.interfaces) {
    const auto qpts = edge_points(e.a, e.b, edge_order);
    const std::size_t nq = qpts.size();
    const int nsides = e.interior() ? 2 : 1;
    const double avg = e.interior() ? 0.5 : 1.0;
    const double pen = params.alpha / e.length;

    SideTrace sides[2];
    for (int s = 0; s < nsides; ++s) {
      SideTrace& t = sides[s];
      t.cell = (s == 0) ? e.k1 : e.k2;
      t.normal = (s == 0) ? e.normal : Point{-e.normal.x, -e.normal.y};
      t.phi.resize(nq * dim);
      t.grad.resize(nq * dim);
      const LocalBasis basis(mesh, t.cell, n);
      for (std::size_t q = 0; q < nq; ++q) {
        basis.eval_all(qpts[q].p, std::span(t.phi).subspan(q * dim, dim));
        basis.grad_all(qpts[q].p, std::span(t.grad).subspan(q * dim, dim));
      }
    }

    for (int si = 0; si < nsides; ++si)
      for (int sj = 0; sj < nsides; ++sj) {
        const SideTrace& ti = sides[si];
        const SideTrace& tj = sides[sj];
        const double nn = dot(ti.normal, tj.normal);  // +1 same side, -1 across
        const int row0 = dofs.offset(ti.cell);
        const int col0 = dofs.offset(tj.cell);
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) {
            double v = 0.0;
            for (std::size_t q = 0; q < nq; ++q) {
              const double pi = ti.phi[q * dim + i];
              const double pj = tj.phi[q * dim + j];
              const auto& gi = ti.grad[q * dim + i];
              const auto& gj = tj.grad[q * dim + j];
              const double dn_j = gj[0] * ti.normal.x + gj[1] * ti.normal.y;
              const double dn_i = gi[0] * tj.normal.x + gi[1] * tj.normal.y;
              v += qpts[q].w *
                   (-avg * dn_j * pi - params.delta * avg * dn_i * pj + pen * nn * pi * pj);
            }
            triplets.push_back({row0 + i, col0 + j, v});
          }
      }

    // Nitsche boundary data: alpha/h_e <g, phi_i>_e - delta <grad phi_i . n, g>_e.
    if (!e.interior()) {
      const SideTrace& t = sides[0];
      const int row0 = dofs.offset(t.cell);
      for (std::size_t q = 0; q < nq; ++q) {
        const double gq = g(qpts[q].p);
        if (gq == 0.0) continue;
        for (int i = 0; i < dim; ++i) {
          const auto& gi = t.grad[q * dim + i];
          const double dn_i = gi[0] * t.normal.x + gi[1] * t.normal.y;
          sys.rhs[row0 + i] +=
              qpts[q].w * (pen * gq * t.phi[q * dim + i] - params.delta * dn_i * gq);
        }
      }
    }
  }

  sys.matrix = CsrMatrix::from_triplets(dofs.total(), std::move(triplets));
  return sys;
}

double apply_bilinear(const DiscreteFunction& u, const DiscreteFunction& v,
                      const DGParams& params) {
  params.validate();
  if (u.mesh != v.mesh || u.dofs.degree != v.dofs.degree)
    throw std::invalid_argument("apply_bilinear: u and v live on different spaces");
  const Mesh& mesh = *u.mesh;
  const int n = u.dofs.degree;
  const int vol_order = 2 * n + 2;
  const int edge_order = 2 * n + 3;

  double acc = 0.0;
  for (int k = 0; k < mesh.num_cells(); ++k)
    for (const MappedPoint& q : cell_points(mesh.cell_polygon(k), vol_order)) {
      const auto gu = u.eval_grad(k, q.p);
      const auto gv = v.eval_grad(k, q.p);
      acc += q.w * (gu[0] * gv[0] + gu[1] * gv[1]);
    }

  for (const Interface& e : mesh.interfaces) {
    const double avg = e.interior() ? 0.5 : 1.0;
    for (const MappedPoint& q : edge_points(e.a, e.b, edge_order)) {
      std::array<double, 2> mean_gu{0, 0}, mean_gv{0, 0}, jump_u{0, 0}, jump_v{0, 0};
      const int nsides = e.interior() ? 2 : 1;
      for (int s = 0; s < nsides; ++s) {
        const int cell = (s == 0) ? e.k1 : e.k2;
        const Point nrm = (s == 0) ? e.normal : Point{-e.normal.x, -e.normal.y};
        const auto gu = u.eval_grad(cell, q.p);
        const auto gv = v.eval_grad(cell, q.p);
        mean_gu = {mean_gu[0] + avg * gu[0], mean_gu[1] + avg * gu[1]};
        mean_gv = {mean_gv[0] + avg * gv[0], mean_gv[1] + avg * gv[1]};
        const double uu = u.eval(cell, q.p);
        const double vv = v.eval(cell, q.p);
        jump_u = {jump_u[0] + uu * nrm.x, jump_u[1] + uu * nrm.y};
        jump_v = {jump_v[0] + vv * nrm.x, jump_v[1] + vv * nrm.y};
      }
      acc += q.w * (-(mean_gu[0] * jump_v[0] + mean_gu[1] * jump_v[1]) -
                    params.delta * (mean_gv[0] * jump_u[0] + mean_gv[1] * jump_u[1]) +
                    params.alpha / e.length * (jump_u[0] * jump_v[0] + jump_u[1] * jump_v[1]));
    }
  }
  return acc;
}

}  // namespace polydg

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace polydg {

namespace {

// Inverses of the per-cell diagonal blocks. Falls back to point Jacobi
// (then identity) when no block layout is attached or a block is singular.
class BlockJacobi {
 public:
  BlockJacobi(const CsrMatrix& a, const std::vector<int>& offsets) {
    const int n = a.rows();
    if (offsets.size() >= 2 && offsets.front() == 0 && offsets.back() == n) {
      offsets_ = offsets;
    } else {
      offsets_.resize(n + 1);
      for (int i = 0; i <= n; ++i) offsets_[i] = i;
    }
    const auto row_offsets = a.row_offsets();
    const auto cols = a.col_indices();
    const auto vals = a.values();
    inv_.reserve(offsets_.size() - 1);
    for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) {
      const int lo = offsets_[b], hi = offsets_[b + 1];
      Eigen::MatrixXd block = Eigen::MatrixXd::Zero(hi - lo, hi - lo);
      for (int r = lo; r < hi; ++r)
        for (int i = row_offsets[r]; i < row_offsets[r + 1]; ++i)
          if (cols[i] >= lo && cols[i] < hi) block(r - lo, cols[i] - lo) = vals[i];
      Eigen::FullPivLU<Eigen::MatrixXd> lu(block);
      if (lu.isInvertible())
        inv_.push_back(lu.inverse());
      else
        inv_.push_back(Eigen::MatrixXd::Identity(hi - lo, hi - lo));
    }
  }

  void apply(std::span<const double> r, std::span<double> z) const {
    for (std::size_t b = 0; b + 1 < offsets_.size(); ++b) {
      const int lo = offsets_[b], hi = offsets_[b + 1];
      Eigen::Map<const Eigen::VectorXd> rb(r.data() + lo, hi - lo);
      Eigen::Map<Eigen::VectorXd> zb(z.data() + lo, hi - lo);
      zb = inv_[b] * rb;
    }
  }

 private:
  std::vector<int> offsets_;
  std::vector<Eigen::MatrixXd> inv_;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

SolveReport finish(const CsrMatrix& a, std::span<const double> b, SolveReport rep, double tol) {
  std::vector<double> r(b.size());
  a.multiply(rep.solution, r);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
  const double nb = norm2(b);
  rep.residual = (nb > 0.0) ? norm2(r) / nb : norm2(r);
  rep.converged = rep.residual <= tol;
  return rep;
}

// The recursive residual of CG drifts from b - Ax over many iterations, so
// convergence is confirmed against a freshly computed residual; if the true
// residual still exceeds tol the iteration restarts from the current
// iterate, and gives up once a restart stops making progress.
SolveReport solve_cg(const CsrMatrix& a, std::span<const double> b, const BlockJacobi& prec,
                     double tol, int maxit) {
  const std::size_t n = b.size();
  SolveReport rep;
  rep.method = "cg";
  rep.solution.assign(n, 0.0);

  const double nb = norm2(b);
  if (nb == 0.0) return finish(a, b, std::move(rep), tol);

  std::vector<double> r(n), z(n), p(n), ap(n);
  double previous_true = std::numeric_limits<double>::max();
  while (rep.iterations < maxit) {
    a.multiply(rep.solution, r);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    const double true_res = norm2(r) / nb;
    if (true_res <= tol || true_res >= 0.9 * previous_true) break;
    previous_true = true_res;

    prec.apply(r, z);
    p = z;
    double rz = dot(r, z);
    while (rep.iterations < maxit) {
      a.multiply(p, ap);
      const double pap = dot(p, ap);
      if (pap <= 0.0)
        throw NotPositiveDefiniteError(
            "cg: matrix not positive definite -- penalty alpha likely below the coercivity "
            "threshold");
      const double step = rz / pap;
      axpy(step, p, rep.solution);
      axpy(-step, ap, r);
      ++rep.iterations;
      if (norm2(r) / nb <= tol) break;
      prec.apply(r, z);
      const double rz_next = dot(r, z);
      if (rz_next <= 0.0) break;  // rounding breakdown; refresh and retry
      const double beta = rz_next / rz;
      rz = rz_next;
      for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
  }
  return finish(a, b, std::move(rep), tol);
}

SolveReport solve_bicgstab(const CsrMatrix& a, std::span<const double> b, const BlockJacobi& prec,
                           double tol, int maxit) {
  const std::size_t n = b.size();
  SolveReport rep;
  rep.method = "bicgstab";
  rep.solution.assign(n, 0.0);

  const double nb = norm2(b);
  if (nb == 0.0) return finish(a, b, std::move(rep), tol);

  std::vector<double> r(n), p(n), v(n), phat(n), shat(n), s(n), t(n);
  double previous_true = std::numeric_limits<double>::max();
  while (rep.iterations < maxit) {
    a.multiply(rep.solution, r);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
    const double true_res = norm2(r) / nb;
    if (true_res <= tol || true_res >= 0.9 * previous_true) break;
    previous_true = true_res;

    const std::vector<double> r0 = r;
    double rho = 1.0, alpha = 1.0, omega = 1.0;
    bool first = true;
    while (rep.iterations < maxit) {
      const double rho_next = dot(r0, r);
      if (rho_next == 0.0) break;  // Lanczos breakdown; refresh and retry
      if (first) {
        p = r;
        first = false;
      } else {
        const double beta = (rho_next / rho) * (alpha / omega);
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
      }
      rho = rho_next;
      prec.apply(p, phat);
      a.multiply(phat, v);
      const double r0v = dot(r0, v);
      if (r0v == 0.0) break;
      alpha = rho / r0v;
      for (std::size_t i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
      ++rep.iterations;
      if (norm2(s) / nb <= tol) {
        axpy(alpha, phat, rep.solution);
        break;
      }
      prec.apply(s, shat);
      a.multiply(shat, t);
      const double tt = dot(t, t);
      if (tt == 0.0) break;
      omega = dot(t, s) / tt;
      for (std::size_t i = 0; i < n; ++i) {
        rep.solution[i] += alpha * phat[i] + omega * shat[i];
        r[i] = s[i] - omega * t[i];
      }
      if (norm2(r) / nb <= tol || omega == 0.0) break;
    }
  }
  return finish(a, b, std::move(rep), tol);
}

}  // namespace

SolveReport solve(const SparseSystem& system, double tol, int maxit) {
  const int n = system.matrix.rows();
  if (n == 0) throw std::invalid_argument("solve: empty system");
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("solve: tol must be in (0,1)");
  if (maxit < 0) maxit = 10 * n;
  if (maxit < 1) throw std::invalid_argument("solve: maxit must be >= 1");

  const BlockJacobi prec(system.matrix, system.block_offsets);
  return system.symmetric ? solve_cg(system.matrix, system.rhs, prec, tol, maxit)
                          : solve_bicgstab(system.matrix, system.rhs, prec, tol, maxit);
}

}  // namespace polydg

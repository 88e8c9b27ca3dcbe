// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polydg/assembly.hpp"

namespace polydg {

// CG hit a direction of non-positive curvature: the matrix is not positive
// definite, which for delta = 1 means the penalty is below the coercivity
// threshold.
struct NotPositiveDefiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveReport {
  std::vector<double> solution;
  int iterations = 0;
  double residual = 0.0;  // relative, recomputed from scratch at exit
  bool converged = false;
  std::string method;  // "cg" or "bicgstab"
};

// Iterative solve with block-Jacobi preconditioning (exact inverses of the
// per-cell diagonal blocks). Uses CG when the system is flagged symmetric,
// BiCGStab otherwise. maxit < 0 selects 10x the dof count. Exceeding maxit
// yields a non-converged report; indefiniteness under CG throws.
SolveReport solve(const SparseSystem& system, double tol = 1e-10, int maxit = -1);

}  // namespace polydg

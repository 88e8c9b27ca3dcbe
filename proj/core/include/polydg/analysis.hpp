// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <vector>

#include "polydg/mesh.hpp"
#include "polydg/space.hpp"

namespace polydg {

struct ErrorTriple {
  double l2 = 0.0;
  double h1_broken = 0.0;
  double energy = 0.0;
};

// L2, broken H1 and energy norms of u - u_h for a manufactured exact
// solution with evaluable gradient. The exact u is continuous, so its
// interior jumps vanish; on the boundary the jump is (u - u_h) n.
//   energy^2 = h1^2 + sum_e h_e ||{grad(u-u_h)}||_e^2
//            + alpha sum_e 1/h_e ||[u-u_h]||_e^2.
ErrorTriple errors(const DiscreteFunction& u_h, const ScalarField& u_exact,
                   const VectorField& grad_exact, double alpha, int quad_order = 7);

// The three terms of the energy norm of a discrete function:
//   grad_sq = sum_K ||grad v||_K^2
//   avg_sq  = sum_e h_e ||{grad v}||_e^2
//   jump_sq = sum_e 1/h_e ||[v]||_e^2   (alpha not applied)
struct EnergyParts {
  double grad_sq = 0.0;
  double avg_sq = 0.0;
  double jump_sq = 0.0;

  double triple_norm(double alpha) const;
};
EnergyParts energy_parts(const DiscreteFunction& v, int quad_order = -1);

struct ConvergenceLevel {
  double h = 0.0;
  int cells = 0;
  int dofs = 0;
  ErrorTriple err;
  int iterations = 0;
};

struct RateFit {
  std::vector<double> pairwise;  // log(e_i/e_{i+1}) / log(h_i/h_{i+1})
  double fitted = 0.0;           // least-squares slope of log e vs log h
  bool valid = false;            // false when < 2 usable levels
};

struct ConvergenceReport {
  std::vector<ConvergenceLevel> levels;
  RateFit rate_l2, rate_h1, rate_energy;
  std::vector<int> excluded_levels;  // zero-error levels dropped from fits
};

// Pairwise and least-squares convergence rates; levels must be ordered by
// strictly decreasing h. Zero-error levels are excluded and flagged.
ConvergenceReport fit_rates(std::vector<ConvergenceLevel> levels);

// Tight discrete constant of the inverse inequality
// ||grad phi||_K <= C_I h_K^{-1} ||phi||_K on V_K: h_K * sqrt(lambda_max)
// with lambda_max the largest generalized eigenvalue of the local
// stiffness/mass pair, by shifted power iteration (tolerance 1e-10).
double inverse_constant(const Mesh& mesh, int cell, int degree);

// alpha_min = (1+delta)^2 C_1 / (4 (1-C)^2) with C_1 = C_T (1 + C_I)^2.
// Requires C in (0,1).
double penalty_threshold(double c_t, double c_i, int delta, double c);

struct ConstantsReport {
  std::vector<double> c_i;  // per cell
  double c_i_max = 0.0;
  double c_1 = 0.0;        // C_T (1 + C_I_max)^2
  double alpha_min = 0.0;  // heuristic lower bound: C_T is not computable
};
ConstantsReport constants_report(const Mesh& mesh, int degree, double c_t = 10.0, int delta = 1,
                                 double c = 0.5);

}  // namespace polydg

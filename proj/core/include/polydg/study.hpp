// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polydg/analysis.hpp"
#include "polydg/assembly.hpp"
#include "polydg/manufactured.hpp"

namespace polydg {

// A generate -> assemble -> solve -> measure sweep over refinement levels
// of one mesh family.
struct StudyConfig {
  std::string family = "dualhex";  // hybrid | dualhex
  std::vector<int> levels;         // generator n per level, strictly increasing
  DGParams params;
  std::string problem = "paper";
  double solver_tol = 1e-10;
  int error_quad_order = 7;
};

using LevelCallback = std::function<void(const ConvergenceLevel&)>;

// Runs the study and fits rates. Throws on invalid level lists and
// propagates solver errors.
ConvergenceReport run_study(const StudyConfig& config, const LevelCallback& on_level = {});

// ConvergenceReport as CSV with columns
//   h,cells,dofs,e_L2,e_H1,e_energy,rate_L2,rate_H1,rate_energy,iters
// (pairwise rates, blank on the first row) and a trailing comment line with
// the least-squares rates.
void save_convergence_csv(const ConvergenceReport& report, const std::string& path);

}  // namespace polydg

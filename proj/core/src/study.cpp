// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/study.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "polydg/generators.hpp"
#include "polydg/solver.hpp"

namespace polydg {

ConvergenceReport run_study(const StudyConfig& config, const LevelCallback& on_level) {
  if (config.levels.size() < 2)
    throw std::invalid_argument("run_study: need at least 2 levels");
  for (std::size_t i = 1; i < config.levels.size(); ++i)
    if (config.levels[i] <= config.levels[i - 1])
      throw std::invalid_argument("run_study: levels must strictly decrease h");

  const Problem& prob = problem_by_name(config.problem);
  std::vector<ConvergenceLevel> levels;
  levels.reserve(config.levels.size());
  for (int n : config.levels) {
    const Mesh mesh = generate_mesh(config.family, n);
    const SparseSystem sys = assemble(mesh, config.params, prob.f, prob.g);
    const SolveReport sol = solve(sys, config.solver_tol);
    if (!sol.converged)
      throw std::runtime_error("run_study: solver did not converge at level n=" +
                               std::to_string(n));
    DiscreteFunction u_h(mesh, config.params.degree);
    u_h.coeffs = sol.solution;

    ConvergenceLevel lvl;
    lvl.h = mesh.h;
    lvl.cells = mesh.num_cells();
    lvl.dofs = static_cast<int>(sol.solution.size());
    lvl.err = errors(u_h, prob.u, prob.grad_u, config.params.alpha, config.error_quad_order);
    lvl.iterations = sol.iterations;
    if (on_level) on_level(lvl);
    levels.push_back(lvl);
  }
  return fit_rates(std::move(levels));
}

void save_convergence_csv(const ConvergenceReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv file: " + path);
  out << "h,cells,dofs,e_L2,e_H1,e_energy,rate_L2,rate_H1,rate_energy,iters\n";
  char buf[512];
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const ConvergenceLevel& l = report.levels[i];
    std::snprintf(buf, sizeof(buf), "%.12g,%d,%d,%.12g,%.12g,%.12g", l.h, l.cells, l.dofs,
                  l.err.l2, l.err.h1_broken, l.err.energy);
    out << buf;
    // Pairwise rates against the previous level; blank when undefined.
    const ConvergenceLevel* prev = (i > 0) ? &report.levels[i - 1] : nullptr;
    auto rate = [&](double e, double ep) -> std::string {
      if (!prev || e <= 0.0 || ep <= 0.0) return "";
      std::snprintf(buf, sizeof(buf), "%.6g", std::log(ep / e) / std::log(prev->h / l.h));
      return buf;
    };
    out << "," << rate(l.err.l2, prev ? prev->err.l2 : 0.0)
        << "," << rate(l.err.h1_broken, prev ? prev->err.h1_broken : 0.0)
        << "," << rate(l.err.energy, prev ? prev->err.energy : 0.0);
    out << "," << l.iterations << "\n";
  }
  std::snprintf(buf, sizeof(buf), "# least-squares rates: L2=%.6g, H1=%.6g, energy=%.6g\n",
                report.rate_l2.fitted, report.rate_h1.fitted, report.rate_energy.fitted);
  out << buf;
}

}  // namespace polydg

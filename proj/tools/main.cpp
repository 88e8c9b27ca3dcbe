// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.
//
// polydg command line: mesh generation and auditing, single DG solves and
// convergence studies on polygonal meshes.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polydg/analysis.hpp"
#include "polydg/generators.hpp"
#include "polydg/manufactured.hpp"
#include "polydg/mesh_io.hpp"
#include "polydg/solver.hpp"
#include "polydg/study.hpp"
#include "polydg/svg_plot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

using nlohmann::json;

struct SolveOptions {
  std::string mesh_path;
  std::string out_path;
  int degree = 1;
  int delta = 1;
  double alpha = 10.0;
  std::string problem = "paper";
  double tol = 1e-10;
};

json params_json(const polydg::DGParams& p, const std::string& problem) {
  return {{"degree", p.degree}, {"delta", p.delta}, {"alpha", p.alpha}, {"problem", problem}};
}

int cmd_generate(const std::string& family, int n, const std::string& out) {
  const polydg::Mesh mesh = polydg::generate_mesh(family, n);
  polydg::save_mesh_json(mesh, out);
  std::printf("%s n=%d: %d cells, %d interfaces (%d interior, %d boundary), h=%.6g\n",
              family.c_str(), n, mesh.num_cells(), mesh.num_interfaces(),
              mesh.num_interior_interfaces(), mesh.num_boundary_interfaces(), mesh.h);
  std::printf("wrote %s\n", out.c_str());
  return kExitOk;
}

int cmd_solve(const SolveOptions& opt) {
  const polydg::Mesh mesh = polydg::load_mesh_json(opt.mesh_path);
  const polydg::DGParams params{opt.delta, opt.alpha, opt.degree};
  const polydg::Problem& prob = polydg::problem_by_name(opt.problem);

  json out;
  out["params"] = params_json(params, opt.problem);
  out["mesh"] = {{"cells", mesh.num_cells()}, {"interfaces", mesh.num_interfaces()},
                 {"h", mesh.h}};

  const polydg::SparseSystem sys = polydg::assemble(mesh, params, prob.f, prob.g);
  polydg::SolveReport sol;
  try {
    sol = polydg::solve(sys, opt.tol);
  } catch (const polydg::NotPositiveDefiniteError& err) {
    std::fprintf(stderr, "solver diagnostic: %s\n", err.what());
    out["error"] = err.what();
    std::ofstream(opt.out_path) << out.dump(1, '\t') << "\n";
    return kExitSolver;
  }

  polydg::DiscreteFunction u_h(mesh, params.degree);
  u_h.coeffs = sol.solution;
  const polydg::ErrorTriple err = polydg::errors(u_h, prob.u, prob.grad_u, params.alpha);

  out["solver"] = {{"method", sol.method},
                   {"iterations", sol.iterations},
                   {"residual", sol.residual},
                   {"converged", sol.converged}};
  out["errors"] = {{"l2", err.l2}, {"h1_broken", err.h1_broken}, {"energy", err.energy}};
  out["solution"] = {{"degree", params.degree},
                     {"cells", mesh.num_cells()},
                     {"dofs_per_cell", u_h.dofs.block_dim()},
                     {"total_dofs", u_h.dofs.total()},
                     {"coefficients", sol.solution}};
  std::ofstream(opt.out_path) << out.dump(1, '\t') << "\n";

  std::printf("%s: %s, %d iterations, residual %.3e\n", opt.mesh_path.c_str(),
              sol.method.c_str(), sol.iterations, sol.residual);
  std::printf("errors: L2 %.6e, H1 %.6e, energy %.6e\n", err.l2, err.h1_broken, err.energy);
  if (!sol.converged) {
    std::fprintf(stderr, "solver did not converge within max iterations\n");
    return kExitSolver;
  }
  return kExitOk;
}

int cmd_convergence(const polydg::StudyConfig& config, const std::string& csv_path,
                    const std::string& svg_path) {
  std::printf("%-10s %8s %9s %12s %12s %12s %6s\n", "h", "cells", "dofs", "e_L2", "e_H1",
              "e_energy", "iters");
  const polydg::ConvergenceReport rep =
      polydg::run_study(config, [](const polydg::ConvergenceLevel& l) {
        std::printf("%-10.5g %8d %9d %12.5e %12.5e %12.5e %6d\n", l.h, l.cells, l.dofs,
                    l.err.l2, l.err.h1_broken, l.err.energy, l.iterations);
        std::fflush(stdout);
      });
  std::printf("least-squares rates: L2 %.4f, H1 %.4f, energy %.4f\n", rep.rate_l2.fitted,
              rep.rate_h1.fitted, rep.rate_energy.fitted);
  polydg::save_convergence_csv(rep, csv_path);
  polydg::save_convergence_svg(rep, svg_path,
                               config.family + " / " + config.problem + " (degree " +
                                   std::to_string(config.params.degree) + ")");
  std::printf("wrote %s and %s\n", csv_path.c_str(), svg_path.c_str());
  return kExitOk;
}

int cmd_audit(const std::string& mesh_path, const std::string& out_path) {
  const polydg::Mesh mesh = polydg::load_mesh_json(mesh_path);
  const polydg::ShapeReport rep = polydg::audit_shape(mesh);
  polydg::save_audit_json(rep, mesh, out_path);
  std::printf("cells %d, interfaces %d, h %.6g\n", mesh.num_cells(), mesh.num_interfaces(),
              mesh.h);
  std::printf("rho_v %.6g (cell %d), kappa %.6g, sigma* %.6g, theta0 %.6g rad, "
              "a4 overlap proxy %d\n",
              rep.rho_v, rep.worst_rho_v_cell, rep.kappa, rep.sigma_star, rep.theta0,
              rep.a4_overlap_proxy);
  if (!rep.non_star_shaped_cells.empty())
    std::printf("warning: %zu cells not star-shaped about their centroid\n",
                rep.non_star_shaped_cells.size());
  std::printf("wrote %s\n", out_path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interior-penalty DG Poisson solver on general polygonal meshes"};
  app.require_subcommand(1);

  // generate
  std::string family, out_path;
  int level_n = 0;
  CLI::App* gen = app.add_subcommand("generate", "Generate a mesh family instance");
  gen->add_option("family", family, "Mesh family: hybrid | dualhex")->required();
  gen->add_option("n", level_n, "Refinement parameter")->required();
  gen->add_option("out", out_path, "Output mesh JSON path")->required();

  // solve
  SolveOptions sopt;
  CLI::App* slv = app.add_subcommand("solve", "Solve one manufactured problem on a mesh file");
  slv->add_option("mesh", sopt.mesh_path, "Input mesh JSON")->required();
  slv->add_option("out", sopt.out_path, "Output result JSON")->required();
  slv->add_option("--degree", sopt.degree, "Polynomial degree")->check(CLI::Range(1, 4));
  slv->add_option("--delta", sopt.delta, "DG variant: 1, 0 or -1")
      ->check(CLI::IsMember({-1, 0, 1}));
  slv->add_option("--alpha", sopt.alpha, "Penalty parameter");
  slv->add_option("--problem", sopt.problem, "Manufactured problem: paper | sinsin");
  slv->add_option("--tol", sopt.tol, "Solver relative tolerance");

  // convergence
  polydg::StudyConfig config;
  std::string csv_path, svg_path;
  CLI::App* cnv = app.add_subcommand("convergence", "Run a refinement study");
  cnv->add_option("family", config.family, "Mesh family: hybrid | dualhex")->required();
  cnv->add_option("csv", csv_path, "Output CSV path")->required();
  cnv->add_option("svg", svg_path, "Output SVG log-log plot path")->required();
  cnv->add_option("--levels", config.levels, "Generator n per level, increasing")
      ->required()
      ->expected(2, 16);
  cnv->add_option("--degree", config.params.degree, "Polynomial degree")->check(CLI::Range(1, 4));
  cnv->add_option("--delta", config.params.delta, "DG variant: 1, 0 or -1")
      ->check(CLI::IsMember({-1, 0, 1}));
  cnv->add_option("--alpha", config.params.alpha, "Penalty parameter");
  cnv->add_option("--problem", config.problem, "Manufactured problem: paper | sinsin");

  // audit
  std::string audit_mesh, audit_out;
  CLI::App* aud = app.add_subcommand("audit", "Shape-regularity audit of a mesh file");
  aud->add_option("mesh", audit_mesh, "Input mesh JSON")->required();
  aud->add_option("out", audit_out, "Output report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (family != "hybrid" && family != "dualhex") {
        std::cerr << "unknown family '" << family << "'\n\n" << gen->help();
        return kExitUsage;
      }
      return cmd_generate(family, level_n, out_path);
    }
    if (slv->parsed()) return cmd_solve(sopt);
    if (cnv->parsed()) return cmd_convergence(config, csv_path, svg_path);
    if (aud->parsed()) return cmd_audit(audit_mesh, audit_out);
  } catch (const polydg::NotPositiveDefiniteError& e) {
    std::cerr << "solver diagnostic: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

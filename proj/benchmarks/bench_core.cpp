// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include <benchmark/benchmark.h>

#include "polydg/analysis.hpp"
#include "polydg/generators.hpp"
#include "polydg/manufactured.hpp"
#include "polydg/shape_audit.hpp"
#include "polydg/solver.hpp"

using namespace polydg;

namespace {

void BM_GenerateDualHex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Mesh mesh = generate_dual_hex(n);
    benchmark::DoNotOptimize(mesh.h);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_GenerateDualHex)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_GenerateHybrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Mesh mesh = generate_hybrid(n);
    benchmark::DoNotOptimize(mesh.h);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_GenerateHybrid)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Assemble(benchmark::State& state) {
  const Mesh mesh = generate_dual_hex(static_cast<int>(state.range(0)));
  const Problem& prob = problem_by_name("sinsin");
  for (auto _ : state) {
    SparseSystem sys = assemble(mesh, {1, 10.0, 1}, prob.f, prob.g);
    benchmark::DoNotOptimize(sys.rhs.data());
  }
  state.counters["dofs"] = static_cast<double>(3 * mesh.num_cells());
}
BENCHMARK(BM_Assemble)->RangeMultiplier(2)->Range(8, 32);

void BM_Solve(benchmark::State& state) {
  const Mesh mesh = generate_dual_hex(static_cast<int>(state.range(0)));
  const Problem& prob = problem_by_name("sinsin");
  const SparseSystem sys = assemble(mesh, {1, 10.0, 1}, prob.f, prob.g);
  int iters = 0;
  for (auto _ : state) {
    SolveReport rep = solve(sys, 1e-10);
    iters = rep.iterations;
    benchmark::DoNotOptimize(rep.solution.data());
  }
  state.counters["iterations"] = iters;
}
BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(8, 32);

void BM_L2Project(benchmark::State& state) {
  const Mesh mesh = generate_dual_hex(static_cast<int>(state.range(0)));
  const Problem& prob = problem_by_name("paper");
  for (auto _ : state) {
    DiscreteFunction qf = l2_project(prob.u, mesh, 1);
    benchmark::DoNotOptimize(qf.coeffs.data());
  }
}
BENCHMARK(BM_L2Project)->RangeMultiplier(2)->Range(8, 32);

void BM_AuditShape(benchmark::State& state) {
  const Mesh mesh = generate_dual_hex(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ShapeReport rep = audit_shape(mesh);
    benchmark::DoNotOptimize(rep.kappa);
  }
}
BENCHMARK(BM_AuditShape)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();

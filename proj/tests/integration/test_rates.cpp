// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.
//
// Medium-size refinement studies: the discrete solution converges at the
// predicted orders (broken H1 at n, L2 at n+1) on both mesh families and
// for degrees 1 and 2.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polydg/study.hpp"

using namespace polydg;

namespace {

ConvergenceReport run(const std::string& family, int degree, const std::string& problem) {
  StudyConfig config;
  config.family = family;
  // Degree 1 needs the finer window: the L2 duality rate is preasymptotic
  // at n = 8 on the dual meshes.
  config.levels = degree == 1 ? std::vector<int>{16, 32, 64} : std::vector<int>{8, 16, 32};
  config.params = {1, 10.0, degree};
  config.problem = problem;
  return run_study(config);
}

}  // namespace

TEST_CASE("degree 1 converges at first order in H1 and second in L2") {
  for (const char* family : {"dualhex", "hybrid"}) {
    const ConvergenceReport rep = run(family, 1, "sinsin");
    INFO("family ", family, ": H1 ", rep.rate_h1.fitted, ", L2 ", rep.rate_l2.fitted);
    CHECK(rep.rate_h1.fitted == doctest::Approx(1.0).epsilon(0.15));
    CHECK(rep.rate_l2.fitted == doctest::Approx(2.0).epsilon(0.10));
    CHECK(rep.rate_energy.fitted == doctest::Approx(1.0).epsilon(0.20));
  }
}

TEST_CASE("degree 2 converges at second order in H1 and third in L2") {
  for (const char* family : {"dualhex", "hybrid"}) {
    const ConvergenceReport rep = run(family, 2, "sinsin");
    INFO("family ", family, ": H1 ", rep.rate_h1.fitted, ", L2 ", rep.rate_l2.fitted);
    CHECK(rep.rate_h1.fitted == doctest::Approx(2.0).epsilon(0.075));
    CHECK(rep.rate_l2.fitted == doctest::Approx(3.0).epsilon(0.067));
  }
}

TEST_CASE("both manufactured problems give the same orders on the hybrid mesh") {
  const ConvergenceReport paper = run("hybrid", 1, "paper");
  const ConvergenceReport sinsin = run("hybrid", 1, "sinsin");
  CHECK(paper.rate_h1.fitted == doctest::Approx(1.0).epsilon(0.15));
  CHECK(sinsin.rate_h1.fitted == doctest::Approx(1.0).epsilon(0.15));
  CHECK(paper.rate_l2.fitted == doctest::Approx(2.0).epsilon(0.10));
  CHECK(sinsin.rate_l2.fitted == doctest::Approx(2.0).epsilon(0.10));
}

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <string>
#include <vector>

#include "polydg/space.hpp"

namespace polydg {

// A manufactured Poisson problem -laplace(u) = f with Dirichlet data g on
// the unit square.
struct Problem {
  std::string name;
  ScalarField u;
  VectorField grad_u;
  ScalarField f;
  ScalarField g;  // boundary trace of u
};

// "paper":  u = sin(2 pi x) cos(2 pi y), f = 8 pi^2 u, g = u on the boundary
//           (nonzero on the horizontal sides).
// "sinsin": u = sin(2 pi x) sin(2 pi y), f = 8 pi^2 u, g = 0.
const Problem& problem_by_name(const std::string& name);
std::vector<std::string> problem_names();

}  // namespace polydg

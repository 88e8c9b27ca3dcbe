// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <string>

#include "polydg/analysis.hpp"

namespace polydg {

// Self-contained SVG log-log plot of the L2 and broken-H1 errors against h,
// with slope-1 and slope-2 reference triangles.
void save_convergence_svg(const ConvergenceReport& report, const std::string& path,
                          const std::string& title = "");

}  // namespace polydg

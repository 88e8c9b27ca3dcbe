// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/manufactured.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polydg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Problem make_paper() {
  Problem p;
  p.name = "paper";
  p.u = [](Point q) { return std::sin(kTwoPi * q.x) * std::cos(kTwoPi * q.y); };
  p.grad_u = [](Point q) {
    return std::array<double, 2>{kTwoPi * std::cos(kTwoPi * q.x) * std::cos(kTwoPi * q.y),
                                 -kTwoPi * std::sin(kTwoPi * q.x) * std::sin(kTwoPi * q.y)};
  };
  p.f = [](Point q) {
    return 8.0 * std::numbers::pi * std::numbers::pi * std::sin(kTwoPi * q.x) *
           std::cos(kTwoPi * q.y);
  };
  p.g = p.u;  // the trace does not vanish on y = 0 and y = 1
  return p;
}

Problem make_sinsin() {
  Problem p;
  p.name = "sinsin";
  p.u = [](Point q) { return std::sin(kTwoPi * q.x) * std::sin(kTwoPi * q.y); };
  p.grad_u = [](Point q) {
    return std::array<double, 2>{kTwoPi * std::cos(kTwoPi * q.x) * std::sin(kTwoPi * q.y),
                                 kTwoPi * std::sin(kTwoPi * q.x) * std::cos(kTwoPi * q.y)};
  };
  p.f = [](Point q) {
    return 8.0 * std::numbers::pi * std::numbers::pi * std::sin(kTwoPi * q.x) *
           std::sin(kTwoPi * q.y);
  };
  p.g = [](Point) { return 0.0; };
  return p;
}

}  // namespace

const Problem& problem_by_name(const std::string& name) {
  static const Problem paper = make_paper();
  static const Problem sinsin = make_sinsin();
  if (name == "paper") return paper;
  if (name == "sinsin") return sinsin;
  throw std::invalid_argument("unknown problem '" + name + "' (expected paper|sinsin)");
}

std::vector<std::string> problem_names() { return {"paper", "sinsin"}; }

}  // namespace polydg

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#pragma once

#include <string>

#include "polydg/mesh.hpp"
#include "polydg/shape_audit.hpp"

namespace polydg {

// Mesh file format: { "vertices": [[x,y],...], "cells": [[i0,i1,...],...] }.
// Interfaces are always recomputed on load, never serialized.
Mesh load_mesh_json(const std::string& path);
void save_mesh_json(const Mesh& mesh, const std::string& path);

// ShapeReport with worst-offender entity ids, as JSON.
void save_audit_json(const ShapeReport& report, const Mesh& mesh, const std::string& path);

}  // namespace polydg

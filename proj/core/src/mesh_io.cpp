// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/mesh_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace polydg {

using nlohmann::json;

Mesh load_mesh_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path);
  json j = json::parse(in);

  std::vector<Point> vertices;
  for (const auto& v : j.at("vertices"))
    vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  std::vector<std::vector<int>> cells;
  for (const auto& c : j.at("cells")) cells.push_back(c.get<std::vector<int>>());
  return build_mesh(std::move(vertices), std::move(cells));
}

void save_mesh_json(const Mesh& mesh, const std::string& path) {
  json j;
  j["vertices"] = json::array();
  for (const Point& p : mesh.vertices) j["vertices"].push_back({p.x, p.y});
  j["cells"] = json::array();
  for (const Cell& c : mesh.cells) j["cells"].push_back(c.vertex_ids);

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mesh file: " + path);
  out << j.dump(1, '\t') << "\n";
}

void save_audit_json(const ShapeReport& r, const Mesh& mesh, const std::string& path) {
  json j;
  j["cells"] = mesh.num_cells();
  j["interfaces"] = mesh.num_interfaces();
  j["h"] = mesh.h;
  j["rho_v"] = r.rho_v;
  j["rho_e"] = r.rho_e;
  j["kappa"] = r.kappa;
  j["sigma_star"] = r.sigma_star;
  j["theta0"] = r.theta0;
  j["a4_overlap_proxy"] = r.a4_overlap_proxy;
  j["worst_offenders"] = {
      {"rho_v_cell", r.worst_rho_v_cell},
      {"kappa_cell", r.worst_kappa_cell},
      {"kappa_interface", r.worst_kappa_interface},
      {"sigma_cell", r.worst_sigma_cell},
      {"sigma_interface", r.worst_sigma_interface},
      {"theta_cell", r.worst_theta_cell},
      {"theta_interface", r.worst_theta_interface},
  };
  j["non_star_shaped_cells"] = r.non_star_shaped_cells;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write audit file: " + path);
  out << j.dump(1, '\t') << "\n";
}

}  // namespace polydg

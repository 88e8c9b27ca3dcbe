// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>

namespace polydg {

int Mesh::num_interior_interfaces() const {
  int n = 0;
  for (const Interface& e : interfaces)
    if (e.interior()) ++n;
  return n;
}

std::vector<Point> Mesh::cell_polygon(int cell) const {
  std::vector<Point> poly;
  poly.reserve(cells[cell].vertex_ids.size());
  for (int v : cells[cell].vertex_ids) poly.push_back(vertices[v]);
  return poly;
}

double Mesh::total_area() const {
  double s = 0.0;
  for (const Cell& k : cells) s += k.area;
  return s;
}

namespace {

std::string segment_str(Point a, Point b) {
  return "(" + std::to_string(a.x) + "," + std::to_string(a.y) + ")-(" + std::to_string(b.x) +
         "," + std::to_string(b.y) + ")";
}

// Uniform hash grid over vertex positions for point queries.
class VertexGrid {
 public:
  VertexGrid(std::span<const Point> pts, double cell_size) : size_(cell_size) {
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
      buckets_[key(pts[i])].push_back(i);
  }

  template <class F>
  void for_each_in_box(Point lo, Point hi, F&& f) const {
    const std::int64_t ix0 = idx(lo.x), ix1 = idx(hi.x);
    const std::int64_t iy0 = idx(lo.y), iy1 = idx(hi.y);
    for (std::int64_t ix = ix0; ix <= ix1; ++ix)
      for (std::int64_t iy = iy0; iy <= iy1; ++iy) {
        auto it = buckets_.find(pack(ix, iy));
        if (it == buckets_.end()) continue;
        for (int v : it->second) f(v);
      }
  }

 private:
  std::int64_t idx(double x) const { return static_cast<std::int64_t>(std::floor(x / size_)); }
  static std::uint64_t pack(std::int64_t ix, std::int64_t iy) {
    return (static_cast<std::uint64_t>(ix) << 32) ^ static_cast<std::uint32_t>(iy);
  }
  std::uint64_t key(Point p) const { return pack(idx(p.x), idx(p.y)); }

  double size_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

struct HalfSegment {
  int va, vb;  // canonical vertex ids, in the cell's CCW traversal order
  int cell;
};

// Unify vertices that coincide within tol to one canonical id.
std::vector<int> canonical_vertex_map(std::span<const Point> pts, double tol) {
  std::vector<int> canon(pts.size());
  std::unordered_map<std::uint64_t, std::vector<int>> grid;
  auto idx = [&](double x) { return static_cast<std::int64_t>(std::floor(x / (4.0 * tol))); };
  auto pack = [](std::int64_t ix, std::int64_t iy) {
    return (static_cast<std::uint64_t>(ix) << 32) ^ static_cast<std::uint32_t>(iy);
  };
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    int found = -1;
    const std::int64_t ix = idx(pts[i].x), iy = idx(pts[i].y);
    for (std::int64_t dx = -1; dx <= 1 && found < 0; ++dx)
      for (std::int64_t dy = -1; dy <= 1 && found < 0; ++dy) {
        auto it = grid.find(pack(ix + dx, iy + dy));
        if (it == grid.end()) continue;
        for (int j : it->second)
          if (dist(pts[i], pts[j]) <= tol) {
            found = j;
            break;
          }
      }
    canon[i] = (found >= 0) ? canon[found] : i;
    if (found < 0) grid[pack(ix, iy)].push_back(i);
  }
  return canon;
}

}  // namespace

Mesh build_mesh(std::vector<Point> vertices, std::vector<std::vector<int>> cell_vertex_ids) {
  Mesh mesh;
  mesh.vertices = std::move(vertices);

  for (const Point& p : mesh.vertices)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw MeshError("build_mesh: non-finite vertex coordinate");

  // Domain extent drives every geometric tolerance below.
  Point lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
  Point hi{-lo.x, -lo.y};
  for (const Point& p : mesh.vertices) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double domain_diam = std::max(dist(lo, hi), 1e-300);
  const double tol = 1e-12 * domain_diam;

  // Cells: validate and cache geometry.
  mesh.cells.reserve(cell_vertex_ids.size());
  double min_edge = std::numeric_limits<double>::max();
  for (int k = 0; k < static_cast<int>(cell_vertex_ids.size()); ++k) {
    Cell cell;
    cell.vertex_ids = std::move(cell_vertex_ids[k]);
    if (cell.vertex_ids.size() < 3)
      throw MeshError("build_mesh: cell " + std::to_string(k) + " has fewer than 3 vertices");
    std::vector<Point> poly;
    poly.reserve(cell.vertex_ids.size());
    for (int v : cell.vertex_ids) {
      if (v < 0 || v >= static_cast<int>(mesh.vertices.size()))
        throw MeshError("build_mesh: cell " + std::to_string(k) + " references invalid vertex");
      poly.push_back(mesh.vertices[v]);
    }
    if (polygon_signed_area(poly) <= tol * tol)
      throw MeshError("build_mesh: cell " + std::to_string(k) + " is degenerate or clockwise");
    if (!polygon_is_simple(poly, tol))
      throw MeshError("build_mesh: cell " + std::to_string(k) + " is not a simple polygon");
    const CellGeometry g = cell_geometry(poly);
    cell.area = g.area;
    cell.diameter = g.diameter;
    cell.centroid = g.centroid;
    mesh.h = std::max(mesh.h, g.diameter);
    for (std::size_t i = 0; i < poly.size(); ++i)
      min_edge = std::min(min_edge, dist(poly[i], poly[(i + 1) % poly.size()]));
    mesh.cells.push_back(std::move(cell));
  }

  const std::vector<int> canon = canonical_vertex_map(mesh.vertices, tol);
  const VertexGrid grid(mesh.vertices, std::max(min_edge, 16.0 * tol));

  // Split every cell edge at mesh vertices lying in its interior (hanging
  // nodes), producing half-segments keyed by canonical endpoint ids.
  std::map<std::pair<int, int>, std::vector<HalfSegment>> groups;
  std::vector<std::pair<double, int>> splits;
  for (int k = 0; k < mesh.num_cells(); ++k) {
    const auto& vids = mesh.cells[k].vertex_ids;
    const std::size_t m = vids.size();
    for (std::size_t i = 0; i < m; ++i) {
      const int ia = vids[i], ib = vids[(i + 1) % m];
      const Point a = mesh.vertices[ia], b = mesh.vertices[ib];
      const Point d = b - a;
      const double len = norm(d);
      splits.clear();
      grid.for_each_in_box({std::min(a.x, b.x) - tol, std::min(a.y, b.y) - tol},
                           {std::max(a.x, b.x) + tol, std::max(a.y, b.y) + tol}, [&](int v) {
                             if (canon[v] != v) return;  // duplicates use their canonical twin
                             const Point p = mesh.vertices[v];
                             const double t = dot(p - a, d) / (len * len);
                             if (t * len <= tol || (1.0 - t) * len <= tol) return;
                             const Point foot = a + t * d;
                             if (dist(p, foot) <= tol) splits.emplace_back(t, v);
                           });
      std::sort(splits.begin(), splits.end());
      int prev = canon[ia];
      for (const auto& [t, v] : splits) {
        if (v == prev || v == canon[ib]) continue;
        auto key = std::minmax(prev, v);
        groups[{key.first, key.second}].push_back({prev, v, k});
        prev = v;
      }
      auto key = std::minmax(prev, canon[ib]);
      groups[{key.first, key.second}].push_back({prev, canon[ib], k});
    }
  }

  // Each half-segment group becomes one interface.
  for (const auto& [key, half] : groups) {
    const Point a = mesh.vertices[key.first];
    const Point b = mesh.vertices[key.second];
    if (half.size() > 2)
      throw MeshError("build_mesh: segment " + segment_str(a, b) + " shared by " +
                      std::to_string(half.size()) + " cells (tiling overlap)");
    Interface iface;
    iface.length = dist(a, b);
    if (iface.length <= tol)
      throw MeshError("build_mesh: degenerate interface at " + segment_str(a, b));
    if (half.size() == 2) {
      if (half[0].cell == half[1].cell)
        throw MeshError("build_mesh: cell " + std::to_string(half[0].cell) +
                        " touches itself along " + segment_str(a, b));
      if (half[0].va == half[1].va)  // same traversal direction: same side
        throw MeshError("build_mesh: cells " + std::to_string(half[0].cell) + " and " +
                        std::to_string(half[1].cell) + " overlap along " + segment_str(a, b));
      iface.kind = InterfaceKind::interior;
      iface.k1 = half[0].cell;
      iface.k2 = half[1].cell;
      iface.a = mesh.vertices[half[0].va];
      iface.b = mesh.vertices[half[0].vb];
    } else {
      iface.kind = InterfaceKind::boundary;
      iface.k1 = half[0].cell;
      iface.a = mesh.vertices[half[0].va];
      iface.b = mesh.vertices[half[0].vb];
    }
    // CCW traversal of k1 puts its outward normal 90 degrees clockwise
    // from the edge direction.
    const Point t = iface.b - iface.a;
    iface.normal = {t.y / iface.length, -t.x / iface.length};
    mesh.interfaces.push_back(iface);
  }

  // Merge collinear adjacent interfaces of the same cell pair so each
  // interface is the maximal common sub-segment (one e per K1,K2 pair and
  // per straight boundary run).
  {
    auto pair_key = [](const Interface& e) {
      return e.interior() ? std::pair<int, int>{std::min(e.k1, e.k2), std::max(e.k1, e.k2)}
                          : std::pair<int, int>{e.k1, -1};
    };
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_pair;
    for (std::size_t i = 0; i < mesh.interfaces.size(); ++i)
      by_pair[pair_key(mesh.interfaces[i])].push_back(i);
    std::vector<bool> dead(mesh.interfaces.size(), false);
    for (auto& [key, ids] : by_pair) {
      if (ids.size() < 2) continue;
      bool merged = true;
      while (merged) {
        merged = false;
        for (std::size_t i = 0; i < ids.size() && !merged; ++i) {
          if (dead[ids[i]]) continue;
          for (std::size_t j = i + 1; j < ids.size() && !merged; ++j) {
            if (dead[ids[j]]) continue;
            Interface& e1 = mesh.interfaces[ids[i]];
            Interface& e2 = mesh.interfaces[ids[j]];
            if (std::abs(cross(e1.normal, e2.normal)) > 1e-12) continue;
            // Chain them if they share an endpoint.
            const Point n1 = e1.normal;  // outward from e1.k1, preserved by the merge
            Point* ends1[2] = {&e1.a, &e1.b};
            Point* ends2[2] = {&e2.a, &e2.b};
            for (int s1 = 0; s1 < 2 && !merged; ++s1)
              for (int s2 = 0; s2 < 2 && !merged; ++s2)
                if (dist(*ends1[s1], *ends2[s2]) <= tol) {
                  *ends1[s1] = *ends2[1 - s2];
                  e1.length = dist(e1.a, e1.b);
                  const Point t = e1.b - e1.a;
                  Point n{t.y / e1.length, -t.x / e1.length};
                  if (dot(n, n1) < 0.0) {
                    std::swap(e1.a, e1.b);
                    n = {-n.x, -n.y};
                  }
                  e1.normal = n;
                  dead[ids[j]] = true;
                  merged = true;
                }
          }
        }
      }
    }
    std::vector<Interface> kept;
    kept.reserve(mesh.interfaces.size());
    for (std::size_t i = 0; i < mesh.interfaces.size(); ++i)
      if (!dead[i]) kept.push_back(mesh.interfaces[i]);
    mesh.interfaces = std::move(kept);
  }

  // Incidence lists and final validation.
  mesh.cell_interfaces.assign(mesh.cells.size(), {});
  for (int i = 0; i < mesh.num_interfaces(); ++i) {
    const Interface& e = mesh.interfaces[i];
    mesh.cell_interfaces[e.k1].push_back(i);
    if (e.interior()) mesh.cell_interfaces[e.k2].push_back(i);
    const double hmin =
        e.interior() ? std::min(mesh.cells[e.k1].diameter, mesh.cells[e.k2].diameter)
                     : mesh.cells[e.k1].diameter;
    if (e.length > hmin * (1.0 + 1e-10))
      throw MeshError("build_mesh: interface " + segment_str(e.a, e.b) +
                      " longer than an incident cell diameter");
  }
  for (int k = 0; k < mesh.num_cells(); ++k) {
    const auto poly = mesh.cell_polygon(k);
    double perimeter = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
      perimeter += dist(poly[i], poly[(i + 1) % poly.size()]);
    double covered = 0.0;
    for (int i : mesh.cell_interfaces[k]) covered += mesh.interfaces[i].length;
    if (std::abs(covered - perimeter) > 1e-10 * perimeter)
      throw MeshError("build_mesh: boundary of cell " + std::to_string(k) +
                      " not exactly covered by its interfaces (gap or overlap)");
  }
  return mesh;
}

}  // namespace polydg

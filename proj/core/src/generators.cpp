// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace polydg {

namespace {

class VertexPool {
 public:
  int id(Point p) {
    auto [it, inserted] = ids_.try_emplace({p.x, p.y}, static_cast<int>(points_.size()));
    if (inserted) points_.push_back(p);
    return it->second;
  }
  std::vector<Point> take() { return std::move(points_); }

 private:
  std::map<std::pair<double, double>, int> ids_;  // exact double keys: generators emit
  std::vector<Point> points_;                     // bitwise-identical shared coordinates
};

}  // namespace

Mesh generate_hybrid(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("generate_hybrid: n must be even and >= 2");

  VertexPool pool;
  std::vector<std::vector<int>> cells;
  cells.reserve(3 * n * n);

  // Left half: size-1/n squares, each split by its rising diagonal.
  for (int i = 0; i < n / 2; ++i)
    for (int j = 0; j < n; ++j) {
      const int ll = pool.id({double(i) / n, double(j) / n});
      const int lr = pool.id({double(i + 1) / n, double(j) / n});
      const int ur = pool.id({double(i + 1) / n, double(j + 1) / n});
      const int ul = pool.id({double(i) / n, double(j + 1) / n});
      cells.push_back({ll, lr, ur});
      cells.push_back({ll, ur, ul});
    }

  // Right half: size-1/(2n) squares; their vertices on x = 1/2 are hanging
  // nodes of the triangle edges.
  const int m = 2 * n;
  for (int i = n; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ll = pool.id({double(i) / m, double(j) / m});
      const int lr = pool.id({double(i + 1) / m, double(j) / m});
      const int ur = pool.id({double(i + 1) / m, double(j + 1) / m});
      const int ul = pool.id({double(i) / m, double(j + 1) / m});
      cells.push_back({ll, lr, ur, ul});
    }

  return build_mesh(pool.take(), std::move(cells));
}

Mesh generate_dual_hex(int n) {
  if (n < 2) throw std::invalid_argument("generate_dual_hex: n must be >= 2");

  // Primal: structured triangulation, every square split by the diagonal
  // from its lower-left to its upper-right corner.
  auto pv = [&](int i, int j) { return Point{double(i) / n, double(j) / n}; };
  struct Tri {
    Point a, b, c;
    Point centroid() const { return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0}; }
  };
  std::vector<Tri> tris;
  std::vector<std::vector<int>> incident((n + 1) * (n + 1));
  auto vid = [&](int i, int j) { return j * (n + 1) + i; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int t1 = static_cast<int>(tris.size());
      tris.push_back({pv(i, j), pv(i + 1, j), pv(i + 1, j + 1)});
      tris.push_back({pv(i, j), pv(i + 1, j + 1), pv(i, j + 1)});
      for (int v : {vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)}) incident[v].push_back(t1);
      for (int v : {vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)}) incident[v].push_back(t1 + 1);
    }

  VertexPool pool;
  std::vector<std::vector<int>> cells;
  cells.reserve((n + 1) * (n + 1));

  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      const Point v = pv(i, j);
      const bool boundary = (i == 0 || i == n || j == 0 || j == n);

      // Dual nodes: incident triangle centroids, plus boundary edge
      // midpoints for boundary vertices.
      std::vector<Point> nodes;
      for (int t : incident[vid(i, j)]) nodes.push_back(tris[t].centroid());
      if (boundary) {
        auto mid = [&](int i2, int j2) {
          const Point w = pv(i2, j2);
          return Point{0.5 * (v.x + w.x), 0.5 * (v.y + w.y)};
        };
        if (j == 0 || j == n) {  // horizontal boundary runs
          if (i > 0) nodes.push_back(mid(i - 1, j));
          if (i < n) nodes.push_back(mid(i + 1, j));
        }
        if (i == 0 || i == n) {
          if (j > 0) nodes.push_back(mid(i, j - 1));
          if (j < n) nodes.push_back(mid(i, j + 1));
        }
      }

      std::vector<std::pair<double, Point>> sorted;
      sorted.reserve(nodes.size() + 1);
      for (const Point& p : nodes) sorted.emplace_back(std::atan2(p.y - v.y, p.x - v.x), p);
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });

      if (boundary) {
        // Insert the vertex itself in the angular gap facing outward.
        double ox = (i == 0) ? -1.0 : (i == n) ? 1.0 : 0.0;
        double oy = (j == 0) ? -1.0 : (j == n) ? 1.0 : 0.0;
        const double theta = std::atan2(oy, ox);
        std::size_t pos = 0;
        while (pos < sorted.size() && sorted[pos].first < theta) ++pos;
        sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), {theta, v});
      }

      std::vector<int> cell;
      cell.reserve(sorted.size());
      for (const auto& [angle, p] : sorted) cell.push_back(pool.id(p));
      cells.push_back(std::move(cell));
    }

  return build_mesh(pool.take(), std::move(cells));
}

Mesh generate_mesh(const std::string& family, int n) {
  if (family == "hybrid") return generate_hybrid(n);
  if (family == "dualhex") return generate_dual_hex(n);
  throw std::invalid_argument("generate_mesh: unknown family '" + family + "'");
}

}  // namespace polydg

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The polydg authors.

#include "polydg/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace polydg {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct LogAxes {
  double x0, x1, y0, y1;              // log10 data range
  double px0, px1, py0, py1;          // pixel viewport (py0 is the bottom)

  double px(double logx) const { return px0 + (logx - x0) / (x1 - x0) * (px1 - px0); }
  double py(double logy) const { return py0 - (logy - y0) / (y1 - y0) * (py0 - py1); }
};

}  // namespace

void save_convergence_svg(const ConvergenceReport& report, const std::string& path,
                          const std::string& title) {
  const auto& levels = report.levels;
  if (levels.size() < 2) throw std::invalid_argument("save_convergence_svg: need >= 2 levels");

  std::vector<double> lx, l2, h1;
  for (const ConvergenceLevel& l : levels) {
    if (l.err.l2 <= 0.0 || l.err.h1_broken <= 0.0) continue;
    lx.push_back(std::log10(l.h));
    l2.push_back(std::log10(l.err.l2));
    h1.push_back(std::log10(l.err.h1_broken));
  }
  if (lx.size() < 2) throw std::invalid_argument("save_convergence_svg: too few nonzero errors");

  LogAxes ax;
  ax.x0 = *std::min_element(lx.begin(), lx.end());
  ax.x1 = *std::max_element(lx.begin(), lx.end());
  ax.y0 = std::min(*std::min_element(l2.begin(), l2.end()),
                   *std::min_element(h1.begin(), h1.end()));
  ax.y1 = std::max(*std::max_element(l2.begin(), l2.end()),
                   *std::max_element(h1.begin(), h1.end()));
  const double padx = 0.06 * (ax.x1 - ax.x0), pady = 0.08 * (ax.y1 - ax.y0);
  ax.x0 -= padx;
  ax.x1 += padx;
  ax.y0 -= pady;
  ax.y1 += pady;
  ax.px0 = 70;
  ax.px1 = 600;
  ax.py0 = 430;
  ax.py1 = 40;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write svg file: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  out << "<rect x=\"" << fmt(ax.px0) << "\" y=\"" << fmt(ax.py1) << "\" width=\""
      << fmt(ax.px1 - ax.px0) << "\" height=\"" << fmt(ax.py0 - ax.py1)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (!title.empty())
    out << "<text x=\"335\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << title
        << "</text>\n";

  // Decade grid lines and tick labels.
  for (int d = static_cast<int>(std::ceil(ax.y0)); d <= static_cast<int>(std::floor(ax.y1));
       ++d) {
    const double y = ax.py(d);
    out << "<line x1=\"" << fmt(ax.px0) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(ax.px1)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << fmt(ax.px0 - 6) << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\">1e" << d << "</text>\n";
  }
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double x = ax.px(lx[i]);
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(ax.py0) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << fmt(ax.py0 + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(ax.py0 + 18) << "\" text-anchor=\"middle\">"
        << fmt(std::pow(10.0, lx[i])) << "</text>\n";
  }
  out << "<text x=\"335\" y=\"462\" text-anchor=\"middle\">h</text>\n";
  out << "<text x=\"18\" y=\"235\" text-anchor=\"middle\" transform=\"rotate(-90 18 235)\">"
         "error</text>\n";

  auto polyline = [&](const std::vector<double>& ys, const char* color) {
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < lx.size(); ++i)
      out << fmt(ax.px(lx[i])) << "," << fmt(ax.py(ys[i])) << " ";
    out << "\"/>\n";
    for (std::size_t i = 0; i < lx.size(); ++i)
      out << "<circle cx=\"" << fmt(ax.px(lx[i])) << "\" cy=\"" << fmt(ax.py(ys[i]))
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
  };
  polyline(h1, "#c0392b");
  polyline(l2, "#2261a1");

  // Slope reference triangles anchored below the finest-level points
  // (smallest h is the first entry; lx is decreasing in h order).
  auto slope_triangle = [&](double slope, double logy_anchor, const char* color) {
    const double xa = lx[lx.size() - 2], xb = lx.back();  // one decade step of the data
    const double ya = logy_anchor, yb = logy_anchor + slope * (xb - xa);
    out << "<path d=\"M" << fmt(ax.px(xa)) << " " << fmt(ax.py(ya)) << " L" << fmt(ax.px(xb))
        << " " << fmt(ax.py(yb)) << " L" << fmt(ax.px(xa)) << " " << fmt(ax.py(yb))
        << " Z\" fill=\"none\" stroke=\"" << color << "\" stroke-dasharray=\"4 3\"/>\n";
    out << "<text x=\"" << fmt(ax.px(xa) - 8) << "\" y=\"" << fmt(ax.py(0.5 * (ya + yb)) + 4)
        << "\" text-anchor=\"end\" fill=\"" << color << "\">" << fmt(slope) << "</text>\n";
  };
  slope_triangle(1.0, h1[h1.size() - 2] - 0.35, "#c0392b");
  slope_triangle(2.0, l2[l2.size() - 2] - 0.35, "#2261a1");

  // Legend.
  out << "<rect x=\"480\" y=\"52\" width=\"112\" height=\"44\" fill=\"white\" "
         "stroke=\"#999999\"/>\n";
  out << "<line x1=\"488\" y1=\"66\" x2=\"512\" y2=\"66\" stroke=\"#c0392b\" "
         "stroke-width=\"1.5\"/>\n";
  out << "<text x=\"518\" y=\"70\">|u-u_h|_1,h</text>\n";
  out << "<line x1=\"488\" y1=\"84\" x2=\"512\" y2=\"84\" stroke=\"#2261a1\" "
         "stroke-width=\"1.5\"/>\n";
  out << "<text x=\"518\" y=\"88\">||u-u_h||</text>\n";

  out << "</svg>\n";
}

}  // namespace polydg

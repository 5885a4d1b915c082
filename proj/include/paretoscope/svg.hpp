#pragma once

// Plot a report as a self-contained SVG: one panel per sampled graph with
// image points colored by component, outward arrows on unbounded components,
// and a per-weight classification strip. Drawing reads the serialized report
// (not live structures) so replotting a saved report is byte-identical.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace paretoscope {

namespace svg_detail {

inline const char* kPalette[12] = {"#3366cc", "#dc3912", "#ff9900", "#109618",
                                   "#990099", "#0099c6", "#dd4477", "#66aa00",
                                   "#b82e2e", "#316395", "#994499", "#22aa99"};

inline std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct PanelPoint {
  double x = 0.0, y = 0.0;
  int comp = -1;
};

} // namespace svg_detail

inline std::string render_svg(const nlohmann::ordered_json& report) {
  using nlohmann::ordered_json;
  namespace sd = svg_detail;

  const int panel = 400, left = 50, strip_h = 24;
  const auto& graphs = report.at("graphs");
  const std::string problem_name = report.at("problem").at("name").get<std::string>();
  const int N = report.at("run").at("N").get<int>();
  std::vector<double> radii;
  for (const auto& r : report.at("run").at("solver").at("radii")) radii.push_back(r.get<double>());
  if (radii.empty()) radii.push_back(4.0);

  std::ostringstream body;
  int y_cursor = 20;

  for (const auto& gj : graphs) {
    const std::string kind = gj.at("scalarization").get<std::string>();
    const auto& entries = gj.at("entries");
    const auto& comps = gj.at("image").at("components");

    std::vector<sd::PanelPoint> pts;
    for (const auto& ej : entries) {
      if (ej.at("status").get<std::string>() != "minimizers") continue;
      for (const auto& pj : ej.at("points")) {
        sd::PanelPoint p;
        p.x = pj.at(0).get<double>();
        p.y = pj.size() > 1 ? pj.at(1).get<double>() : 0.0;
        pts.push_back(p);
      }
    }
    for (const auto& cj : comps) {
      int id = cj.at("id").get<int>();
      for (const auto& ij : cj.at("point_indices")) {
        std::size_t i = ij.get<std::size_t>();
        if (i < pts.size()) pts[i].comp = id;
      }
    }

    double extent = 1.0;
    for (const auto& p : pts) extent = std::max({extent, std::fabs(p.x), std::fabs(p.y)});
    double R = radii.back();
    for (double r : radii)
      if (extent <= r) { R = r; break; }

    auto sx = [&](double x) { return left + (x + R) / (2.0 * R) * panel; };
    auto sy = [&](double y) { return y_cursor + 18 + panel - (y + R) / (2.0 * R) * panel; };
    const double top = y_cursor + 18;

    body << "<text x=\"" << left << "\" y=\"" << y_cursor + 10
         << "\" font-family=\"monospace\" font-size=\"13\">" << problem_name << " / " << kind
         << " scalarization / N=" << N << " / window " << sd::f2(R) << "</text>\n";

    body << "<rect x=\"" << left << "\" y=\"" << sd::f2(top) << "\" width=\"" << panel
         << "\" height=\"" << panel << "\" fill=\"#fcfcfc\" stroke=\"#333333\"/>\n";

    const double tick = std::max(1.0, R / 8.0);
    for (double t = -R; t <= R + 1e-9; t += tick) {
      bool axis = std::fabs(t) < 1e-12;
      const char* color = axis ? "#888888" : "#e0e0e0";
      body << "<line x1=\"" << sd::f2(sx(t)) << "\" y1=\"" << sd::f2(top) << "\" x2=\""
           << sd::f2(sx(t)) << "\" y2=\"" << sd::f2(top + panel) << "\" stroke=\"" << color
           << "\"/>\n";
      body << "<line x1=\"" << left << "\" y1=\"" << sd::f2(sy(t)) << "\" x2=\""
           << left + panel << "\" y2=\"" << sd::f2(sy(t)) << "\" stroke=\"" << color
           << "\"/>\n";
      body << "<text x=\"" << sd::f2(sx(t)) << "\" y=\"" << sd::f2(top + panel + 12)
           << "\" font-family=\"monospace\" font-size=\"9\" text-anchor=\"middle\">"
           << sd::f2(t) << "</text>\n";
      body << "<text x=\"" << left - 4 << "\" y=\"" << sd::f2(sy(t) + 3)
           << "\" font-family=\"monospace\" font-size=\"9\" text-anchor=\"end\">" << sd::f2(t)
           << "</text>\n";
    }

    for (const auto& p : pts) {
      const char* color = p.comp >= 0 ? sd::kPalette[p.comp % 12] : "#555555";
      body << "<circle cx=\"" << sd::f2(sx(p.x)) << "\" cy=\"" << sd::f2(sy(p.y))
           << "\" r=\"2.20\" fill=\"" << color << "\" fill-opacity=\"0.85\"/>\n";
    }

    // outward arrow at the farthest point of each unbounded component
    for (const auto& cj : comps) {
      if (cj.at("bounded_at_scale").get<bool>()) continue;
      int id = cj.at("id").get<int>();
      const sd::PanelPoint* far = nullptr;
      double best = -1.0;
      for (const auto& ij : cj.at("point_indices")) {
        std::size_t i = ij.get<std::size_t>();
        if (i >= pts.size()) continue;
        double norm = std::max(std::fabs(pts[i].x), std::fabs(pts[i].y));
        if (norm > best) { best = norm; far = &pts[i]; }
      }
      if (!far) continue;
      double len = std::hypot(far->x, far->y);
      double ux = len > 0 ? far->x / len : 1.0, uy = len > 0 ? far->y / len : 0.0;
      double x2 = sx(far->x), y2 = sy(far->y);
      double x1 = x2 - ux * 26.0, y1 = y2 + uy * 26.0;
      const char* color = sd::kPalette[id % 12];
      body << "<line x1=\"" << sd::f2(x1) << "\" y1=\"" << sd::f2(y1) << "\" x2=\"" << sd::f2(x2)
           << "\" y2=\"" << sd::f2(y2) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
      double hx = x2 + ux * 8.0, hy = y2 - uy * 8.0;
      double px = -uy, py = -ux;  // screen-space perpendicular
      body << "<polygon points=\"" << sd::f2(hx) << "," << sd::f2(hy) << " "
           << sd::f2(x2 + px * 4.0) << "," << sd::f2(y2 + py * 4.0) << " "
           << sd::f2(x2 - px * 4.0) << "," << sd::f2(y2 - py * 4.0) << "\" fill=\"" << color
           << "\"/>\n";
    }

    // classification strip over the weight grid
    const double strip_top = top + panel + 22;
    const std::size_t count = entries.size();
    const double cell = static_cast<double>(panel) / static_cast<double>(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto& ej = entries.at(i);
      std::string status = ej.at("status").get<std::string>();
      const char* color = "#9e9e9e";
      if (status == "minimizers")
        color = ej.at("value_unbounded").get<bool>() ? "#ff9900" : "#109618";
      else if (status == "escaping")
        color = "#dc3912";
      body << "<rect x=\"" << sd::f2(left + i * cell) << "\" y=\"" << sd::f2(strip_top)
           << "\" width=\"" << sd::f2(cell) << "\" height=\"" << strip_h << "\" fill=\"" << color
           << "\" stroke=\"#ffffff\" stroke-width=\"0.5\"/>\n";
    }
    body << "<text x=\"" << left << "\" y=\"" << sd::f2(strip_top + strip_h + 12)
         << "\" font-family=\"monospace\" font-size=\"10\">weights by first coordinate: "
            "green bounded values, orange unbounded values, red escaping, gray infeasible"
         << "</text>\n";

    int legend_y = static_cast<int>(strip_top + strip_h + 24);
    for (const auto& cj : comps) {
      int id = cj.at("id").get<int>();
      body << "<rect x=\"" << left << "\" y=\"" << legend_y << "\" width=\"10\" height=\"10\" "
           << "fill=\"" << sd::kPalette[id % 12] << "\"/>\n";
      body << "<text x=\"" << left + 16 << "\" y=\"" << legend_y + 9
           << "\" font-family=\"monospace\" font-size=\"11\">component " << id << ": "
           << cj.at("size").get<int>() << " point(s), "
           << (cj.at("bounded_at_scale").get<bool>() ? "bounded at scale" : "unbounded at scale")
           << "</text>\n";
      legend_y += 16;
    }
    y_cursor = legend_y + 24;
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"500\" height=\""
      << y_cursor << "\" viewBox=\"0 0 500 " << y_cursor << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"500\" height=\"" << y_cursor
      << "\" fill=\"#ffffff\"/>\n";
  out << body.str();
  out << "</svg>\n";
  return out.str();
}

} // namespace paretoscope

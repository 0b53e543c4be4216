#include "conegraph/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace conegraph {

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* class_color(int cone) {
  static const char* colors[] = {"#d62728", "#2ca02c", "#1f77b4",
                                 "#ff7f0e", "#9467bd", "#8c564b",
                                 "#e377c2", "#7f7f7f", "#bcbd22",
                                 "#17becf", "#aec7e8", "#98df8a"};
  return colors[cone % 12];
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Mapper {
  double scale = 1.0, off_x = 0.0, off_y = 0.0, canvas = 800.0;
  double world_extent = 1.0;

  double x(double wx) const { return off_x + wx * scale; }
  double y(double wy) const { return off_y - wy * scale; }  // flip y
};

Mapper fit(const ConeGraph& g, double canvas) {
  Mapper m;
  m.canvas = canvas;
  if (g.size() == 0) return m;
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const auto& p : g.points().points()) {
    lo_x = std::min(lo_x, p.x.to_double());
    hi_x = std::max(hi_x, p.x.to_double());
    lo_y = std::min(lo_y, p.y.to_double());
    hi_y = std::max(hi_y, p.y.to_double());
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  double margin = 0.12 * canvas;
  m.scale = (canvas - 2 * margin) / span;
  m.off_x = margin - lo_x * m.scale + (canvas - 2 * margin - (hi_x - lo_x) * m.scale) / 2;
  m.off_y = canvas - margin + lo_y * m.scale - (canvas - 2 * margin - (hi_y - lo_y) * m.scale) / 2;
  m.world_extent = 4.0 * span + 1.0;
  return m;
}

void wedge_path(std::ostringstream& out, const Mapper& map, double ax,
                double ay, int cone, int m_cones, const char* color) {
  double w = 2.0 * kPi / m_cones;
  double start = cone * w - (m_cones % 2 == 1 ? w / 2 : 0.0);
  double r = map.world_extent;
  double lx = ax + r * std::sin(start), ly = ay + r * std::cos(start);
  double rx = ax + r * std::sin(start + w), ry = ay + r * std::cos(start + w);
  out << "  <path d=\"M " << num(map.x(ax)) << " " << num(map.y(ay)) << " L "
      << num(map.x(lx)) << " " << num(map.y(ly)) << " L " << num(map.x(rx))
      << " " << num(map.y(ry)) << " Z\" fill=\"" << color
      << "\" fill-opacity=\"0.10\" stroke=\"none\"/>\n";
}

void polyline(std::ostringstream& out, const Mapper& map, const ConeGraph& g,
              const std::vector<int>& ids, const char* color,
              const char* dash, const char* klass) {
  if (ids.size() < 2) return;
  out << "  <polyline class=\"" << klass << "\" points=\"";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& p = g.points()[ids[i]];
    if (i) out << " ";
    out << num(map.x(p.x.to_double())) << "," << num(map.y(p.y.to_double()));
  }
  out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"3\"";
  if (dash[0]) out << " stroke-dasharray=\"" << dash << "\"";
  out << " stroke-opacity=\"0.85\"/>\n";
}

}  // namespace

std::string render_svg(const ConeGraph& g, const RenderOptions& opts) {
  Mapper map = fit(g, opts.canvas);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(opts.canvas) << "\" height=\"" << num(opts.canvas)
      << "\" viewBox=\"0 0 " << num(opts.canvas) << " " << num(opts.canvas)
      << "\">\n";
  out << "  <rect class=\"frame\" x=\"0.5\" y=\"0.5\" width=\""
      << num(opts.canvas - 1) << "\" height=\"" << num(opts.canvas - 1)
      << "\" fill=\"#ffffff\" stroke=\"#202020\"/>\n";

  const auto& pts = g.points().points();

  // Pre-compute the sink classes of every vertex.
  std::vector<std::string> sink_classes(g.size());
  for (int p = 0; p < g.size(); ++p) {
    std::string s;
    for (int i = 0; i < g.m(); ++i) {
      if (g.is_sink(p, i)) {
        if (!s.empty()) s += ",";
        s += std::to_string(i);
      }
    }
    sink_classes[p] = s;
  }

  out << "  <g class=\"cones\">\n";
  if (opts.draw_sink_cones) {
    for (int i = 0; i < g.m(); ++i) {
      for (int p = 0; p < g.size(); ++p) {
        if (!g.is_sink(p, i)) continue;
        wedge_path(out, map, pts[p].x.to_double(), pts[p].y.to_double(), i,
                   g.m(), class_color(i));
      }
    }
  }
  if (opts.barrier) {
    const Barrier& b = *opts.barrier;
    const Point& first = g.points()[b.path.start()];
    const Point& last = g.points()[b.path.sink()];
    wedge_path(out, map, first.x.to_double(), first.y.to_double(),
               b.start_cap_class, b.m, class_color(b.start_cap_class));
    wedge_path(out, map, last.x.to_double(), last.y.to_double(), b.cone_class,
               b.m, class_color(b.cone_class));
  }
  out << "  </g>\n";

  out << "  <g class=\"edges\">\n";
  for (const auto& e : g.undirected_edges()) {
    int cone = e.roles.front().cone;
    for (const auto& r : e.roles) cone = std::min(cone, r.cone);
    out << "    <line x1=\"" << num(map.x(pts[e.u].x.to_double())) << "\" y1=\""
        << num(map.y(pts[e.u].y.to_double())) << "\" x2=\""
        << num(map.x(pts[e.v].x.to_double())) << "\" y2=\""
        << num(map.y(pts[e.v].y.to_double())) << "\" stroke=\""
        << class_color(cone) << "\" stroke-width=\"1.5\"/>\n";
  }
  out << "  </g>\n";

  out << "  <g class=\"overlays\">\n";
  if (opts.path) polyline(out, map, g, opts.path->vertices, "#000000", "", "path");
  if (opts.barrier)
    polyline(out, map, g, opts.barrier->path.vertices, "#6a0dad", "", "barrier");
  if (opts.route)
    polyline(out, map, g, opts.route->visited, "#ff7f0e", "6,4", "route");
  out << "  </g>\n";

  out << "  <g class=\"points\">\n";
  for (int p = 0; p < g.size(); ++p) {
    out << "    <circle cx=\"" << num(map.x(pts[p].x.to_double())) << "\" cy=\""
        << num(map.y(pts[p].y.to_double())) << "\" r=\"4\" fill=\"#111111\"";
    if (!sink_classes[p].empty())
      out << " stroke=\"#d62728\" stroke-width=\"2\" data-sinks=\""
          << sink_classes[p] << "\"";
    out << "/>\n";
  }
  out << "  </g>\n";

  if (opts.labels) {
    out << "  <g class=\"labels\" font-family=\"monospace\" font-size=\"12\">\n";
    for (int p = 0; p < g.size(); ++p) {
      out << "    <text x=\"" << num(map.x(pts[p].x.to_double()) + 6)
          << "\" y=\"" << num(map.y(pts[p].y.to_double()) - 6) << "\">" << p
          << "</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace conegraph

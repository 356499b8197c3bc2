#include "encircle/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace encircle {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;
constexpr double kMaxDotRadius = 12.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double min_x, max_y, scale;

  double px(double x) const { return kMargin + (x - min_x) * scale; }
  double py(double y) const { return kMargin + (max_y - y) * scale; }
};

Frame fit(const Scenario& s, const Report& r) {
  const auto& c = r.constrained.circle;
  double min_x = c.center.x() - c.radius, max_x = c.center.x() + c.radius;
  double min_y = c.center.y() - c.radius, max_y = c.center.y() + c.radius;
  for (const auto& n : s.nodes) {
    min_x = std::min(min_x, n.point.x());
    max_x = std::max(max_x, n.point.x());
    min_y = std::min(min_y, n.point.y());
    max_y = std::max(max_y, n.point.y());
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = span > 0.0 ? (kCanvas - 2.0 * kMargin) / span : 1.0;
  return {min_x, max_y, scale};
}

}  // namespace

std::string render_svg(const Scenario& s, const Report& r) {
  const Frame f = fit(s, r);
  double max_weight = 0.0;
  for (const auto& n : s.nodes) max_weight = std::max(max_weight, n.weight);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas)
      << "\" viewBox=\"0 0 " << num(kCanvas) << ' ' << num(kCanvas) << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto& c = r.constrained.circle;
  out << "  <circle class=\"coverage\" cx=\"" << num(f.px(c.center.x())) << "\" cy=\"" << num(f.py(c.center.y()))
      << "\" r=\"" << num(c.radius * f.scale) << "\" fill=\"#1f77b4\" fill-opacity=\"0.08\" stroke=\"#1f77b4\""
      << " stroke-width=\"1.5\"/>\n";

  for (const auto& link : r.per_node) {
    const auto& node = s.nodes[link.index];
    const double radius = max_weight > 0.0 ? kMaxDotRadius * std::sqrt(node.weight / max_weight) : 0.0;
    out << "  <circle class=\"node" << (link.selected ? " selected" : "") << "\" data-index=\"" << link.index
        << "\" cx=\"" << num(f.px(node.point.x())) << "\" cy=\"" << num(f.py(node.point.y())) << "\" r=\""
        << num(radius) << "\" fill=\"" << (link.selected ? "#d62728" : "#7f7f7f") << "\" stroke=\"black\""
        << " stroke-width=\"0.5\"/>\n";
  }

  // Waypoint ground projection as a cross.
  const double wx = f.px(r.waypoint.x()), wy = f.py(r.waypoint.y());
  out << "  <g class=\"waypoint\" stroke=\"#2ca02c\" stroke-width=\"2\">\n";
  out << "    <line x1=\"" << num(wx - 8) << "\" y1=\"" << num(wy - 8) << "\" x2=\"" << num(wx + 8) << "\" y2=\""
      << num(wy + 8) << "\"/>\n";
  out << "    <line x1=\"" << num(wx - 8) << "\" y1=\"" << num(wy + 8) << "\" x2=\"" << num(wx + 8) << "\" y2=\""
      << num(wy - 8) << "\"/>\n";
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

void render_svg(const Scenario& s, const Report& r, const std::filesystem::path& path) {
  write_text(path, render_svg(s, r));
}

}  // namespace encircle

#include "encircle/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <span>

namespace encircle {

Report run_pipeline(const Scenario& s) {
  Report report;
  report.constrained = constrained_mec(std::span<const WeightedPointd>(s.nodes), s.capacity, s.tolerance, s.seed);

  const Point2d& center = report.constrained.circle.center;
  report.waypoint = Waypoint3d(center.x(), center.y(), s.altitude);

  std::vector<char> selected(s.nodes.size(), 0);
  for (std::size_t i : report.constrained.selected) selected[i] = 1;

  report.per_node.reserve(s.nodes.size());
  for (std::size_t i = 0; i < s.nodes.size(); ++i)
    report.per_node.push_back({i, selected[i] != 0, link_stats(report.waypoint, s.nodes[i].point, s.los, s.channel)});

  double min_gain = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t i : report.constrained.selected) {
    const double h = report.per_node[i].stats.h_expected;
    min_gain = std::min(min_gain, h);
    total += h;
  }
  report.min_expected_gain = min_gain;
  report.mean_expected_gain = total / static_cast<double>(report.constrained.selected.size());
  return report;
}

std::string report_to_json(const Report& r) {
  using Json = nlohmann::ordered_json;
  Json root;
  const auto& c = r.constrained.circle;
  root["circle"] = {{"cx", c.center.x()}, {"cy", c.center.y()}, {"r", c.radius}};
  root["selected"] = r.constrained.selected;
  root["weight_sum"] = r.constrained.weight_sum;
  root["waypoint"] = {{"x", r.waypoint.x()}, {"y", r.waypoint.y()}, {"z", r.waypoint.z()}};
  Json nodes = Json::array();
  for (const auto& n : r.per_node) {
    nodes.push_back({{"index", n.index},
                     {"selected", n.selected},
                     {"distance", n.stats.distance},
                     {"elevation_deg", n.stats.elevation_deg},
                     {"p_los", n.stats.p_los},
                     {"h_los", n.stats.h_los},
                     {"h_nlos", n.stats.h_nlos},
                     {"h_expected", n.stats.h_expected}});
  }
  root["per_node"] = std::move(nodes);
  root["summary"] = {{"min_expected_gain", r.min_expected_gain}, {"mean_expected_gain", r.mean_expected_gain}};
  return root.dump(2) + "\n";
}

}  // namespace encircle

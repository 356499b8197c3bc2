#pragma once

#include "encircle/channel.hpp"
#include "encircle/cmec.hpp"
#include "encircle/scenario.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace encircle {

struct NodeLink {
  std::size_t index = 0;
  bool selected = false;
  LinkStats<double> stats;
};

struct Report {
  ConstrainedResult<double> constrained;
  Waypoint3d waypoint = Waypoint3d::Zero();
  std::vector<NodeLink> per_node;  // input order
  double min_expected_gain = 0.0;  // over selected nodes
  double mean_expected_gain = 0.0;
};

/// Covers the heaviest nodes with the greedy constrained circle, hovers the
/// UAV over its center at the scenario altitude and evaluates every link.
Report run_pipeline(const Scenario& scenario);

std::string report_to_json(const Report& report);

}  // namespace encircle

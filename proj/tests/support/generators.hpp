#pragma once

#include "encircle/cmec.hpp"
#include "encircle/geom.hpp"
#include "encircle/random.hpp"

#include <cstddef>
#include <vector>

namespace encircle::testing {

inline double uniform(Stream& s, double lo, double hi) { return lo + (hi - lo) * uniform01(s); }

inline std::vector<Point2d> random_points(Stream& s, std::size_t k, double lo = -100.0, double hi = 100.0) {
  std::vector<Point2d> pts;
  pts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) pts.emplace_back(uniform(s, lo, hi), uniform(s, lo, hi));
  return pts;
}

inline std::vector<WeightedPointd> random_weighted(Stream& s, std::size_t k, double lo = -100.0,
                                                   double hi = 100.0) {
  std::vector<WeightedPointd> pts;
  pts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    WeightedPointd wp;
    wp.point = Point2d(uniform(s, lo, hi), uniform(s, lo, hi));
    wp.weight = uniform01(s);
    pts.push_back(wp);
  }
  return pts;
}

inline std::vector<Point2d> positions(const std::vector<WeightedPointd>& pts) {
  std::vector<Point2d> out;
  for (const auto& p : pts) out.push_back(p.point);
  return out;
}

}  // namespace encircle::testing

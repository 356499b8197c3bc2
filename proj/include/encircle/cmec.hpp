#pragma once

#include "encircle/geom.hpp"
#include "encircle/mec.hpp"
#include "encircle/random.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace encircle {

class TooFewPointsError : public std::invalid_argument {
 public:
  explicit TooFewPointsError(const std::string& what) : std::invalid_argument(what) {}
};

template <typename Scalar>
struct WeightedPoint {
  Point2<Scalar> point = Point2<Scalar>::Zero();
  Scalar weight = Scalar(0);
};

using WeightedPointd = WeightedPoint<double>;

/// Circle plus the covered subset; `weight_sum` is accumulated in the order of
/// `selected`.
template <typename Scalar>
struct ConstrainedResult {
  Circle<Scalar> circle;
  std::vector<std::size_t> selected;
  Scalar weight_sum = Scalar(0);
};

/// Indices ordering weights non-increasingly; equal weights keep input order.
template <typename Scalar>
std::vector<std::size_t> sort_by_weight(std::span<const WeightedPoint<Scalar>> points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].weight > points[b].weight;
  });
  return order;
}

/// Greedy constrained smallest enclosing circle.
///
/// Starts from the diameter circle of the two heaviest points and walks the
/// rest in weight order. A point inside the current circle joins for free; a
/// point outside forces the circle to grow with that point on the new
/// boundary, first as a diameter circle to the farthest selected point and
/// otherwise as the smallest admissible circumcircle through it and two
/// selected points. After each change every unselected point that is now
/// inside is absorbed in weight order. The walk ends once `capacity` points
/// are selected; points passed over are never revisited.
///
/// `seed` only matters on the rare path where no circumcircle candidate covers
/// the selection and the randomized solver is used instead.
template <typename Scalar>
ConstrainedResult<Scalar> constrained_mec(std::span<const WeightedPoint<Scalar>> points, std::size_t capacity,
                                          const Tolerance<Scalar>& tol, Seed seed = {}) {
  if (points.size() < 2) throw TooFewPointsError("constrained_mec: need at least two points");
  if (capacity < 2) throw std::invalid_argument("constrained_mec: capacity must be at least 2");

  const std::vector<std::size_t> order = sort_by_weight(points);
  std::vector<char> taken(points.size(), 0);
  std::vector<std::size_t> members;
  members.reserve(std::min(capacity, points.size()));

  auto point = [&](std::size_t i) -> const Point2<Scalar>& { return points[i].point; };
  auto take = [&](std::size_t i) {
    taken[i] = 1;
    members.push_back(i);
  };

  take(order[0]);
  take(order[1]);
  Circle<Scalar> circle = circle_from_two(point(order[0]), point(order[1]));

  auto absorb_inside = [&] {
    for (std::size_t i : order) {
      if (members.size() >= capacity) return;
      if (!taken[i] && contains(circle, point(i), tol)) take(i);
    }
  };
  auto covers_members = [&](const Circle<Scalar>& c) {
    for (std::size_t m : members)
      if (!contains(c, point(m), tol)) return false;
    return true;
  };

  for (std::size_t pos = 2; pos < order.size() && members.size() < capacity; ++pos) {
    const std::size_t next = order[pos];
    if (taken[next]) continue;
    const Point2<Scalar>& p = point(next);

    if (!contains(circle, p, tol)) {
      std::size_t farthest = members.front();
      for (std::size_t m : members)
        if ((point(m) - p).squaredNorm() > (point(farthest) - p).squaredNorm()) farthest = m;

      const Circle<Scalar> diameter = circle_from_two(p, point(farthest));
      if (covers_members(diameter)) {
        circle = diameter;
      } else {
        bool found = false;
        Circle<Scalar> best;
        for (std::size_t a = 0; a < members.size(); ++a)
          for (std::size_t b = a + 1; b < members.size(); ++b) {
            Circle<Scalar> candidate;
            try {
              candidate = circumcircle(p, point(members[a]), point(members[b]), tol);
            } catch (const CollinearError&) {
              continue;
            }
            if (found && !(candidate.radius < best.radius)) continue;
            if (!covers_members(candidate)) continue;
            best = candidate;
            found = true;
          }
        if (found) {
          circle = best;
        } else {
          std::vector<Point2<Scalar>> group;
          for (std::size_t m : members) group.push_back(point(m));
          group.push_back(p);
          circle = mec_welzl(std::span<const Point2<Scalar>>(group), seed, tol).circle;
        }
      }
    }
    take(next);
    absorb_inside();
  }

  // Keep the `capacity` heaviest members, reported in weight order.
  std::vector<std::size_t> rank(points.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  if (members.size() > capacity) members.resize(capacity);

  ConstrainedResult<Scalar> result{circle, members, Scalar(0)};
  for (std::size_t m : result.selected) result.weight_sum += points[m].weight;
  return result;
}

/// Exhaustive reference for constrained_mec on small inputs (k <= ~12).
///
/// Over every nonempty subset of at most `capacity` points, picks the largest
/// weight sum; ties go to the smaller enclosing radius, then to the
/// lexicographically smaller (ascending) index list. Like constrained_mec, the
/// selection is listed and summed in weight order, so the same subset always
/// yields the same floating-point sum from either routine.
template <typename Scalar>
ConstrainedResult<Scalar> exhaustive_oracle(std::span<const WeightedPoint<Scalar>> points, std::size_t capacity,
                                            const Tolerance<Scalar>& tol) {
  const std::size_t k = points.size();
  if (k == 0) throw EmptyInputError("exhaustive_oracle: empty point set");
  if (k > 20) throw std::invalid_argument("exhaustive_oracle: too many points to enumerate");
  if (capacity < 1) throw std::invalid_argument("exhaustive_oracle: capacity must be at least 1");
  capacity = std::min(capacity, k);

  auto subset_points = [&](const std::vector<std::size_t>& idx) {
    std::vector<Point2<Scalar>> pts;
    pts.reserve(idx.size());
    for (std::size_t i : idx) pts.push_back(points[i].point);
    return pts;
  };
  auto radius_of = [&](const std::vector<std::size_t>& idx) {
    const auto pts = subset_points(idx);
    return mec_bruteforce(std::span<const Point2<Scalar>>(pts), tol).circle.radius;
  };

  const std::vector<std::size_t> order = sort_by_weight(points);
  auto ascending = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  ConstrainedResult<Scalar> best;
  std::vector<std::size_t> best_sorted;
  Scalar best_radius = std::numeric_limits<Scalar>::infinity();
  bool found = false;
  std::vector<std::size_t> idx;

  // Bit r of the mask stands for the r-th heaviest point.
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    idx.clear();
    for (std::size_t r = 0; r < k; ++r)
      if (mask & (std::uint32_t{1} << r)) idx.push_back(order[r]);
    if (idx.size() > capacity) continue;

    Scalar sum(0);
    for (std::size_t i : idx) sum += points[i].weight;

    if (found) {
      if (sum < best.weight_sum) continue;
      if (sum == best.weight_sum) {
        const Scalar r = radius_of(idx);
        if (r > best_radius + tol.eps_contain) continue;
        auto sorted = ascending(idx);
        if (r >= best_radius - tol.eps_contain && !(sorted < best_sorted)) continue;
        best.selected = idx;
        best_sorted = std::move(sorted);
        best_radius = r;
        continue;
      }
    }
    best.selected = idx;
    best_sorted = ascending(idx);
    best.weight_sum = sum;
    best_radius = radius_of(idx);
    found = true;
  }

  const auto pts = subset_points(best.selected);
  best.circle = mec_bruteforce(std::span<const Point2<Scalar>>(pts), tol).circle;
  return best;
}

}  // namespace encircle

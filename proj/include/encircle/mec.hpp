#pragma once

#include "encircle/geom.hpp"
#include "encircle/random.hpp"

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace encircle {

class EmptyInputError : public std::invalid_argument {
 public:
  explicit EmptyInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Minimum enclosing circle together with the (at most three) input indices
/// that pin it on its boundary.
template <typename Scalar>
struct MecResult {
  Circle<Scalar> circle;
  std::vector<std::size_t> support;
};

namespace detail {

template <typename Scalar>
Circle<Scalar> widest_pair(const Point2<Scalar>& p, const Point2<Scalar>& q, const Point2<Scalar>& h,
                           std::vector<std::size_t>& support, std::size_t ip, std::size_t iq,
                           std::size_t ih) {
  const Scalar pq = (p - q).squaredNorm();
  const Scalar ph = (p - h).squaredNorm();
  const Scalar qh = (q - h).squaredNorm();
  if (pq >= ph && pq >= qh) {
    support = {ip, iq};
    return circle_from_two(p, q);
  }
  if (ph >= qh) {
    support = {ip, ih};
    return circle_from_two(p, h);
  }
  support = {iq, ih};
  return circle_from_two(q, h);
}

}  // namespace detail

/// Randomized incremental minimum enclosing circle (Welzl's move-to-front
/// scheme written as three nested loops). The visiting order is a seeded
/// shuffle of the input, so the result is a pure function of (points, seed).
///
/// Each loop level fixes one more point on the boundary: a point lying outside
/// the circle of its predecessors must be on the boundary of the enlarged
/// circle, and no more than three such points are ever needed.
template <typename Scalar>
MecResult<Scalar> mec_welzl(std::span<const Point2<Scalar>> points, Seed seed,
                            const Tolerance<Scalar>& tol) {
  if (points.empty()) throw EmptyInputError("mec_welzl: empty point set");

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Stream stream = make_stream(seed);
  shuffle(order, stream);

  MecResult<Scalar> result{{points[order[0]], Scalar(0)}, {order[0]}};
  auto& circle = result.circle;
  auto& support = result.support;

  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::size_t pi = order[i];
    if (contains(circle, points[pi], tol)) continue;

    circle = {points[pi], Scalar(0)};
    support = {pi};
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t pj = order[j];
      if (contains(circle, points[pj], tol)) continue;

      circle = circle_from_two(points[pi], points[pj]);
      support = {pi, pj};
      for (std::size_t m = 0; m < j; ++m) {
        const std::size_t pm = order[m];
        if (contains(circle, points[pm], tol)) continue;
        try {
          circle = circumcircle(points[pi], points[pj], points[pm], tol);
          support = {pi, pj, pm};
        } catch (const CollinearError&) {
          // Only reachable through round-off on near-collinear triples.
          circle = detail::widest_pair(points[pi], points[pj], points[pm], support, pi, pj, pm);
        }
      }
    }
  }
  return result;
}

/// Exhaustive reference: every pair circle and every non-collinear triple
/// circle is tried, and the smallest one covering all points wins. Ties in
/// radius (within eps_contain) go to the lexicographically smallest center.
/// O(k^4); meant for small k.
template <typename Scalar>
MecResult<Scalar> mec_bruteforce(std::span<const Point2<Scalar>> points, const Tolerance<Scalar>& tol) {
  if (points.empty()) throw EmptyInputError("mec_bruteforce: empty point set");
  const std::size_t k = points.size();
  if (k == 1) return {{points[0], Scalar(0)}, {0}};

  bool found = false;
  MecResult<Scalar> best;
  auto covers_all = [&](const Circle<Scalar>& c) {
    for (const auto& p : points)
      if (!contains(c, p, tol)) return false;
    return true;
  };
  auto offer = [&](const Circle<Scalar>& c, std::vector<std::size_t> support) {
    if (found) {
      const Scalar diff = c.radius - best.circle.radius;
      if (diff > tol.eps_contain) return;
      if (diff >= -tol.eps_contain) {
        const auto& a = c.center;
        const auto& b = best.circle.center;
        if (!(a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()))) return;
      }
    }
    if (!covers_all(c)) return;
    best = {c, std::move(support)};
    found = true;
  };

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) offer(circle_from_two(points[i], points[j]), {i, j});

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t h = j + 1; h < k; ++h) {
        try {
          offer(circumcircle(points[i], points[j], points[h], tol), {i, j, h});
        } catch (const CollinearError&) {
        }
      }
  // The widest pair always covers collinear inputs, so something was found.
  return best;
}

/// Checks the incremental boundary property on one instance: if `extra` lies
/// outside mec(points), it must lie on the boundary of mec(points + extra).
template <typename Scalar>
bool incremental_check(std::span<const Point2<Scalar>> points, const Point2<Scalar>& extra, Seed seed,
                       const Tolerance<Scalar>& tol) {
  const auto base = mec_welzl(points, seed, tol);
  if (contains(base.circle, extra, tol)) return true;
  std::vector<Point2<Scalar>> all(points.begin(), points.end());
  all.push_back(extra);
  const auto grown = mec_welzl(std::span<const Point2<Scalar>>(all), seed, tol);
  return on_boundary(grown.circle, extra, tol);
}

/// Rebuilds the circle determined by a support set alone.
template <typename Scalar>
Circle<Scalar> circle_from_support(std::span<const Point2<Scalar>> points,
                                   const std::vector<std::size_t>& support, const Tolerance<Scalar>& tol) {
  switch (support.size()) {
    case 1:
      return {points[support[0]], Scalar(0)};
    case 2:
      return circle_from_two(points[support[0]], points[support[1]]);
    case 3:
      return circumcircle(points[support[0]], points[support[1]], points[support[2]], tol);
    default:
      throw std::invalid_argument("circle_from_support: support must hold 1 to 3 indices");
  }
}

}  // namespace encircle

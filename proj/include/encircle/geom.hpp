#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace encircle {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point2d = Point2<double>;

/// Thrown by circumcircle() when the three points admit no finite circle.
class CollinearError : public std::runtime_error {
 public:
  explicit CollinearError(const std::string& what) : std::runtime_error(what) {}
};

template <typename Scalar>
struct Circle {
  Point2<Scalar> center = Point2<Scalar>::Zero();
  Scalar radius = Scalar(0);
};

using Circled = Circle<double>;

/// Slack used by every containment/boundary test and the collinearity cutoff
/// on the circumcenter denominator.
template <typename Scalar>
struct Tolerance {
  Scalar eps_contain = Scalar(1e-9);
  Scalar eps_degenerate = Scalar(1e-12);

  bool valid() const {
    using std::isfinite;
    return isfinite(eps_contain) && isfinite(eps_degenerate) && eps_contain >= Scalar(0) &&
           eps_degenerate > Scalar(0);
  }

  /// Default tolerance scaled to the inputs: eps_degenerate = 1e-12 * s^2 with
  /// s the largest absolute coordinate, clamped below by 1e-30.
  static Tolerance for_points(std::span<const Point2<Scalar>> points) {
    Scalar scale(0);
    for (const auto& p : points) scale = std::max(scale, p.cwiseAbs().maxCoeff());
    scale = std::max(scale, Scalar(1e-30));
    Tolerance tol;
    tol.eps_degenerate = Scalar(1e-12) * scale * scale;
    return tol;
  }
};

using Toleranced = Tolerance<double>;

template <typename Scalar>
bool is_finite(const Point2<Scalar>& p) {
  using std::isfinite;
  return isfinite(p.x()) && isfinite(p.y());
}

template <typename Scalar>
bool is_valid(const Circle<Scalar>& c) {
  using std::isfinite;
  return is_finite(c.center) && isfinite(c.radius) && c.radius >= Scalar(0);
}

/// Circle having segment pq as its diameter. Exactly symmetric in p and q.
template <typename Scalar>
Circle<Scalar> circle_from_two(const Point2<Scalar>& p, const Point2<Scalar>& q) {
  // (p + q) and |p - q| are both commutative in IEEE arithmetic.
  return {(p + q) / Scalar(2), (p - q).norm() / Scalar(2)};
}

/// Circle through three points. The center solves
///   a*x0 + b*y0 = e,  c*x0 + d*y0 = f
/// with a..f taken relative to p. Throws CollinearError when the system is
/// (numerically) singular.
template <typename Scalar>
Circle<Scalar> circumcircle(const Point2<Scalar>& p, const Point2<Scalar>& q,
                            const Point2<Scalar>& h, const Tolerance<Scalar>& tol) {
  using std::abs;
  const Scalar a = p.x() - q.x();
  const Scalar b = p.y() - q.y();
  const Scalar c = p.x() - h.x();
  const Scalar d = p.y() - h.y();
  const Scalar e = ((p.x() * p.x() - q.x() * q.x()) - (q.y() * q.y() - p.y() * p.y())) / Scalar(2);
  const Scalar f = ((p.x() * p.x() - h.x() * h.x()) - (h.y() * h.y() - p.y() * p.y())) / Scalar(2);

  const Scalar det = b * c - a * d;
  if (!(abs(det) > tol.eps_degenerate)) {
    throw CollinearError("circumcircle: points are collinear (|bc - ad| below threshold)");
  }
  // Cramer's rule: x0 = (de - bf) / (ad - bc), y0 = (af - ce) / (ad - bc).
  const Point2<Scalar> center((d * e - b * f) / -det, (a * f - c * e) / -det);
  return {center, (center - p).norm()};
}

template <typename Scalar>
bool contains(const Circle<Scalar>& c, const Point2<Scalar>& p, const Tolerance<Scalar>& tol) {
  return (p - c.center).norm() <= c.radius + tol.eps_contain;
}

template <typename Scalar>
bool on_boundary(const Circle<Scalar>& c, const Point2<Scalar>& p, const Tolerance<Scalar>& tol) {
  using std::abs;
  return abs((p - c.center).norm() - c.radius) <= tol.eps_contain;
}

}  // namespace encircle

#pragma once

#include "encircle/geom.hpp"
#include "encircle/random.hpp"

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <utility>

namespace encircle {

/// UAV position; z is the altitude above the ground plane of the nodes.
template <typename Scalar>
using Waypoint3 = Eigen::Matrix<Scalar, 3, 1>;

using Waypoint3d = Waypoint3<double>;

/// Sigmoid LoS model constants: P_LoS = 1 / (1 + a * exp(-b * (theta - a))),
/// theta in degrees.
template <typename Scalar>
struct LosParams {
  Scalar a = Scalar(9.61);
  Scalar b = Scalar(0.16);

  bool valid() const {
    using std::isfinite;
    return isfinite(a) && isfinite(b) && a > Scalar(0) && b > Scalar(0);
  }
};

/// Power-law gains: h_los = beta0 * d^-alpha_los, h_nlos = mu * beta0 * d^-alpha_nlos.
template <typename Scalar>
struct ChannelParams {
  Scalar beta0 = Scalar(1e-3);
  Scalar alpha_los = Scalar(2);
  Scalar alpha_nlos = Scalar(3);
  Scalar mu = Scalar(0.2);

  bool valid() const {
    using std::isfinite;
    return isfinite(beta0) && isfinite(alpha_los) && isfinite(alpha_nlos) && isfinite(mu) &&
           beta0 > Scalar(0) && alpha_los >= Scalar(1) && alpha_nlos >= alpha_los && mu > Scalar(0) &&
           mu <= Scalar(1);
  }
};

using LosParamsd = LosParams<double>;
using ChannelParamsd = ChannelParams<double>;

template <typename Scalar>
struct LinkStats {
  Scalar distance = Scalar(0);
  Scalar elevation_deg = Scalar(0);
  Scalar p_los = Scalar(0);
  Scalar h_los = Scalar(0);
  Scalar h_nlos = Scalar(0);
  Scalar h_expected = Scalar(0);
};

template <typename Scalar>
bool is_valid(const Waypoint3<Scalar>& u) {
  return u.allFinite() && u.z() > Scalar(0);
}

/// Slant range from the UAV to a node on the ground plane.
template <typename Scalar>
Scalar distance(const Waypoint3<Scalar>& u, const Point2<Scalar>& s) {
  return (Waypoint3<Scalar>(s.x(), s.y(), Scalar(0)) - u).norm();
}

/// Elevation of the UAV seen from the node, in degrees within (0, 90].
template <typename Scalar>
Scalar elevation_angle(const Waypoint3<Scalar>& u, const Point2<Scalar>& s) {
  using std::atan2;
  const Scalar horizontal = (s - u.template head<2>()).norm();
  if (horizontal == Scalar(0)) return Scalar(90);
  return atan2(u.z(), horizontal) * (Scalar(180) / std::numbers::pi_v<Scalar>);
}

template <typename Scalar>
Scalar los_probability(Scalar theta_deg, const LosParams<Scalar>& p) {
  using std::exp;
  return Scalar(1) / (Scalar(1) + p.a * exp(-p.b * (theta_deg - p.a)));
}

template <typename Scalar>
Scalar nlos_probability(Scalar theta_deg, const LosParams<Scalar>& p) {
  return Scalar(1) - los_probability(theta_deg, p);
}

/// (h_los, h_nlos) at slant range d > 0.
template <typename Scalar>
std::pair<Scalar, Scalar> gains(Scalar d, const ChannelParams<Scalar>& p) {
  using std::pow;
  return {p.beta0 * pow(d, -p.alpha_los), p.mu * p.beta0 * pow(d, -p.alpha_nlos)};
}

template <typename Scalar>
LinkStats<Scalar> link_stats(const Waypoint3<Scalar>& u, const Point2<Scalar>& s, const LosParams<Scalar>& lp,
                             const ChannelParams<Scalar>& cp) {
  LinkStats<Scalar> out;
  out.distance = distance(u, s);
  out.elevation_deg = elevation_angle(u, s);
  out.p_los = los_probability(out.elevation_deg, lp);
  std::tie(out.h_los, out.h_nlos) = gains(out.distance, cp);
  out.h_expected = out.p_los * out.h_los + (Scalar(1) - out.p_los) * out.h_nlos;
  return out;
}

/// Mean gain over the LoS state: P_LoS * h_los + (1 - P_LoS) * h_nlos.
template <typename Scalar>
Scalar expected_gain(const Waypoint3<Scalar>& u, const Point2<Scalar>& s, const LosParams<Scalar>& lp,
                     const ChannelParams<Scalar>& cp) {
  return link_stats(u, s, lp, cp).h_expected;
}

/// One realization of the mixed gain: draws the LoS indicator from `stream`
/// and returns exactly h_los or h_nlos.
template <typename Scalar>
Scalar sample_gain(const Waypoint3<Scalar>& u, const Point2<Scalar>& s, const LosParams<Scalar>& lp,
                   const ChannelParams<Scalar>& cp, Stream& stream) {
  const Scalar p_los = los_probability(elevation_angle(u, s), lp);
  const auto [h_los, h_nlos] = gains(distance(u, s), cp);
  const bool los = Scalar(uniform01(stream)) < p_los;
  return los ? h_los : h_nlos;
}

}  // namespace encircle

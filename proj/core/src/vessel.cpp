#include "vfg/vessel.hpp"

#include <algorithm>
#include <stdexcept>

#include "vfg/angles.hpp"

namespace vfg {

namespace {

void validate_spd(const Eigen::Matrix3d& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw std::invalid_argument("vessel mass matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(m);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("vessel mass matrix must be positive-definite");
  }
}

}  // namespace

VesselParams::VesselParams(const Eigen::Matrix3d& mass_matrix,
                           const Eigen::Vector3d& damping_linear,
                           const Eigen::Vector3d& damping_quadratic,
                           double thruster_separation_a, double thrust_limit)
    : mass_(mass_matrix),
      d_lin_(damping_linear),
      d_quad_(damping_quadratic),
      separation_a_(thruster_separation_a),
      thrust_limit_(thrust_limit) {
  validate_spd(mass_);
  if (separation_a_ <= 0.0) {
    throw std::invalid_argument("thruster separation must be > 0");
  }
  if (thrust_limit_ <= 0.0) {
    throw std::invalid_argument("thrust limit must be > 0");
  }
  mass_inv_ = mass_.inverse();
}

VesselParams::VesselParams()
    : VesselParams(Eigen::Vector3d(60.0, 80.0, 15.0).asDiagonal(),
                   Eigen::Vector3d(20.0, 40.0, 10.0), Eigen::Vector3d(15.0, 60.0, 5.0),
                   0.6, 60.0) {}

Eigen::Matrix3d VesselParams::coriolis(const Eigen::Vector3d& nu) const {
  // Surge is decoupled from sway/yaw in M (m12 = m13 = 0 for port-starboard
  // symmetric hulls), which leaves two independent entries.
  const double c13 = -(mass_(1, 1) * nu(1) + mass_(1, 2) * nu(2));
  const double c23 = mass_(0, 0) * nu(0);
  Eigen::Matrix3d c;
  c << 0.0, 0.0, c13,  //
      0.0, 0.0, c23,   //
      -c13, -c23, 0.0;
  return c;
}

Eigen::Matrix3d VesselParams::damping(const Eigen::Vector3d& nu) const {
  Eigen::Vector3d diag = d_lin_ + d_quad_.cwiseProduct(nu.cwiseAbs());
  return diag.asDiagonal();
}

PoseRates kinematics_rates(const VesselState& state) {
  const double c = std::cos(state.yaw);
  const double s = std::sin(state.yaw);
  return {state.surge_u * c - state.sway_v * s, state.surge_u * s + state.sway_v * c,
          state.yaw_rate_r};
}

VelocityRates dynamics_rates(const VesselState& state, const ThrustCommand& thrust,
                             const VesselParams& params) {
  const Eigen::Vector3d nu = state.nu();
  const Eigen::Vector3d tau(thrust.tau_u, 0.0, thrust.tau_r);
  const Eigen::Vector3d rhs =
      tau - params.coriolis(nu) * nu - params.damping(nu) * nu;
  const Eigen::Vector3d nu_dot = params.mass_inverse() * rhs;
  return {nu_dot(0), nu_dot(1), nu_dot(2)};
}

ThrustAllocation allocate_thrust(const ThrustCommand& thrust, const VesselParams& params) {
  const double a = params.thruster_separation_a();
  const double limit = params.thrust_limit();
  ThrustAllocation alloc;
  alloc.f1 = thrust.tau_u / 2.0 + thrust.tau_r / a;
  alloc.f2 = thrust.tau_u / 2.0 - thrust.tau_r / a;
  const double f1_sat = std::clamp(alloc.f1, -limit, limit);
  const double f2_sat = std::clamp(alloc.f2, -limit, limit);
  alloc.saturated = (f1_sat != alloc.f1) || (f2_sat != alloc.f2);
  alloc.f1 = f1_sat;
  alloc.f2 = f2_sat;
  return alloc;
}

ThrustCommand thrust_from_propellers(double f1, double f2, double a) {
  return {f1 + f2, a / 2.0 * (f1 - f2)};
}

BodyRates propeller_to_body(double u1, double u2, double a) {
  if (a <= 0.0) {
    throw std::invalid_argument("propeller separation must be > 0");
  }
  return {(u1 + u2) / 2.0, (u1 - u2) / a};
}

}  // namespace vfg

#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace vfg {

/// Full simulation state of one vehicle: NED-frame pose plus body-frame
/// velocities. Yaw is kept wrapped to (-pi, pi] by every state update.
struct VesselState {
  double north = 0.0;       // m
  double east = 0.0;        // m
  double yaw = 0.0;         // rad
  double surge_u = 0.0;     // m/s, body x
  double sway_v = 0.0;      // m/s, body y
  double yaw_rate_r = 0.0;  // rad/s

  double speed() const { return std::hypot(surge_u, sway_v); }
  Eigen::Vector2d position() const { return {north, east}; }
  Eigen::Vector3d nu() const { return {surge_u, sway_v, yaw_rate_r}; }
};

struct PoseRates {
  double north_dot;
  double east_dot;
  double yaw_dot;
};

struct VelocityRates {
  double u_dot;
  double v_dot;
  double r_dot;
};

/// Surge force and yaw moment demanded from the propulsion system.
struct ThrustCommand {
  double tau_u = 0.0;  // N
  double tau_r = 0.0;  // N*m
};

struct ThrustAllocation {
  double f1 = 0.0;  // N, left propeller
  double f2 = 0.0;  // N, right propeller
  bool saturated = false;
};

/// Rigid-body plus added-mass parameters of the 3-DOF model.
///
/// The inertia matrix M (rigid body + added mass combined) must be symmetric
/// positive-definite. The Coriolis matrix is built from M entries and is skew
/// symmetric by construction; damping is diagonal, linear + quadratic in the
/// matching velocity component.
class VesselParams {
 public:
  VesselParams(const Eigen::Matrix3d& mass_matrix,
               const Eigen::Vector3d& damping_linear,
               const Eigen::Vector3d& damping_quadratic,
               double thruster_separation_a, double thrust_limit);

  /// A small differential-thrust catamaran in the 50 kg class.
  VesselParams();

  const Eigen::Matrix3d& mass_matrix() const { return mass_; }
  const Eigen::Matrix3d& mass_inverse() const { return mass_inv_; }
  const Eigen::Vector3d& damping_linear() const { return d_lin_; }
  const Eigen::Vector3d& damping_quadratic() const { return d_quad_; }
  double thruster_separation_a() const { return separation_a_; }
  double thrust_limit() const { return thrust_limit_; }

  /// C(nu) from the M entries; skew-symmetric for any nu.
  Eigen::Matrix3d coriolis(const Eigen::Vector3d& nu) const;

  /// D(nu) = D_l + D_q*|nu| applied componentwise on the diagonal.
  Eigen::Matrix3d damping(const Eigen::Vector3d& nu) const;

 private:
  Eigen::Matrix3d mass_;
  Eigen::Matrix3d mass_inv_;
  Eigen::Vector3d d_lin_;
  Eigen::Vector3d d_quad_;
  double separation_a_;
  double thrust_limit_;
};

/// Pose rates of the kinematic model: body velocities rotated by yaw.
PoseRates kinematics_rates(const VesselState& state);

/// Body-frame accelerations solving M*nu_dot = tau - C(nu)*nu - D(nu)*nu.
/// The sway channel carries no actuation (underactuated layout): the applied
/// generalized force is [tau_u, 0, tau_r].
VelocityRates dynamics_rates(const VesselState& state, const ThrustCommand& thrust,
                             const VesselParams& params);

/// Inverts the propulsion configuration for two fixed propellers separated by
/// distance a: f1 = tau_u/2 + tau_r/a, f2 = tau_u/2 - tau_r/a. Each propeller
/// force is then clipped to +-thrust_limit; `saturated` reports whether any
/// clipping occurred.
ThrustAllocation allocate_thrust(const ThrustCommand& thrust, const VesselParams& params);

/// Generalized force produced by two propeller forces (the forward map).
ThrustCommand thrust_from_propellers(double f1, double f2, double a);

struct BodyRates {
  double u;  // m/s
  double r;  // rad/s
};

/// Propeller speeds to body surge and yaw rate: u = (u1+u2)/2, r = (u1-u2)/a.
BodyRates propeller_to_body(double u1, double u2, double a);

}  // namespace vfg

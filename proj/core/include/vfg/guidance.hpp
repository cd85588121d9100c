#pragma once

#include <string>
#include <string_view>

#include "vfg/angles.hpp"
#include "vfg/path.hpp"

namespace vfg {

enum class GuidanceLaw { Los, Alos, Vfalos, Vfilos, Tlos };

GuidanceLaw parse_guidance_law(std::string_view name);
std::string to_string(GuidanceLaw law);

/// Tuning set shared by the whole guidance family. Only the subset used by
/// the selected law matters at runtime, but all fields are validated.
struct GuidanceParams {
  double lookahead_delta = 5.0;         // m
  double adaptation_gain_gamma = 0.05;  // 1/s
  double vf_k = 1.0;                    // 1/m
  double vf_r_min = 10.0;               // m
  double y_max = 10.0;                  // m, speed law cross-track budget
  double chi_max = kPi / 3.0;           // rad, speed law course-error budget
  double u_max = 1.0;                   // m/s, speed swing above u_min
  double u_min = 0.5;                   // m/s, floor speed
  double delta_min = 2.0;               // m (time-varying lookahead law)
  double delta_max = 10.0;              // m
  double tlos_decay = 0.5;              // 1/m, lookahead shrink rate
  double integral_gain = 1.0;           // integral LOS sigma
  double integral_clamp = 20.0;         // m, anti-windup bound
  double beta_max = kPi / 4.0;          // rad, sideslip-estimate clamp

  void validate() const;  // throws std::invalid_argument
};

/// Law-specific state carried between control ticks: the sideslip estimate
/// for the adaptive laws, the integral state for the integral law.
struct GuidanceState {
  GuidanceLaw law = GuidanceLaw::Vfalos;
  double beta_hat = 0.0;  // rad
  double integral = 0.0;  // m
};

struct GuidanceCommand {
  double psi_d = 0.0;  // rad, wrapped to (-pi, pi]
  double u_d = 0.0;    // m/s
};

/// Plain LOS heading: psi_d = gamma_p - arctan(y_e/delta) - beta, wrapped.
double los_heading(double gamma_p, double y_e, double delta, double beta);

/// Adaptive LOS tick. Computes psi_d from the current estimate, then
/// integrates beta_hat_dot = gamma*delta*y_e/sqrt(delta^2 + y_e^2) forward by
/// dt (explicit Euler, clamped to +-beta_max). Returns psi_d.
double alos_step(double gamma_p, double y_e, GuidanceState& state,
                 const GuidanceParams& params, double dt);

/// Vector-field radius r_v = arctan(k*r)*(2/pi)*r_min + (r - r_min).
/// Requires r >= vf_r_min; tighter turns fall back to plain adaptive LOS.
double vector_field_radius(double r, const GuidanceParams& params);

/// Curved-path adaptive LOS tick around an arc of radius r centered where
/// the vehicle sits at distance d and azimuth gamma_c. The heading aims along
/// the tangent corrected toward the vector-field circle of radius r_v; the
/// sign of the pi/2 tangent offset and of the radial error follow the arc
/// direction. Returns psi_d and advances beta_hat.
double vfalos_step(double gamma_c, double d, double r, ArcDirection direction,
                   GuidanceState& state, const GuidanceParams& params, double dt);

/// The unified form of the curved law, expressed in cross-track coordinates:
/// psi_d = gamma_p - beta_hat - arctan((y_e + r - r_v)/delta). For infinite r
/// the offset vanishes and the tick is identical to alos_step.
double straight_vfalos_step(double gamma_p, double y_e, double r,
                            GuidanceState& state, const GuidanceParams& params, double dt);

/// Integral LOS tick (no parameter adaptation):
/// psi_d = gamma_p - arctan((y_e + sigma*y_int)/delta),
/// y_int_dot = delta*y_e/((y_e + sigma*y_int)^2 + delta^2), clamped.
double ilos_step(double gamma_p, double y_e, GuidanceState& state,
                 const GuidanceParams& params, double dt);

/// Time-varying lookahead: (delta_max - delta_min)*exp(-decay*|y_e|) + delta_min.
double tlos_delta(double y_e, const GuidanceParams& params);

/// Speed setpoint shrinking with cross-track and course error:
/// u_d = max(u_max*(1 - |y_e|/y_max - |chi_err|/chi_max) + u_min, u_min).
/// chi_err is wrapped to (-pi, pi] before taking the absolute value.
double desired_speed(double y_e, double chi_err, const GuidanceParams& params);

/// Per-segment geometry handed to the guidance driver by the simulator.
struct SegmentContext {
  bool is_arc = false;
  double radius = std::numeric_limits<double>::infinity();
  ArcDirection direction = ArcDirection::Ccw;
};

struct GuidanceStepResult {
  double psi_d = 0.0;
  double u_d = 0.0;
  double field_error = 0.0;  // signed error driving the law (d - r_v form on arcs)
  double r_v = 0.0;          // effective radius used, NaN off-arc
};

/// One guidance tick: dispatches on the law, picks the straight or curved
/// variant per segment kind, and applies the speed-distribution law with
/// chi_d = psi_d + beta_hat.
GuidanceStepResult guidance_step(GuidanceLaw law, const ProjectionResult& proj,
                                 const SegmentContext& seg, double course_chi,
                                 GuidanceState& state, const GuidanceParams& params,
                                 double dt);

}  // namespace vfg

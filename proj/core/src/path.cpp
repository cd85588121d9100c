#include "vfg/path.hpp"

#include <cmath>
#include <stdexcept>

#include "vfg/angles.hpp"

namespace vfg {

namespace {

double azimuth_of(const Vec2& v) { return std::atan2(v.y(), v.x()); }

Vec2 unit_at(double azimuth) { return {std::cos(azimuth), std::sin(azimuth)}; }

/// Angular distance traveled from the arc start to the given azimuth,
/// measured along the traversal direction, in [0, 2*pi).
double arc_progress(const ArcSegment& arc, double azimuth) {
  if (arc.direction == ArcDirection::Ccw) {
    return wrap_two_pi(arc.start_angle - azimuth);
  }
  return wrap_two_pi(azimuth - arc.start_angle);
}

double azimuth_at_progress(const ArcSegment& arc, double progress) {
  return arc.direction == ArcDirection::Ccw ? arc.start_angle - progress
                                            : arc.start_angle + progress;
}

}  // namespace

double ArcSegment::extent() const {
  const double ext = direction == ArcDirection::Ccw
                         ? wrap_two_pi(start_angle - end_angle)
                         : wrap_two_pi(end_angle - start_angle);
  return ext == 0.0 ? kTwoPi : ext;
}

Vec2 ArcSegment::point_at(double azimuth) const {
  return center + radius * unit_at(azimuth);
}

double ArcSegment::tangent_at(double azimuth) const {
  return direction == ArcDirection::Ccw ? wrap_pi(azimuth - kPi / 2.0)
                                        : wrap_pi(azimuth + kPi / 2.0);
}

Vec2 segment_start(const PathSegment& seg) {
  return std::visit([](const auto& s) -> Vec2 {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, LineSegment>) {
      return s.start;
    } else {
      return s.start_point();
    }
  }, seg);
}

Vec2 segment_end(const PathSegment& seg) {
  return std::visit([](const auto& s) -> Vec2 {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, LineSegment>) {
      return s.end;
    } else {
      return s.end_point();
    }
  }, seg);
}

double segment_length(const PathSegment& seg) {
  return std::visit([](const auto& s) -> double {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, LineSegment>) {
      return (s.end - s.start).norm();
    } else {
      return s.radius * s.extent();
    }
  }, seg);
}

Path::Path(std::vector<PathSegment> segments, double switching_radius,
           double continuity_tol)
    : segments_(std::move(segments)), switching_radius_(switching_radius) {
  if (segments_.empty()) {
    throw std::invalid_argument("path must contain at least one segment");
  }
  if (switching_radius_ <= 0.0) {
    throw std::invalid_argument("switching radius must be > 0");
  }
  for (const auto& seg : segments_) {
    if (const auto* line = std::get_if<LineSegment>(&seg)) {
      if ((line->end - line->start).norm() == 0.0) {
        throw std::invalid_argument("line segment endpoints must differ");
      }
    } else {
      const auto& arc = std::get<ArcSegment>(seg);
      if (arc.radius <= 0.0) {
        throw std::invalid_argument("arc radius must be > 0");
      }
    }
  }
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    const double gap = (segment_end(segments_[i]) - segment_start(segments_[i + 1])).norm();
    if (gap > continuity_tol) {
      throw std::invalid_argument("path segments are not endpoint-continuous");
    }
  }
}

Path Path::from_waypoints(std::span<const Vec2> waypoints,
                          std::span<const double> corner_radii,
                          double switching_radius) {
  if (waypoints.size() < 2) {
    throw std::invalid_argument("waypoint path needs at least two points");
  }
  const std::size_t interior = waypoints.size() - 2;
  if (!(corner_radii.empty() || corner_radii.size() == 1 || corner_radii.size() == interior)) {
    throw std::invalid_argument("corner_radii must be empty, one value, or one per interior waypoint");
  }
  auto radius_for = [&](std::size_t corner) -> double {
    if (corner_radii.empty()) return 0.0;
    return corner_radii.size() == 1 ? corner_radii[0] : corner_radii[corner];
  };

  std::vector<PathSegment> segs;
  Vec2 cursor = waypoints[0];
  for (std::size_t i = 1; i + 1 < waypoints.size(); ++i) {
    const Vec2 a = waypoints[i - 1];
    const Vec2 b = waypoints[i];
    const Vec2 c = waypoints[i + 1];
    const Vec2 leg1 = b - a;
    const Vec2 leg2 = c - b;
    if (leg1.norm() == 0.0 || leg2.norm() == 0.0) {
      throw std::invalid_argument("repeated waypoints are not allowed");
    }
    const double az1 = azimuth_of(leg1);
    const double az2 = azimuth_of(leg2);
    const double delta = wrap_pi(az2 - az1);
    const double rho = radius_for(i - 1);
    if (rho <= 0.0 || std::abs(delta) < 1e-9) {
      if ((b - cursor).norm() > 1e-12) {
        segs.push_back(LineSegment{cursor, b});
      }
      cursor = b;
      continue;
    }
    if (kPi - std::abs(delta) < 1e-9) {
      throw std::invalid_argument("cannot fillet a reversing corner");
    }
    const double trim = rho * std::tan(std::abs(delta) / 2.0);
    if (trim > (b - cursor).norm() + 1e-9 || trim > leg2.norm() + 1e-9) {
      throw std::invalid_argument("corner radius too large for adjacent legs");
    }
    const Vec2 p1 = b - leg1.normalized() * trim;
    const Vec2 p2 = b + leg2.normalized() * trim;
    if ((p1 - cursor).norm() > 1e-12) {
      segs.push_back(LineSegment{cursor, p1});
    }
    const double side = delta > 0.0 ? kPi / 2.0 : -kPi / 2.0;
    const Vec2 center = p1 + rho * unit_at(az1 + side);
    ArcSegment arc;
    arc.center = center;
    arc.radius = rho;
    arc.start_angle = azimuth_of(p1 - center);
    arc.end_angle = azimuth_of(p2 - center);
    arc.direction = delta > 0.0 ? ArcDirection::Cw : ArcDirection::Ccw;
    segs.push_back(arc);
    cursor = p2;
  }
  if ((waypoints.back() - cursor).norm() > 1e-12) {
    segs.push_back(LineSegment{cursor, waypoints.back()});
  }
  return Path(std::move(segs), switching_radius);
}

double Path::total_length() const {
  double len = 0.0;
  for (const auto& seg : segments_) len += segment_length(seg);
  return len;
}

Path::SamplePoint Path::sample_ahead(std::size_t from, double s) const {
  if (from >= segments_.size()) {
    throw std::out_of_range("segment index out of range");
  }
  std::size_t i = from;
  double rem = std::max(0.0, s);
  while (rem > segment_length(segments_[i]) && i + 1 < segments_.size()) {
    rem -= segment_length(segments_[i]);
    ++i;
  }
  const auto& seg = segments_[i];
  const double len = segment_length(seg);
  rem = std::min(rem, len);
  if (const auto* line = std::get_if<LineSegment>(&seg)) {
    const Vec2 dir = (line->end - line->start).normalized();
    return {line->start + dir * rem, azimuth_of(line->end - line->start), i};
  }
  const auto& arc = std::get<ArcSegment>(seg);
  const double az = azimuth_at_progress(arc, rem / arc.radius);
  return {arc.point_at(az), arc.tangent_at(az), i};
}

double Path::projection_arclength(const ProjectionResult& proj) const {
  const auto& seg = segments_.at(proj.segment_index);
  if (const auto* line = std::get_if<LineSegment>(&seg)) {
    return (proj.point_p - line->start).norm();
  }
  const auto& arc = std::get<ArcSegment>(seg);
  const double az = azimuth_of(proj.point_p - arc.center);
  const double prog = std::min(arc_progress(arc, az), arc.extent());
  return prog * arc.radius;
}

double cross_track_error(const Vec2& pos, const Vec2& point_p, double gamma_p) {
  return -(pos.x() - point_p.x()) * std::sin(gamma_p) +
         (pos.y() - point_p.y()) * std::cos(gamma_p);
}

ProjectionResult project(const Path& path, const Vec2& pos, std::size_t active_segment) {
  if (active_segment >= path.size()) {
    throw std::out_of_range("segment index out of range");
  }
  const auto& seg = path.segments()[active_segment];
  ProjectionResult res;
  res.segment_index = active_segment;
  res.dist_to_center_d = std::numeric_limits<double>::quiet_NaN();
  res.azimuth_gamma_c = std::numeric_limits<double>::quiet_NaN();

  if (const auto* line = std::get_if<LineSegment>(&seg)) {
    const Vec2 dir = line->end - line->start;
    const double len = dir.norm();
    const Vec2 unit = dir / len;
    const double along = std::clamp((pos - line->start).dot(unit), 0.0, len);
    res.point_p = line->start + unit * along;
    res.tangent_gamma_p = azimuth_of(dir);
  } else {
    const auto& arc = std::get<ArcSegment>(seg);
    const Vec2 radial = pos - arc.center;
    const double d = radial.norm();
    if (d == 0.0) {
      throw std::domain_error("projection undefined at arc center");
    }
    const double gamma_c = azimuth_of(radial);
    const double prog = arc_progress(arc, gamma_c);
    const double ext = arc.extent();
    double az = gamma_c;
    if (prog > ext) {
      // Outside the traversed span: snap to the angularly-nearer endpoint.
      az = (prog - ext <= kTwoPi - prog) ? arc.end_angle : arc.start_angle;
    }
    res.point_p = arc.point_at(az);
    res.tangent_gamma_p = arc.tangent_at(az);
    res.dist_to_center_d = d;
    res.azimuth_gamma_c = gamma_c;
  }
  res.cross_track_ye = cross_track_error(pos, res.point_p, res.tangent_gamma_p);
  return res;
}

TurnRadiusResult turn_radius(const Vec2& p, const Vec2& p_next, double gamma_p,
                             double gamma_p_next) {
  const double dgamma = wrap_pi(gamma_p_next - gamma_p);
  if (std::abs(dgamma) < 1e-12) {
    return {};  // no tangent change: straight
  }
  const double chord = (p_next - p).norm();
  const double r = chord / (2.0 * std::sin(dgamma / 2.0));
  return {false, std::abs(r), dgamma > 0.0 ? 1 : -1};
}

AdvanceResult advance_segment(const Path& path, const Vec2& pos, std::size_t active_segment) {
  if (active_segment >= path.size()) {
    throw std::out_of_range("segment index out of range");
  }
  const Vec2 endpoint = segment_end(path.segments()[active_segment]);
  const bool reached = (pos - endpoint).norm() <= path.switching_radius();
  if (!reached) {
    return {active_segment, false};
  }
  if (active_segment + 1 < path.size()) {
    return {active_segment + 1, false};
  }
  return {active_segment, true};
}

}  // namespace vfg

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <limits>
#include <span>
#include <variant>
#include <vector>

namespace vfg {

using Vec2 = Eigen::Vector2d;  // (north, east)

/// Traversal orientation of an arc on a north-up map. Azimuths are measured
/// from north toward east; Ccw means the azimuth seen from the arc center
/// decreases along the path (a left turn), Cw means it increases.
enum class ArcDirection { Ccw, Cw };

struct LineSegment {
  Vec2 start;
  Vec2 end;
};

struct ArcSegment {
  Vec2 center;
  double radius = 0.0;
  double start_angle = 0.0;  // azimuth of the traversal start point, rad
  double end_angle = 0.0;    // azimuth of the traversal end point, rad
  ArcDirection direction = ArcDirection::Ccw;

  /// Angular span in (0, 2*pi]; equal endpoint angles denote a full circle.
  double extent() const;
  Vec2 point_at(double azimuth) const;
  Vec2 start_point() const { return point_at(start_angle); }
  Vec2 end_point() const { return point_at(end_angle); }
  /// Path tangent angle at the given azimuth: gamma_c -+ pi/2 per direction.
  double tangent_at(double azimuth) const;
};

using PathSegment = std::variant<LineSegment, ArcSegment>;

Vec2 segment_start(const PathSegment& seg);
Vec2 segment_end(const PathSegment& seg);
double segment_length(const PathSegment& seg);

struct ProjectionResult {
  Vec2 point_p;                // closest point on the active segment
  double tangent_gamma_p;      // path tangent angle at point_p
  double cross_track_ye;       // signed cross-track error at point_p
  double dist_to_center_d;     // arcs only, NaN for lines
  double azimuth_gamma_c;      // arcs only, NaN for lines
  std::size_t segment_index;
};

/// An ordered, endpoint-continuous sequence of lines and arcs with an
/// acceptance circle for advancing between segments.
class Path {
 public:
  Path(std::vector<PathSegment> segments, double switching_radius,
       double continuity_tol = 1e-6);

  /// Builds a path from a waypoint polyline, rounding each interior corner
  /// with a tangent arc of the given radius. `corner_radii` holds one radius
  /// per interior waypoint (or a single value applied to all corners); zero
  /// leaves the corner sharp.
  static Path from_waypoints(std::span<const Vec2> waypoints,
                             std::span<const double> corner_radii,
                             double switching_radius);

  const std::vector<PathSegment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  double switching_radius() const { return switching_radius_; }
  double total_length() const;

  struct SamplePoint {
    Vec2 point;
    double tangent;
    std::size_t segment_index;
  };

  /// Point and tangent at arclength `s` measured from the start of segment
  /// `from`, walking forward across segment boundaries and clamping at the
  /// path end.
  SamplePoint sample_ahead(std::size_t from, double s) const;

  /// Arclength of a projected point within its own segment.
  double projection_arclength(const ProjectionResult& proj) const;

 private:
  std::vector<PathSegment> segments_;
  double switching_radius_;
};

/// Signed cross-track error of `pos` relative to the path point `point_p`
/// with tangent angle `gamma_p`:
///   y_e = -(x - x_p)*sin(gamma_p) + (y - y_p)*cos(gamma_p)
/// with x north and y east. Positive y_e lies toward azimuth gamma_p + pi/2.
double cross_track_error(const Vec2& pos, const Vec2& point_p, double gamma_p);

/// Closest point on the active segment. Lines use the orthogonal projection
/// clamped to the segment; arcs use the radial projection clamped to the
/// traversed angular span. Throws std::domain_error when `pos` coincides with
/// an arc center (the azimuth is undefined there).
ProjectionResult project(const Path& path, const Vec2& pos, std::size_t active_segment);

struct TurnRadiusResult {
  bool straight = false;  // tangent angles equal: no turn, infinite radius
  double radius = std::numeric_limits<double>::infinity();
  int turn_sign = 0;  // sign of the wrapped tangent change, 0 when straight
};

/// Radius of the circle through two path points with the given tangent
/// angles: r = chord / (2*sin(dgamma/2)), dgamma wrapped to (-pi, pi].
TurnRadiusResult turn_radius(const Vec2& p, const Vec2& p_next, double gamma_p,
                             double gamma_p_next);

struct AdvanceResult {
  std::size_t segment;
  bool path_complete = false;
};

/// Advances to the next segment once `pos` enters the switching circle around
/// the active segment's endpoint. The final segment never advances; reaching
/// its endpoint sets `path_complete` instead.
AdvanceResult advance_segment(const Path& path, const Vec2& pos, std::size_t active_segment);

}  // namespace vfg

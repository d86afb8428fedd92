#pragma once

#include "core/tolerances.hpp"

namespace anglespec {

// Point of the upper half-plane, y > 0.
struct HPoint {
  double x = 0;
  double y = 1;
};

// Complete geodesic of the upper half-plane: a semicircle orthogonal to the
// real axis or a vertical line, carrying an orientation given as an ordered
// pair of ideal endpoints. Endpoints live on R u {inf}.
class Geodesic {
 public:
  enum class Kind { Semicircle, Vertical };

  Geodesic() : Geodesic(Kind::Vertical, 0.0, 0.0, true) {}

  // forward = oriented toward the larger endpoint (center + radius).
  static Geodesic semicircle(double center, double radius, bool forward = true);
  // upward = oriented from the foot x toward inf.
  static Geodesic vertical(double x, bool upward = true);
  // Oriented geodesic from `from` to `to`; at most one endpoint infinite.
  static Geodesic through(double from, double to);

  Kind kind() const { return kind_; }
  bool is_vertical() const { return kind_ == Kind::Vertical; }
  double center() const { return m_; }  // Semicircle only
  double radius() const { return r_; }  // Semicircle only
  double x() const { return m_; }       // Vertical only
  bool forward() const { return fwd_; }

  double start() const;  // first ideal endpoint (may be inf)
  double end() const;    // second ideal endpoint (may be inf)

  Geodesic reversed() const { return Geodesic(kind_, m_, r_, !fwd_); }
  bool same_unoriented(const Geodesic& o, double eps = tol::num) const;

 private:
  Geodesic(Kind k, double m, double r, bool fwd)
      : kind_(k), m_(m), r_(r), fwd_(fwd) {}

  Kind kind_;
  double m_;  // center (semicircle) or abscissa (vertical)
  double r_;  // radius; 0 for vertical
  bool fwd_;
};

// True iff the endpoint pairs strictly interleave on the boundary circle.
// Tangency (shared endpoint, nested or disjoint intervals) within eps
// returns false.
bool crosses(const Geodesic& g1, const Geodesic& g2, double eps = tol::num);

// The unique common point; requires crosses(g1, g2).
HPoint intersection_point(const Geodesic& g1, const Geodesic& g2);

// cos^2 of the intersection angle via the closed forms: law of cosines on
// the triangle of centers for two semicircles, ((v - m)/r)^2 for a vertical
// line against a semicircle. Direction-independent. Requires crossing.
double angle_cos2(const Geodesic& g1, const Geodesic& g2);

// Counterclockwise angle from g1 to g2 at the intersection point, measured
// between the tangent directions pointing along each orientation, reduced
// mod pi into (0, pi). Requires crossing.
double oriented_angle(const Geodesic& g1, const Geodesic& g2);

double hyperbolic_distance(const HPoint& p, const HPoint& q);

}  // namespace anglespec

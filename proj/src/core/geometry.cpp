#include "core/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"

namespace anglespec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vec2 {
  double x, y;
};

// Tangent direction at p pointing along the geodesic's orientation. Not
// normalized; only the direction matters.
Vec2 tangent_at(const Geodesic& g, const HPoint& p) {
  if (g.is_vertical()) return g.forward() ? Vec2{0, 1} : Vec2{0, -1};
  if (g.forward()) return Vec2{p.y, g.center() - p.x};
  return Vec2{-p.y, p.x - g.center()};
}

}  // namespace

Geodesic Geodesic::semicircle(double center, double radius, bool forward) {
  if (!(radius > 0)) throw std::invalid_argument("semicircle radius must be positive");
  return Geodesic(Kind::Semicircle, center, radius, forward);
}

Geodesic Geodesic::vertical(double x, bool upward) {
  return Geodesic(Kind::Vertical, x, 0.0, upward);
}

Geodesic Geodesic::through(double from, double to) {
  if (std::isinf(from) && std::isinf(to))
    throw std::invalid_argument("geodesic endpoints must be distinct");
  if (std::isinf(from)) return vertical(to, false);
  if (std::isinf(to)) return vertical(from, true);
  if (from == to) throw std::invalid_argument("geodesic endpoints must be distinct");
  return semicircle((from + to) / 2, std::fabs(to - from) / 2, to > from);
}

double Geodesic::start() const {
  if (is_vertical()) return fwd_ ? m_ : kInf;
  return fwd_ ? m_ - r_ : m_ + r_;
}

double Geodesic::end() const {
  if (is_vertical()) return fwd_ ? kInf : m_;
  return fwd_ ? m_ + r_ : m_ - r_;
}

bool Geodesic::same_unoriented(const Geodesic& o, double eps) const {
  if (kind_ != o.kind_) return false;
  return std::fabs(m_ - o.m_) <= eps && std::fabs(r_ - o.r_) <= eps;
}

bool crosses(const Geodesic& g1, const Geodesic& g2, double eps) {
  if (g1.is_vertical() && g2.is_vertical()) return false;  // both end at inf
  if (g1.is_vertical() || g2.is_vertical()) {
    const Geodesic& v = g1.is_vertical() ? g1 : g2;
    const Geodesic& s = g1.is_vertical() ? g2 : g1;
    double lo = s.center() - s.radius(), hi = s.center() + s.radius();
    return v.x() > lo + eps && v.x() < hi - eps;
  }
  double l1 = g1.center() - g1.radius(), h1 = g1.center() + g1.radius();
  double l2 = g2.center() - g2.radius(), h2 = g2.center() + g2.radius();
  auto side = [&](double x) {
    if (x > l1 + eps && x < h1 - eps) return 1;   // strictly inside
    if (x < l1 - eps || x > h1 + eps) return -1;  // strictly outside
    return 0;                                     // tangency zone
  };
  return side(l2) * side(h2) == -1;
}

HPoint intersection_point(const Geodesic& g1, const Geodesic& g2) {
  if (!crosses(g1, g2)) throw NoCrossingError("geodesics do not cross");
  if (g1.is_vertical() || g2.is_vertical()) {
    const Geodesic& v = g1.is_vertical() ? g1 : g2;
    const Geodesic& s = g1.is_vertical() ? g2 : g1;
    double dx = v.x() - s.center();
    double y2 = s.radius() * s.radius() - dx * dx;
    return HPoint{v.x(), std::sqrt(std::max(y2, 0.0))};
  }
  double m1 = g1.center(), r1 = g1.radius();
  double m2 = g2.center(), r2 = g2.radius();
  double x = (m1 * m1 - m2 * m2 + r2 * r2 - r1 * r1) / (2 * (m1 - m2));
  double y2 = r1 * r1 - (x - m1) * (x - m1);
  return HPoint{x, std::sqrt(std::max(y2, 0.0))};
}

double angle_cos2(const Geodesic& g1, const Geodesic& g2) {
  if (!crosses(g1, g2)) throw NoCrossingError("geodesics do not cross");
  double val;
  if (g1.is_vertical() || g2.is_vertical()) {
    const Geodesic& v = g1.is_vertical() ? g1 : g2;
    const Geodesic& s = g1.is_vertical() ? g2 : g1;
    double t = (v.x() - s.center()) / s.radius();
    val = t * t;
  } else {
    double r1 = g1.radius(), r2 = g2.radius();
    double d = std::fabs(g1.center() - g2.center());
    double num = r1 * r1 + r2 * r2 - d * d;
    val = (num * num) / (4 * r1 * r1 * r2 * r2);
  }
  if (val > 1 + 1e-9) throw InternalError("cos^2 exceeds 1 beyond tolerance");
  return std::clamp(val, 0.0, 1.0);
}

double oriented_angle(const Geodesic& g1, const Geodesic& g2) {
  HPoint p = intersection_point(g1, g2);  // throws NoCrossingError
  Vec2 t1 = tangent_at(g1, p);
  Vec2 t2 = tangent_at(g2, p);
  double cross = t1.x * t2.y - t1.y * t2.x;
  double dot = t1.x * t2.x + t1.y * t2.y;
  double theta = std::atan2(cross, dot);
  if (theta <= 0) theta += std::numbers::pi;
  return theta;
}

double hyperbolic_distance(const HPoint& p, const HPoint& q) {
  double dx = p.x - q.x, dy = p.y - q.y;
  double arg = 1 + (dx * dx + dy * dy) / (2 * p.y * q.y);
  return std::acosh(std::max(arg, 1.0));
}

}  // namespace anglespec

#include "core/moebius.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/errors.hpp"

namespace anglespec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double require_hyperbolic_trace(const MoebiusElement& m, const char* op) {
  MoebiusElement n = normalized(m);
  if (classify(n) != ElementClass::Hyperbolic)
    throw NotHyperbolicError(std::string(op) + ": element is not hyperbolic");
  return n.trace();
}

}  // namespace

MoebiusElement moebius(double a, double b, double c, double d,
                       std::optional<Word> word) {
  MoebiusElement m{a, b, c, d, std::move(word)};
  double det = m.det();
  if (!(det > 0)) throw std::invalid_argument("moebius: determinant must be positive");
  if (std::fabs(det - 1) > 1e-12) {
    double s = 1 / std::sqrt(det);
    m.a *= s;
    m.b *= s;
    m.c *= s;
    m.d *= s;
  }
  return normalized(std::move(m));
}

MoebiusElement normalized(MoebiusElement m) {
  double tr = m.trace();
  bool flip = tr < 0 || (tr == 0 && (m.c < 0 || (m.c == 0 && m.a < 0)));
  if (flip) {
    m.a = -m.a;
    m.b = -m.b;
    m.c = -m.c;
    m.d = -m.d;
  }
  // canonicalize negative zeros
  if (m.a == 0) m.a = 0;
  if (m.b == 0) m.b = 0;
  if (m.c == 0) m.c = 0;
  if (m.d == 0) m.d = 0;
  return m;
}

double projective_distance(const MoebiusElement& m, const MoebiusElement& n) {
  double dm = std::max(std::max(std::fabs(m.a - n.a), std::fabs(m.b - n.b)),
                       std::max(std::fabs(m.c - n.c), std::fabs(m.d - n.d)));
  double dp = std::max(std::max(std::fabs(m.a + n.a), std::fabs(m.b + n.b)),
                       std::max(std::fabs(m.c + n.c), std::fabs(m.d + n.d)));
  return std::min(dm, dp);
}

bool projectively_equal(const MoebiusElement& m, const MoebiusElement& n, double eps) {
  return projective_distance(m, n) < eps;
}

ElementClass classify(const MoebiusElement& m, double eps) {
  MoebiusElement n = normalized(m);
  double at = std::fabs(n.trace());
  if (at > 2 + eps) return ElementClass::Hyperbolic;
  if (std::fabs(at - 2) <= eps) {
    bool is_id = std::fabs(n.a - 1) <= eps && std::fabs(n.b) <= eps &&
                 std::fabs(n.c) <= eps && std::fabs(n.d - 1) <= eps;
    return is_id ? ElementClass::Identity : ElementClass::Parabolic;
  }
  return ElementClass::Elliptic;
}

FixedPoints fixed_points(const MoebiusElement& raw) {
  require_hyperbolic_trace(raw, "fixed_points");
  MoebiusElement m = normalized(raw);
  double tr = m.trace();
  if (m.c != 0) {
    // roots of c z^2 + (d - a) z - b = 0, written via tr^2 - 4 (det = 1)
    double s = std::sqrt(tr * tr - 4);
    double big = (m.a - m.d) + std::copysign(s, m.a - m.d);
    double r1 = big / (2 * m.c);
    double r2 = -2 * m.b / big;  // product of roots is -b/c
    // attracting root: derivative 1/(c z + d)^2 has modulus < 1 there
    double d1 = std::fabs(m.c * r1 + m.d);
    double d2 = std::fabs(m.c * r2 + m.d);
    if (d1 > d2) return FixedPoints{r2, r1};
    return FixedPoints{r1, r2};
  }
  double finite = m.b / (m.d - m.a);
  // with c = 0 the map is z -> a^2 z + ab, derivative a^2 everywhere
  if (std::fabs(m.a) > 1) return FixedPoints{finite, kInf};
  return FixedPoints{kInf, finite};
}

Geodesic axis(const MoebiusElement& raw) {
  require_hyperbolic_trace(raw, "axis");
  MoebiusElement m = normalized(raw);
  FixedPoints fp = fixed_points(m);
  if (m.c == 0) {
    double x = m.b / (m.d - m.a);
    return Geodesic::vertical(x, std::isinf(fp.attracting));
  }
  double tr = m.trace();
  double center = (m.a - m.d) / (2 * m.c);
  double radius = std::sqrt(tr * tr - 4) / (2 * std::fabs(m.c));
  return Geodesic::semicircle(center, radius, fp.attracting > fp.repelling);
}

double translation_length(const MoebiusElement& m) {
  double tr = require_hyperbolic_trace(m, "translation_length");
  return 2 * std::acosh(std::fabs(tr) / 2);
}

std::complex<double> apply(const MoebiusElement& m, std::complex<double> z) {
  return (m.a * z + m.b) / (m.c * z + m.d);
}

HPoint apply(const MoebiusElement& m, const HPoint& p) {
  std::complex<double> w = apply(m, std::complex<double>(p.x, p.y));
  return HPoint{w.real(), w.imag()};
}

double apply_boundary(const MoebiusElement& m, double x) {
  if (std::isinf(x)) return m.c == 0 ? kInf : m.a / m.c;
  double den = m.c * x + m.d;
  if (den == 0) return kInf;
  return (m.a * x + m.b) / den;
}

MoebiusElement compose(const MoebiusElement& m, const MoebiusElement& n) {
  std::optional<Word> w;
  if (m.word && n.word) w = concat_reduced(*m.word, *n.word);
  return moebius(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                 m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d, std::move(w));
}

MoebiusElement inverse(const MoebiusElement& m) {
  std::optional<Word> w;
  if (m.word) w = inverse_word(*m.word);
  return moebius(m.d, -m.b, -m.c, m.a, std::move(w));
}

MoebiusElement mirror(const MoebiusElement& m) {
  return moebius(m.a, -m.b, -m.c, m.d);
}

MoebiusElement power(const MoebiusElement& m, int k) {
  if (k < 0) return power(inverse(m), -k);
  MoebiusElement acc = moebius(1, 0, 0, 1, m.word ? std::optional<Word>(Word{}) : std::nullopt);
  MoebiusElement base = normalized(m);
  for (int i = 0; i < k; ++i) acc = compose(acc, base);
  return acc;
}

}  // namespace anglespec

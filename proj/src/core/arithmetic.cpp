#include "core/arithmetic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anglespec {

std::uint64_t euler_phi(std::uint64_t q) {
  if (q == 0) throw std::invalid_argument("euler_phi: q must be positive");
  std::uint64_t result = q, n = q;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t cyclotomic_degree(std::uint64_t q) { return euler_phi(q); }

bool totient_bound_check(std::uint64_t q, std::uint32_t degree_bound) {
  return euler_phi(q) <= 2ull * degree_bound;
}

std::vector<std::uint64_t> admissible_q(std::uint32_t degree_bound) {
  if (degree_bound == 0) throw std::invalid_argument("admissible_q: degree bound must be positive");
  std::uint64_t d = degree_bound;
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 1; q <= 8 * d * d; ++q) {
    if (euler_phi(q) <= 2 * d) out.push_back(q);
  }
  return out;
}

Fraction best_rational(double x, std::int64_t max_den) {
  if (max_den < 1) throw std::invalid_argument("best_rational: max_den must be positive");
  if (!(x >= 0)) throw std::invalid_argument("best_rational: x must be nonnegative");

  // convergents h/k of the continued fraction of x
  std::int64_t h_prev = 1, k_prev = 0;
  std::int64_t h = static_cast<std::int64_t>(std::floor(x)), k = 1;
  double frac = x - std::floor(x);
  while (frac > 0) {
    double inv = 1.0 / frac;
    double term = std::floor(inv);
    if (term > 9e15) break;  // x is rational at double resolution
    std::int64_t a = static_cast<std::int64_t>(term);
    if (a > (max_den - k_prev) / k) break;  // next convergent exceeds max_den
    std::int64_t h_next = a * h + h_prev;
    std::int64_t k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    frac = inv - term;
  }

  Fraction best{h, k};
  // largest in-bound semiconvergent between the last two convergents
  // (k_prev = 0 pairs h/k with the virtual convergent 1/0 and still yields
  // valid mediants 1/t, (1 + t h)/t, ...)
  std::int64_t t = (max_den - k_prev) / k;
  if (t > 0) {
    Fraction semi{h_prev + t * h, k_prev + t * k};
    double e_best = std::fabs(x - static_cast<double>(best.num) / static_cast<double>(best.den));
    double e_semi = std::fabs(x - static_cast<double>(semi.num) / static_cast<double>(semi.den));
    if (e_semi < e_best || (e_semi == e_best && semi.den < best.den)) best = semi;
  }
  return best;
}

std::optional<RationalAngle> detect_rational_pi(double theta, std::int64_t qmax,
                                                double eps) {
  constexpr double pi = std::numbers::pi;
  if (!(theta > 0) || !(theta < pi))
    throw std::invalid_argument("detect_rational_pi: theta must lie in (0, pi)");
  Fraction f = best_rational(theta / pi, qmax);
  if (f.num <= 0 || f.num >= f.den) return std::nullopt;
  if (std::fabs(theta - static_cast<double>(f.num) * pi / static_cast<double>(f.den)) < eps)
    return RationalAngle{f.num, f.den, theta};
  return std::nullopt;
}

std::optional<Fraction> rationality_detect(double x, std::int64_t max_den,
                                           double eps) {
  if (!(x >= 0) || !(x <= 1))
    throw std::invalid_argument("rationality_detect: x must lie in [0, 1]");
  Fraction f = best_rational(x, max_den);
  if (std::fabs(x - static_cast<double>(f.num) / static_cast<double>(f.den)) < eps)
    return f;
  return std::nullopt;
}

}  // namespace anglespec

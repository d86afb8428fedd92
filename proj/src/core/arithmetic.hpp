#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace anglespec {

// Euler's totient via trial-division factorization; phi(1) = 1.
std::uint64_t euler_phi(std::uint64_t q);

// Degree of the q-th cyclotomic extension of the rationals; equals phi(q).
std::uint64_t cyclotomic_degree(std::uint64_t q);

// phi(q) <= 2 * degree_bound.
bool totient_bound_check(std::uint64_t q, std::uint32_t degree_bound);

// All q with phi(q) <= 2d, ascending. Exhaustive over q <= 8 d^2, which
// suffices because phi(q) >= sqrt(q/2) for every q >= 1.
std::vector<std::uint64_t> admissible_q(std::uint32_t degree_bound);

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Best rational approximation of x >= 0 with denominator <= max_den, via
// continued-fraction convergents and the final semiconvergent; ties in
// quality break toward the smaller denominator. Result is in lowest terms.
Fraction best_rational(double x, std::int64_t max_den);

struct RationalAngle {
  std::int64_t p = 1;
  std::int64_t q = 1;
  double theta = 0;
};

// Detects theta ~= (p/q) pi with q <= qmax and |theta - p pi / q| < eps.
// theta must lie in (0, pi).
std::optional<RationalAngle> detect_rational_pi(double theta, std::int64_t qmax,
                                                double eps);

// Detects x ~= p/q with q <= max_den and |x - p/q| < eps, for x in [0, 1].
std::optional<Fraction> rationality_detect(double x, std::int64_t max_den,
                                           double eps);

}  // namespace anglespec

#pragma once

#include <complex>
#include <optional>

#include "core/geometry.hpp"
#include "core/tolerances.hpp"
#include "core/words.hpp"

namespace anglespec {

// Unit-determinant real 2x2 matrix acting on the upper half-plane by
// z -> (az + b)/(cz + d). The projective sign is fixed so that M and -M
// store identically: trace > 0, or trace == 0 and c > 0, or
// trace == c == 0 and a > 0. An optional freely reduced generator word
// records how the element was built.
struct MoebiusElement {
  double a = 1, b = 0, c = 0, d = 1;
  std::optional<Word> word;

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
};

enum class ElementClass { Identity, Elliptic, Parabolic, Hyperbolic };

// Factory: rescales small determinant drift to 1 and fixes the projective
// sign. Throws std::invalid_argument when the determinant is not positive.
MoebiusElement moebius(double a, double b, double c, double d,
                       std::optional<Word> word = std::nullopt);

MoebiusElement normalized(MoebiusElement m);

// min over sign of the max entry difference.
double projective_distance(const MoebiusElement& m, const MoebiusElement& n);
bool projectively_equal(const MoebiusElement& m, const MoebiusElement& n,
                        double eps = tol::dedup);

ElementClass classify(const MoebiusElement& m, double eps = tol::cls);

// Boundary fixed points of a hyperbolic element; either may be inf.
struct FixedPoints {
  double repelling;
  double attracting;
};

FixedPoints fixed_points(const MoebiusElement& m);

// Invariant geodesic of a hyperbolic element, oriented from the repelling
// toward the attracting fixed point.
Geodesic axis(const MoebiusElement& m);

double translation_length(const MoebiusElement& m);

std::complex<double> apply(const MoebiusElement& m, std::complex<double> z);
HPoint apply(const MoebiusElement& m, const HPoint& p);
// Action on R u {inf}, extended by continuity.
double apply_boundary(const MoebiusElement& m, double x);

MoebiusElement compose(const MoebiusElement& m, const MoebiusElement& n);
MoebiusElement inverse(const MoebiusElement& m);
// Conjugation by z -> -conj(z): flips the signs of the off-diagonal
// entries. The word is dropped (generator indices do not survive the
// reflection without a mapping of the generator set).
MoebiusElement mirror(const MoebiusElement& m);
MoebiusElement power(const MoebiusElement& m, int k);

}  // namespace anglespec

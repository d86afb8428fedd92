#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/moebius.hpp"

namespace anglespec {

// Closed arc of the boundary circle R u {inf}, running counterclockwise
// (increasing x, wrapping through inf) from lo to hi. {lo = 4, hi = -4} is
// the arc |x| >= 4 together with inf.
struct BoundaryInterval {
  double lo = 0;
  double hi = 0;
};

// Ping-pong data for one generator: a repelling-side and an
// attracting-side region.
struct GeneratorRegions {
  BoundaryInterval repelling;
  BoundaryInterval attracting;
};

struct GeneratorSet {
  std::vector<MoebiusElement> gens;
  std::string name;
  // Certified ping-pong regions, when the set ships with them.
  std::optional<std::vector<GeneratorRegions>> regions;
  // Declared bound for the degree of the entry field over its maximal
  // purely transcendental subfield; 0 = undeclared.
  std::uint32_t degree_bound = 0;
};

// An element together with the freely reduced word that produced it; the
// word is stored on the element itself.
struct GroupElement {
  MoebiusElement element;

  const Word& word() const { return *element.word; }
};

// Conjugacy-class representative of a hyperbolic element; stands for one
// closed geodesic on the quotient surface.
struct ClosedGeodesicClass {
  GroupElement rep;
  double trace = 0;
  double length = 0;
  Geodesic axis;
};

// All freely reduced words of length <= max_len over the generators and
// their inverses, evaluated and merged at matrix level (projective distance
// < tol::dedup), keeping the shortest word and breaking ties toward the
// lexicographically least. Includes the identity. Deterministic order:
// (length, lex) of the kept word.
std::vector<GroupElement> enumerate_elements(const GeneratorSet& g, int max_len);

// One representative per conjugacy class among the enumerated hyperbolic
// elements with trace <= max_trace. Words are cyclically reduced first;
// candidates merge when traces agree within tol::trace_match and some
// enumerated conjugator maps one onto the other. With oriented = false a
// class and its inverse merge and the kept representative is the one whose
// attracting endpoint is larger.
std::vector<ClosedGeodesicClass> hyperbolic_classes(const GeneratorSet& g,
                                                    int max_len, double max_trace,
                                                    bool oriented = false);

// Shortest enumerated root: P with minimal translation length such that
// P^k = m projectively; (m, 1) when no proper root is within reach.
std::pair<GroupElement, int> primitive_root(const GroupElement& m,
                                            const GeneratorSet& g, int max_len);

enum class PingPongFailure { RegionOverlap, EllipticGenerator, MappingFailure };

struct PingPongVerdict {
  bool certified = false;
  std::optional<PingPongFailure> reason;
  std::string detail;

  explicit operator bool() const { return certified; }
};

// Certifies freeness and discreteness: all 2n regions pairwise disjoint,
// every generator hyperbolic, and each generator maps the complement of its
// repelling-side region into its attracting-side region. The mapping test
// uses images of interval endpoints plus monotonicity of the boundary
// action (the derivative 1/(cx+d)^2 is positive, so the action preserves
// the circular order).
PingPongVerdict ping_pong_certificate(const GeneratorSet& g,
                                      const std::vector<GeneratorRegions>& regions);

// Named generator sets: "modular" (S, T) and "symmetric-schottky"
// (A = diag(4, 1/4), B = [[3,4],[2,3]], mirror-closed, with certified
// ping-pong regions).
GeneratorSet preset(const std::string& name);

MoebiusElement evaluate_word(const GeneratorSet& g, const Word& w);

}  // namespace anglespec

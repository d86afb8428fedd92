#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/group.hpp"

namespace anglespec {

struct SpectrumBounds {
  int max_word_len = 6;
  double max_trace = 12.0;
  int conj_len = 6;
  std::int64_t qmax = 200;
  double eps_rat = 1e-9;
  double eps_cluster = 1e-9;
  std::uint32_t degree_bound = 1;
  bool oriented = false;  // keep a class distinct from its inverse
};

// One surface intersection: the conjugator applied to class_j's
// representative produced the crossing lift; the point is the lift
// translated into the fundamental period along class_i's axis.
struct IntersectionRecord {
  int class_i = 0;
  int class_j = 0;
  Word conjugator;
  HPoint point;
  double theta = 0;  // counterclockwise from class_i's axis, in (0, pi)
  double cos2 = 0;
};

struct AngleCluster {
  double theta = 0;
  int multiplicity = 0;
};

struct RationalHit {
  double theta = 0;
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::uint64_t phi_q = 1;
  std::uint64_t bound = 2;  // 2 * degree_bound
  bool ok = true;           // phi(q) <= bound
};

struct SpectrumReport {
  SpectrumBounds params;
  std::string group_name;
  std::vector<MoebiusElement> generators;
  std::vector<ClosedGeodesicClass> classes;
  std::vector<IntersectionRecord> records;
  std::vector<AngleCluster> angle_set;
  std::vector<RationalHit> rational_hits;
};

// Distinct surface intersections of two closed geodesics: every enumerated
// conjugate of `moving`'s representative whose axis crosses `fixed`'s axis
// yields a lift; lifts are translated into the fundamental period along the
// fixed axis and merged when closer than eps_merge in hyperbolic distance.
// class_i / class_j on the results are left 0 for the caller to fill.
std::vector<IntersectionRecord> surface_intersections(
    const ClosedGeodesicClass& fixed, const ClosedGeodesicClass& moving,
    const GeneratorSet& g, int conj_len, double eps_merge = tol::merge);

// Single-linkage clustering of record angles; centroids with sizes, sorted
// ascending.
std::vector<AngleCluster> angle_set(const std::vector<IntersectionRecord>& records,
                                    double eps_cluster);

// Full pipeline: classes, all unordered class pairs (self-pairs included),
// clustering, rational detection and totient verdicts. threads <= 0 uses
// the available parallelism; output does not depend on the thread count.
SpectrumReport build_spectrum(const GeneratorSet& g, const SpectrumBounds& bounds,
                              int threads = 1);

}  // namespace anglespec

#include "core/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "core/arithmetic.hpp"
#include "core/errors.hpp"

namespace anglespec {

namespace {

// Signed hyperbolic displacement of a point of the axis, increasing toward
// the attracting endpoint: the axis is mapped to the imaginary axis by a
// Moebius map sending (repelling, attracting) to (0, inf), under which the
// representative acts as w -> e^L w.
double axis_displacement(const Geodesic& axis, const HPoint& p) {
  double e0 = axis.start(), e1 = axis.end();
  if (std::isinf(e1)) return std::log(std::hypot(p.x - e0, p.y));
  if (std::isinf(e0)) return -std::log(std::hypot(p.x - e1, p.y));
  return std::log(std::hypot(p.x - e0, p.y) / std::hypot(p.x - e1, p.y));
}

MoebiusElement conjugate_matrix(const MoebiusElement& g, const MoebiusElement& m) {
  double ia = g.d, ib = -g.b, ic = -g.c, id = g.a;
  double p = g.a * m.a + g.b * m.c, q = g.a * m.b + g.b * m.d;
  double r = g.c * m.a + g.d * m.c, s = g.c * m.b + g.d * m.d;
  return moebius(p * ia + q * ic, p * ib + q * id, r * ia + s * ic, r * ib + s * id);
}

class SeenSet {
 public:
  bool insert_if_new(const MoebiusElement& m) {
    long long key = std::llround(m.trace() * 1e6);
    for (long long k = key - 1; k <= key + 1; ++k) {
      auto it = buckets_.find(k);
      if (it == buckets_.end()) continue;
      for (int idx : it->second)
        if (projectively_equal(pool_[idx], m)) return false;
    }
    buckets_[key].push_back(static_cast<int>(pool_.size()));
    pool_.push_back(m);
    return true;
  }

 private:
  std::vector<MoebiusElement> pool_;
  std::unordered_map<long long, std::vector<int>> buckets_;
};

std::vector<IntersectionRecord> surface_intersections_impl(
    const ClosedGeodesicClass& fixed, const ClosedGeodesicClass& moving,
    const std::vector<GroupElement>& conjugators, double eps_merge) {
  const Geodesic& A = fixed.axis;
  const MoebiusElement& gamma = fixed.rep.element;
  const MoebiusElement gamma_inv = inverse(gamma);
  const double period = fixed.length;

  std::vector<IntersectionRecord> records;
  SeenSet seen;
  for (const GroupElement& g : conjugators) {
    MoebiusElement conj = conjugate_matrix(g.element, moving.rep.element);
    if (!seen.insert_if_new(conj)) continue;
    Geodesic ax = axis(conj);
    if (!crosses(A, ax)) continue;

    HPoint p = intersection_point(A, ax);
    double theta = oriented_angle(A, ax);
    double c2 = angle_cos2(A, ax);

    // translate into displacement range [0, period) along the fixed axis
    double s = axis_displacement(A, p);
    long k = static_cast<long>(std::floor(s / period));
    Word conj_word = g.word();
    if (k != 0) {
      MoebiusElement shift = power(gamma, static_cast<int>(-k));
      p = apply(shift, p);
      conj_word = concat_reduced(*shift.word, conj_word);
    }

    bool duplicate = false;
    HPoint p_up = apply(gamma, p);
    HPoint p_down = apply(gamma_inv, p);
    for (const IntersectionRecord& r : records) {
      if (hyperbolic_distance(p, r.point) < eps_merge ||
          hyperbolic_distance(p_up, r.point) < eps_merge ||
          hyperbolic_distance(p_down, r.point) < eps_merge) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;

    IntersectionRecord rec;
    rec.conjugator = std::move(conj_word);
    rec.point = p;
    rec.theta = theta;
    rec.cos2 = c2;
    records.push_back(std::move(rec));
  }
  return records;
}

void validate_bounds(const SpectrumBounds& b) {
  if (b.max_word_len < 0) throw std::invalid_argument("max_word_len must be >= 0");
  if (!(b.max_trace > 2)) throw std::invalid_argument("max_trace must exceed 2");
  if (b.conj_len < 0) throw std::invalid_argument("conj_len must be >= 0");
  if (b.qmax < 1) throw std::invalid_argument("qmax must be positive");
  if (!(b.eps_rat > 0)) throw std::invalid_argument("eps_rat must be positive");
  if (!(b.eps_cluster > 0)) throw std::invalid_argument("eps_cluster must be positive");
  if (b.degree_bound < 1) throw std::invalid_argument("degree_bound must be positive");
}

}  // namespace

std::vector<IntersectionRecord> surface_intersections(
    const ClosedGeodesicClass& fixed, const ClosedGeodesicClass& moving,
    const GeneratorSet& g, int conj_len, double eps_merge) {
  if (classify(fixed.rep.element) != ElementClass::Hyperbolic ||
      classify(moving.rep.element) != ElementClass::Hyperbolic)
    throw NotHyperbolicError("surface_intersections: class representatives must be hyperbolic");
  if (conj_len < 0) throw std::invalid_argument("surface_intersections: conj_len must be >= 0");
  return surface_intersections_impl(fixed, moving, enumerate_elements(g, conj_len),
                                    eps_merge);
}

std::vector<AngleCluster> angle_set(const std::vector<IntersectionRecord>& records,
                                    double eps_cluster) {
  if (!(eps_cluster > 0)) throw std::invalid_argument("angle_set: eps_cluster must be positive");
  std::vector<double> thetas;
  thetas.reserve(records.size());
  for (const IntersectionRecord& r : records) thetas.push_back(r.theta);
  std::sort(thetas.begin(), thetas.end());

  std::vector<AngleCluster> out;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= thetas.size(); ++i) {
    if (i == thetas.size() || thetas[i] - thetas[i - 1] > eps_cluster) {
      double sum = 0;
      for (std::size_t k = begin; k < i; ++k) sum += thetas[k];
      out.push_back(AngleCluster{sum / static_cast<double>(i - begin),
                                 static_cast<int>(i - begin)});
      begin = i;
    }
  }
  return out;
}

SpectrumReport build_spectrum(const GeneratorSet& G, const SpectrumBounds& bounds,
                              int threads) {
  if (G.gens.empty()) throw EmptyGeneratorSetError("build_spectrum: generator set is empty");
  validate_bounds(bounds);

  SpectrumReport report;
  report.params = bounds;
  report.group_name = G.name.empty() ? "unnamed" : G.name;
  for (const MoebiusElement& g : G.gens) {
    MoebiusElement m = g;
    m.word.reset();
    report.generators.push_back(std::move(m));
  }

  report.classes = hyperbolic_classes(G, bounds.max_word_len, bounds.max_trace,
                                      bounds.oriented);
  const auto conjugators = enumerate_elements(G, bounds.conj_len);

  struct PairIJ {
    int i, j;
  };
  std::vector<PairIJ> pairs;
  const int n = static_cast<int>(report.classes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) pairs.push_back(PairIJ{i, j});

  // pair-level parallelism: per-pair results are pure values collected into
  // pre-assigned slots, so the reduce order is fixed regardless of schedule
  std::vector<std::vector<IntersectionRecord>> results(pairs.size());
  int nthreads = threads <= 0 ? static_cast<int>(std::thread::hardware_concurrency())
                              : threads;
  nthreads = std::max(1, std::min<int>(nthreads, static_cast<int>(pairs.size())));

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t idx = cursor.fetch_add(1);
      if (idx >= pairs.size()) return;
      try {
        auto recs = surface_intersections_impl(report.classes[pairs[idx].i],
                                               report.classes[pairs[idx].j],
                                               conjugators, tol::merge);
        for (IntersectionRecord& r : recs) {
          r.class_i = pairs[idx].i;
          r.class_j = pairs[idx].j;
        }
        results[idx] = std::move(recs);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (std::vector<IntersectionRecord>& recs : results)
    for (IntersectionRecord& r : recs) report.records.push_back(std::move(r));

  report.angle_set = angle_set(report.records, bounds.eps_cluster);
  for (const AngleCluster& cluster : report.angle_set) {
    auto hit = detect_rational_pi(cluster.theta, bounds.qmax, bounds.eps_rat);
    if (!hit) continue;
    RationalHit h;
    h.theta = cluster.theta;
    h.p = hit->p;
    h.q = hit->q;
    h.phi_q = euler_phi(static_cast<std::uint64_t>(hit->q));
    h.bound = 2ull * bounds.degree_bound;
    h.ok = totient_bound_check(static_cast<std::uint64_t>(hit->q), bounds.degree_bound);
    report.rational_hits.push_back(h);
  }
  return report;
}

}  // namespace anglespec

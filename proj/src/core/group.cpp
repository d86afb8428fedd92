#include "core/group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "core/errors.hpp"

namespace anglespec {

namespace {

// Near-duplicate lookup keyed by trace buckets; candidates within one
// bucket of the query are compared with the full projective distance.
class ProjectiveIndex {
 public:
  explicit ProjectiveIndex(double eps) : eps_(eps) {}

  int find(const MoebiusElement& m) const {
    long long key = bucket_of(m);
    for (long long k = key - 1; k <= key + 1; ++k) {
      auto it = buckets_.find(k);
      if (it == buckets_.end()) continue;
      for (int idx : it->second)
        if (projective_distance(pool_[idx], m) < eps_) return idx;
    }
    return -1;
  }

  int insert(const MoebiusElement& m) {
    int idx = static_cast<int>(pool_.size());
    pool_.push_back(m);
    buckets_[bucket_of(m)].push_back(idx);
    return idx;
  }

 private:
  static long long bucket_of(const MoebiusElement& m) {
    return std::llround(m.trace() * 1e6);
  }

  double eps_;
  std::vector<MoebiusElement> pool_;
  std::unordered_map<long long, std::vector<int>> buckets_;
};

MoebiusElement conjugate_matrix(const MoebiusElement& g, const MoebiusElement& m) {
  // g m g^-1 without word bookkeeping
  double ia = g.d, ib = -g.b, ic = -g.c, id = g.a;
  double p = g.a * m.a + g.b * m.c, q = g.a * m.b + g.b * m.d;
  double r = g.c * m.a + g.d * m.c, s = g.c * m.b + g.d * m.d;
  return moebius(p * ia + q * ic, p * ib + q * id, r * ia + s * ic, r * ib + s * id);
}

MoebiusElement power_matrix(const MoebiusElement& m, int k) {
  MoebiusElement acc = moebius(1, 0, 0, 1);
  MoebiusElement base{m.a, m.b, m.c, m.d, std::nullopt};
  for (int i = 0; i < k; ++i) acc = compose(acc, base);
  return acc;
}

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

// --- boundary circle helpers -------------------------------------------

constexpr double kPi = std::numbers::pi;

// Circle parameter in (-pi/2, pi/2], monotone in x, inf at the wrap point.
double circ(double x) { return std::isinf(x) ? kPi / 2 : std::atan(x); }

// Counterclockwise offset from `from` to `to`, in [0, pi).
double ccw_offset(double from, double to) {
  double d = circ(to) - circ(from);
  if (d < 0) d += kPi;
  return d;
}

bool arc_contains(const BoundaryInterval& arc, double x) {
  return ccw_offset(arc.lo, x) <= ccw_offset(arc.lo, arc.hi);
}

bool arcs_disjoint(const BoundaryInterval& a, const BoundaryInterval& b) {
  return !arc_contains(a, b.lo) && !arc_contains(a, b.hi) &&
         !arc_contains(b, a.lo) && !arc_contains(b, a.hi);
}

// The ccw arc p -> q is contained in `outer`.
bool arc_within(double p, double q, const BoundaryInterval& outer) {
  if (!arc_contains(outer, p) || !arc_contains(outer, q)) return false;
  return ccw_offset(outer.lo, p) <= ccw_offset(outer.lo, q);
}

}  // namespace

std::vector<GroupElement> enumerate_elements(const GeneratorSet& G, int max_len) {
  if (max_len < 0) throw std::invalid_argument("enumerate_elements: max_len must be >= 0");
  const int n = static_cast<int>(G.gens.size());

  // letters in rank order: +1, -1, +2, -2, ...
  std::vector<MoebiusElement> letters;
  letters.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    MoebiusElement g = G.gens[i];
    g.word = Word{i + 1};
    letters.push_back(normalized(g));
    letters.push_back(inverse(letters.back()));
  }

  std::vector<GroupElement> out;
  ProjectiveIndex index(tol::dedup);
  auto keep = [&](MoebiusElement m) {
    index.insert(m);
    out.push_back(GroupElement{std::move(m)});
  };

  keep(moebius(1, 0, 0, 1, Word{}));
  std::size_t level_begin = 0, level_end = 1;
  for (int len = 1; len <= max_len; ++len) {
    for (std::size_t s = level_begin; s < level_end; ++s) {
      const Word w = out[s].word();  // copy: `out` grows below
      const MoebiusElement base = out[s].element;
      for (const MoebiusElement& letter : letters) {
        if (!w.empty() && w.back() == -letter.word->front()) continue;
        MoebiusElement m = compose(base, letter);
        if (index.find(m) >= 0) continue;
        keep(std::move(m));
      }
    }
    level_begin = level_end;
    level_end = out.size();
  }
  return out;
}

MoebiusElement evaluate_word(const GeneratorSet& G, const Word& w) {
  MoebiusElement acc = moebius(1, 0, 0, 1, Word{});
  for (std::int32_t letter : w) {
    int idx = std::abs(letter) - 1;
    if (idx < 0 || idx >= static_cast<int>(G.gens.size()))
      throw std::invalid_argument("evaluate_word: letter out of range");
    MoebiusElement g = G.gens[idx];
    g.word = Word{static_cast<std::int32_t>(idx + 1)};
    if (letter < 0) g = inverse(g);
    acc = compose(acc, g);
  }
  return acc;
}

std::vector<ClosedGeodesicClass> hyperbolic_classes(const GeneratorSet& G,
                                                    int max_len, double max_trace,
                                                    bool oriented) {
  if (!(max_trace > 2))
    throw std::invalid_argument("hyperbolic_classes: max_trace must exceed 2");
  auto elems = enumerate_elements(G, max_len);

  // cyclically reduced candidate words, (length, lex)-ordered
  std::set<Word, WordLess> cand_words;
  for (const GroupElement& e : elems) {
    if (classify(e.element) != ElementClass::Hyperbolic) continue;
    Word cw = cyclic_reduce(e.word());
    if (!cw.empty()) cand_words.insert(std::move(cw));
  }

  struct Cand {
    Word w;
    MoebiusElement m;
  };
  std::vector<Cand> cands;
  const double trace_cap = max_trace * (1 + 1e-12) + 1e-9;
  for (const Word& w : cand_words) {
    MoebiusElement m = evaluate_word(G, w);
    if (classify(m) != ElementClass::Hyperbolic) continue;
    if (m.trace() > trace_cap) continue;
    cands.push_back(Cand{w, std::move(m)});
  }

  // greedy merge: first representative in order wins
  std::vector<Cand> reps;
  for (const Cand& cand : cands) {
    MoebiusElement cand_inv = inverse(cand.m);
    bool merged = false;
    for (const Cand& rep : reps) {
      if (std::fabs(rep.m.trace() - cand.m.trace()) > tol::trace_match) continue;
      for (const GroupElement& g : elems) {
        if (projectively_equal(conjugate_matrix(g.element, cand.m), rep.m)) {
          merged = true;
          break;
        }
        if (!oriented &&
            projectively_equal(conjugate_matrix(g.element, cand_inv), rep.m)) {
          merged = true;
          break;
        }
      }
      if (merged) break;
    }
    if (!merged) reps.push_back(cand);
  }

  std::vector<ClosedGeodesicClass> out;
  out.reserve(reps.size());
  for (const Cand& r : reps) {
    MoebiusElement m = r.m;
    m.word = r.w;
    if (!oriented) {
      FixedPoints fp = fixed_points(m);
      bool attracting_larger =
          std::isinf(fp.attracting) ||
          (!std::isinf(fp.repelling) && fp.attracting > fp.repelling);
      if (!attracting_larger) m = inverse(m);
    }
    ClosedGeodesicClass c;
    c.rep = GroupElement{m};
    c.trace = m.trace();
    c.length = translation_length(m);
    c.axis = axis(m);
    out.push_back(std::move(c));
  }
  return out;
}

std::pair<GroupElement, int> primitive_root(const GroupElement& m,
                                            const GeneratorSet& G, int max_len) {
  if (classify(m.element) != ElementClass::Hyperbolic)
    throw NotHyperbolicError("primitive_root: element is not hyperbolic");
  auto elems = enumerate_elements(G, max_len);
  const double target_len = translation_length(m.element);

  std::vector<const GroupElement*> hyp;
  for (const GroupElement& e : elems)
    if (classify(e.element) == ElementClass::Hyperbolic) hyp.push_back(&e);
  std::stable_sort(hyp.begin(), hyp.end(), [](const GroupElement* a, const GroupElement* b) {
    return translation_length(a->element) < translation_length(b->element);
  });

  const double scale =
      1 + std::max(std::max(std::fabs(m.element.a), std::fabs(m.element.b)),
                   std::max(std::fabs(m.element.c), std::fabs(m.element.d)));
  for (const GroupElement* e : hyp) {
    double len = translation_length(e->element);
    if (len > target_len * (1 + 1e-9) + 1e-9) break;
    int k = static_cast<int>(std::llround(target_len / len));
    if (k < 1) continue;
    if (std::fabs(k * len - target_len) > 1e-6 * std::max(1.0, target_len)) continue;
    if (projective_distance(power_matrix(e->element, k), m.element) < 1e-6 * scale)
      return {*e, k};
  }
  return {m, 1};
}

PingPongVerdict ping_pong_certificate(const GeneratorSet& G,
                                      const std::vector<GeneratorRegions>& regions) {
  if (regions.size() != G.gens.size())
    throw std::invalid_argument("ping_pong_certificate: one region pair per generator");

  std::vector<const BoundaryInterval*> arcs;
  for (const GeneratorRegions& r : regions) {
    arcs.push_back(&r.repelling);
    arcs.push_back(&r.attracting);
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (!arcs_disjoint(*arcs[i], *arcs[j])) {
        return {false, PingPongFailure::RegionOverlap,
                "regions " + std::to_string(i) + " and " + std::to_string(j) +
                    " intersect"};
      }
    }
  }

  for (std::size_t i = 0; i < G.gens.size(); ++i) {
    if (classify(G.gens[i]) != ElementClass::Hyperbolic) {
      return {false, PingPongFailure::EllipticGenerator,
              "generator " + std::to_string(i + 1) + " is not hyperbolic"};
    }
  }

  for (std::size_t i = 0; i < G.gens.size(); ++i) {
    // complement of the repelling region is the ccw arc hi -> lo; its image
    // is the ccw arc between the endpoint images
    const BoundaryInterval& rep = regions[i].repelling;
    double p = apply_boundary(G.gens[i], rep.hi);
    double q = apply_boundary(G.gens[i], rep.lo);
    if (!arc_within(p, q, regions[i].attracting)) {
      return {false, PingPongFailure::MappingFailure,
              "generator " + std::to_string(i + 1) +
                  " does not map the complement of its repelling region into "
                  "its attracting region"};
    }
  }
  return {true, std::nullopt, ""};
}

GeneratorSet preset(const std::string& name) {
  if (name == "modular") {
    GeneratorSet g;
    g.name = "modular";
    g.gens = {moebius(0, -1, 1, 0, Word{1}), moebius(1, 1, 0, 1, Word{2})};
    g.degree_bound = 1;  // the entry field is the rationals
    return g;
  }
  if (name == "symmetric-schottky") {
    GeneratorSet g;
    g.name = "symmetric-schottky";
    g.gens = {moebius(4, 0, 0, 0.25, Word{1}), moebius(3, 4, 2, 3, Word{2})};
    g.degree_bound = 1;
    g.regions = std::vector<GeneratorRegions>{
        {{-0.25, 0.25}, {4.0, -4.0}},
        {{-2.0, -1.0}, {1.0, 2.0}},
    };
    return g;
  }
  throw UnknownPresetError("unknown preset: " + name);
}

}  // namespace anglespec

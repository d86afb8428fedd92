#include "anglespec.h"

#include <cstdlib>
#include <cstring>
#include <numbers>
#include <string>

#include "core/arithmetic.hpp"
#include "core/errors.hpp"
#include "core/report_io.hpp"
#include "core/spectrum.hpp"

struct as_group {
  anglespec::GeneratorSet g;
};

struct as_report {
  anglespec::SpectrumReport r;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

as_status fail(as_status st, const std::string& msg) {
  t_last_error = msg;
  return st;
}

template <class F>
as_status wrap(F&& f) {
  using namespace anglespec;
  try {
    f();
    t_last_error.clear();
    return AS_OK;
  } catch (const UnknownPresetError& e) {
    return fail(AS_ERR_UNKNOWN_PRESET, e.what());
  } catch (const ParseError& e) {
    return fail(e.kind == ParseError::Kind::Io ? AS_ERR_IO : AS_ERR_PARSE, e.what());
  } catch (const EmptyGeneratorSetError& e) {
    return fail(AS_ERR_EMPTY_GROUP, e.what());
  } catch (const EmptyInputError& e) {
    return fail(AS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const NotHyperbolicError& e) {
    return fail(AS_ERR_NOT_HYPERBOLIC, e.what());
  } catch (const NoCrossingError& e) {
    return fail(AS_ERR_NO_CROSSING, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(AS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(AS_ERR_INTERNAL, e.what());
  }
}

as_status bad_argument(const char* msg) { return fail(AS_ERR_INVALID_ARGUMENT, msg); }

}  // namespace

extern "C" {

void as_bounds_init(as_bounds* b) {
  if (!b) return;
  b->max_word_len = 6;
  b->max_trace = 12.0;
  b->conj_len = 6;
  b->qmax = 200;
  b->eps_rat = 1e-9;
  b->eps_cluster = 1e-9;
  b->degree_bound = 1;
  b->threads = 0;
  b->oriented = 0;
}

const char* as_status_name(as_status s) {
  switch (s) {
    case AS_OK: return "ok";
    case AS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AS_ERR_UNKNOWN_PRESET: return "unknown preset";
    case AS_ERR_IO: return "io error";
    case AS_ERR_PARSE: return "parse error";
    case AS_ERR_EMPTY_GROUP: return "empty generator set";
    case AS_ERR_NOT_HYPERBOLIC: return "element not hyperbolic";
    case AS_ERR_NO_CROSSING: return "geodesics do not cross";
    case AS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* as_last_error(void) { return t_last_error.c_str(); }

as_status as_group_from_preset(const char* name, as_group** out) {
  if (!name || !out) return bad_argument("as_group_from_preset: null argument");
  return wrap([&] { *out = new as_group{anglespec::preset(name)}; });
}

as_status as_group_from_file(const char* path, as_group** out) {
  if (!path || !out) return bad_argument("as_group_from_file: null argument");
  return wrap([&] { *out = new as_group{anglespec::parse_group_file(path)}; });
}

as_status as_group_from_text(const char* text, as_group** out) {
  if (!text || !out) return bad_argument("as_group_from_text: null argument");
  return wrap([&] { *out = new as_group{anglespec::parse_group_text(text)}; });
}

void as_group_free(as_group* g) { delete g; }

int32_t as_group_generator_count(const as_group* g) {
  return g ? static_cast<int32_t>(g->g.gens.size()) : 0;
}

int32_t as_group_has_certificate(const as_group* g) {
  if (!g || !g->g.regions) return 0;
  return anglespec::ping_pong_certificate(g->g, *g->g.regions).certified ? 1 : 0;
}

int32_t as_group_degree_bound(const as_group* g) {
  return g ? static_cast<int32_t>(g->g.degree_bound) : 0;
}

as_status as_group_to_text(const as_group* g, char** out) {
  if (!g || !out) return bad_argument("as_group_to_text: null argument");
  return wrap([&] { *out = dup_string(anglespec::write_group_text(g->g)); });
}

as_status as_spectrum_run(const as_group* g, const as_bounds* b, as_report** out) {
  if (!g || !b || !out) return bad_argument("as_spectrum_run: null argument");
  return wrap([&] {
    anglespec::SpectrumBounds bounds;
    bounds.max_word_len = b->max_word_len;
    bounds.max_trace = b->max_trace;
    bounds.conj_len = b->conj_len;
    bounds.qmax = b->qmax;
    bounds.eps_rat = b->eps_rat;
    bounds.eps_cluster = b->eps_cluster;
    bounds.degree_bound = static_cast<std::uint32_t>(b->degree_bound);
    bounds.oriented = b->oriented != 0;
    *out = new as_report{anglespec::build_spectrum(g->g, bounds, b->threads)};
  });
}

void as_report_free(as_report* r) { delete r; }

size_t as_report_class_count(const as_report* r) { return r ? r->r.classes.size() : 0; }
size_t as_report_record_count(const as_report* r) { return r ? r->r.records.size() : 0; }
size_t as_report_angle_count(const as_report* r) { return r ? r->r.angle_set.size() : 0; }
size_t as_report_rational_count(const as_report* r) {
  return r ? r->r.rational_hits.size() : 0;
}

int32_t as_report_totient_ok(const as_report* r) {
  if (!r) return 0;
  for (const anglespec::RationalHit& h : r->r.rational_hits)
    if (!h.ok) return 0;
  return 1;
}

as_status as_report_json(const as_report* r, char** out) {
  if (!r || !out) return bad_argument("as_report_json: null argument");
  return wrap([&] { *out = dup_string(anglespec::report_json(r->r)); });
}

as_status as_report_csv(const as_report* r, char** out) {
  if (!r || !out) return bad_argument("as_report_csv: null argument");
  return wrap([&] { *out = dup_string(anglespec::report_csv(r->r)); });
}

as_status as_report_svg(const as_report* r, double xmin, double xmax, double ymax,
                        int32_t width, char** out) {
  if (!r || !out) return bad_argument("as_report_svg: null argument");
  return wrap([&] {
    anglespec::SvgOptions opt;
    opt.xmin = xmin;
    opt.xmax = xmax;
    opt.ymax = ymax;
    opt.width = width;
    *out = dup_string(anglespec::report_svg(r->r, opt));
  });
}

as_status as_report_summary(const as_report* r, char** out) {
  if (!r || !out) return bad_argument("as_report_summary: null argument");
  return wrap([&] { *out = dup_string(anglespec::report_summary(r->r)); });
}

void as_string_free(char* s) { std::free(s); }

uint64_t as_euler_phi(uint64_t q) {
  return q == 0 ? 0 : anglespec::euler_phi(q);
}

int32_t as_detect_rational_pi(double theta, int64_t qmax, double eps, int64_t* p,
                              int64_t* q) {
  if (!(theta > 0) || !(theta < std::numbers::pi) || qmax < 1) return 0;
  auto hit = anglespec::detect_rational_pi(theta, qmax, eps);
  if (!hit) return 0;
  if (p) *p = hit->p;
  if (q) *q = hit->q;
  return 1;
}

}  // extern "C"

/* anglespec — angle spectrum of a hyperbolic surface given by a finitely
 * generated Fuchsian group.
 *
 * C interface of the shared library. Handles are opaque; every fallible
 * call returns an as_status and leaves a detail message retrievable with
 * as_last_error() (thread-local). Strings returned through char** are
 * heap-allocated and must be released with as_string_free().
 */
#ifndef ANGLESPEC_H
#define ANGLESPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ANGLESPEC_API __declspec(dllexport)
#else
#define ANGLESPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum as_status {
  AS_OK = 0,
  AS_ERR_INVALID_ARGUMENT = 1,
  AS_ERR_UNKNOWN_PRESET = 2,
  AS_ERR_IO = 3,
  AS_ERR_PARSE = 4,
  AS_ERR_EMPTY_GROUP = 5,
  AS_ERR_NOT_HYPERBOLIC = 6,
  AS_ERR_NO_CROSSING = 7,
  AS_ERR_INTERNAL = 8
} as_status;

typedef struct as_group as_group;
typedef struct as_report as_report;

/* Spectrum run parameters. Initialize with as_bounds_init before use. */
typedef struct as_bounds {
  int32_t max_word_len; /* word length cap for class enumeration */
  double max_trace;     /* trace cap for classes; must exceed 2 */
  int32_t conj_len;     /* word length cap for conjugators */
  int64_t qmax;         /* denominator cap for rational-angle detection */
  double eps_rat;       /* |theta - p pi/q| acceptance threshold */
  double eps_cluster;   /* angle clustering threshold */
  int32_t degree_bound; /* declared field-degree bound for the totient test */
  int32_t threads;      /* worker threads; 0 = available parallelism */
  int32_t oriented;     /* nonzero keeps a class distinct from its inverse */
} as_bounds;

ANGLESPEC_API void as_bounds_init(as_bounds* b);

ANGLESPEC_API const char* as_status_name(as_status s);
/* Detail for the most recent failing call on this thread ("" if none). */
ANGLESPEC_API const char* as_last_error(void);

ANGLESPEC_API as_status as_group_from_preset(const char* name, as_group** out);
ANGLESPEC_API as_status as_group_from_file(const char* path, as_group** out);
ANGLESPEC_API as_status as_group_from_text(const char* text, as_group** out);
ANGLESPEC_API void as_group_free(as_group* g);
ANGLESPEC_API int32_t as_group_generator_count(const as_group* g);
/* Nonzero when the set ships with certified ping-pong regions. */
ANGLESPEC_API int32_t as_group_has_certificate(const as_group* g);
/* Declared degree bound; 0 when the group does not declare one. */
ANGLESPEC_API int32_t as_group_degree_bound(const as_group* g);
/* Group file round-trip: text form that as_group_from_text re-reads. */
ANGLESPEC_API as_status as_group_to_text(const as_group* g, char** out);

ANGLESPEC_API as_status as_spectrum_run(const as_group* g, const as_bounds* b,
                                        as_report** out);
ANGLESPEC_API void as_report_free(as_report* r);

ANGLESPEC_API size_t as_report_class_count(const as_report* r);
ANGLESPEC_API size_t as_report_record_count(const as_report* r);
ANGLESPEC_API size_t as_report_angle_count(const as_report* r);
ANGLESPEC_API size_t as_report_rational_count(const as_report* r);
/* 1 when every rational hit satisfies phi(q) <= 2 * degree_bound. */
ANGLESPEC_API int32_t as_report_totient_ok(const as_report* r);

ANGLESPEC_API as_status as_report_json(const as_report* r, char** out);
ANGLESPEC_API as_status as_report_csv(const as_report* r, char** out);
ANGLESPEC_API as_status as_report_svg(const as_report* r, double xmin, double xmax,
                                      double ymax, int32_t width, char** out);
ANGLESPEC_API as_status as_report_summary(const as_report* r, char** out);

ANGLESPEC_API void as_string_free(char* s);

/* Number-theoretic helpers used by the totient bound. */
ANGLESPEC_API uint64_t as_euler_phi(uint64_t q);
/* Returns 1 and fills p, q when theta is within eps of (p/q) pi with
 * q <= qmax; returns 0 otherwise. theta must lie in (0, pi). */
ANGLESPEC_API int32_t as_detect_rational_pi(double theta, int64_t qmax, double eps,
                                            int64_t* p, int64_t* q);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ANGLESPEC_H */

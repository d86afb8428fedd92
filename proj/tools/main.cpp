// anglespec CLI: load a generator set, run the angle-spectrum pipeline,
// write the JSON report plus optional CSV and SVG, and print a summary.
//
// Exit codes: 0 success, 1 usage/parse/computation error, 2 when a rational
// hit violates the totient bound (a consistency alarm, never an expected
// state for a correctly configured group).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "anglespec.h"

namespace {

bool write_file(const std::string& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { as_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"angle spectrum of a hyperbolic surface H^2/Gamma"};

  std::string preset_name, group_path;
  std::string out_json, out_csv, out_svg;
  as_bounds bounds;
  as_bounds_init(&bounds);
  int degree_bound = 0;  // 0 = take the group's declared bound (or 1)
  double svg_xmin = -5, svg_xmax = 5, svg_ymax = 5;

  auto* opt_preset =
      app.add_option("--preset", preset_name,
                     "built-in generator set: modular, symmetric-schottky");
  auto* opt_group = app.add_option("--group", group_path,
                                   "group file: one generator per line, 'a b c d'");
  opt_preset->excludes(opt_group);
  opt_group->excludes(opt_preset);

  app.add_option("--max-word-len", bounds.max_word_len,
                 "word length cap for class enumeration")
      ->capture_default_str();
  app.add_option("--max-trace", bounds.max_trace, "trace cap for classes (> 2)")
      ->capture_default_str();
  app.add_option("--conj-len", bounds.conj_len, "word length cap for conjugators")
      ->capture_default_str();
  app.add_option("--qmax", bounds.qmax, "denominator cap for rational detection")
      ->capture_default_str();
  app.add_option("--eps-rat", bounds.eps_rat, "rational detection threshold")
      ->capture_default_str();
  app.add_option("--eps-cluster", bounds.eps_cluster, "angle clustering threshold")
      ->capture_default_str();
  app.add_option("--degree-bound", degree_bound,
                 "field-degree bound for the totient test (default: group's declared "
                 "bound, else 1)");
  app.add_option("--threads", bounds.threads, "worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_flag("--oriented", "keep a class distinct from its inverse");
  app.add_option("--out", out_json, "write the JSON report here");
  app.add_option("--csv", out_csv, "write the intersection records as CSV here");
  app.add_option("--svg", out_svg, "render axes and intersections as SVG here");
  app.add_option("--svg-xmin", svg_xmin, "SVG viewport left edge")->capture_default_str();
  app.add_option("--svg-xmax", svg_xmax, "SVG viewport right edge")->capture_default_str();
  app.add_option("--svg-ymax", svg_ymax, "SVG viewport top edge")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (preset_name.empty() && group_path.empty()) {
    std::cerr << "error: exactly one group source is required (--preset or --group)\n\n"
              << app.help() << std::flush;
    return 1;
  }
  bounds.oriented = app.count("--oriented") > 0 ? 1 : 0;

  as_group* group = nullptr;
  as_status st = preset_name.empty()
                     ? as_group_from_file(group_path.c_str(), &group)
                     : as_group_from_preset(preset_name.c_str(), &group);
  if (st != AS_OK) {
    std::cerr << "error: " << as_status_name(st) << ": " << as_last_error() << "\n";
    return 1;
  }
  std::unique_ptr<as_group, decltype(&as_group_free)> group_guard(group, &as_group_free);

  if (degree_bound > 0) {
    bounds.degree_bound = degree_bound;
  } else {
    int declared = as_group_degree_bound(group);
    bounds.degree_bound = declared > 0 ? declared : 1;
  }

  if (preset_name != "modular" && !as_group_has_certificate(group)) {
    std::cerr << "warning: no discreteness certificate for this generator set; "
                 "spectrum deduplication assumes a discrete group\n";
  }

  as_report* report = nullptr;
  st = as_spectrum_run(group, &bounds, &report);
  if (st != AS_OK) {
    std::cerr << "error: " << as_status_name(st) << ": " << as_last_error() << "\n";
    return 1;
  }
  std::unique_ptr<as_report, decltype(&as_report_free)> report_guard(report,
                                                                     &as_report_free);

  if (!out_json.empty()) {
    StringGuard json;
    if (as_report_json(report, &json.s) != AS_OK || !write_file(out_json, json.s)) {
      std::cerr << "error: cannot write report to " << out_json << "\n";
      return 1;
    }
  }
  if (!out_csv.empty()) {
    StringGuard csv;
    if (as_report_csv(report, &csv.s) != AS_OK || !write_file(out_csv, csv.s)) {
      std::cerr << "error: cannot write CSV to " << out_csv << "\n";
      return 1;
    }
  }
  if (!out_svg.empty()) {
    StringGuard svg;
    if (as_report_svg(report, svg_xmin, svg_xmax, svg_ymax, 800, &svg.s) != AS_OK ||
        !write_file(out_svg, svg.s)) {
      std::cerr << "error: " << as_last_error() << ": cannot write SVG to " << out_svg
                << "\n";
      return 1;
    }
  }

  StringGuard summary;
  if (as_report_summary(report, &summary.s) == AS_OK) std::cout << summary.s;

  if (!as_report_totient_ok(report)) {
    std::cerr << "totient bound VIOLATED: the reported angles contradict the "
                 "finiteness bound; check the group entries, the degree bound and "
                 "the detection thresholds\n";
    return 2;
  }
  return 0;
}

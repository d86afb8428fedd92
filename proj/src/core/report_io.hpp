#pragma once

#include <string>

#include "core/spectrum.hpp"

namespace anglespec {

struct SvgOptions {
  double xmin = -5;
  double xmax = 5;
  double ymax = 5;
  int width = 800;
};

// Deterministic serializations: keys sorted, floats with 17 significant
// digits, record order = pair order. Identical reports give identical bytes.
std::string report_json(const SpectrumReport& r);

// Header: class_i,class_j,conjugator,x,y,theta,cos2
std::string report_csv(const SpectrumReport& r);

// Real axis, one path element per class axis, one marker group per record.
// Markers are labeled in multiples of pi when the angle is a rational hit,
// otherwise in radians to 4 decimals.
std::string report_svg(const SpectrumReport& r, const SvgOptions& opt = {});

// Human-readable run summary with the angle table.
std::string report_summary(const SpectrumReport& r);

// Group file format: UTF-8 text, '#' comment lines, one generator per line
// as 4 whitespace-separated numbers a b c d.
GeneratorSet parse_group_text(const std::string& text);
GeneratorSet parse_group_file(const std::string& path);
std::string write_group_text(const GeneratorSet& g);

}  // namespace anglespec

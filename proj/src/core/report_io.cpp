#include "core/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "core/errors.hpp"

namespace anglespec {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(std::int64_t v) { return std::to_string(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(int v) { return std::to_string(v); }

std::string json_word(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_axis(const Geodesic& g) {
  if (g.is_vertical()) {
    return std::string("{\"kind\":\"vertical\",\"upward\":") +
           (g.forward() ? "true" : "false") + ",\"x\":" + num(g.x()) + "}";
  }
  return std::string("{\"center\":") + num(g.center()) +
         ",\"kind\":\"semicircle\",\"radius\":" + num(g.radius()) +
         ",\"toward_larger\":" + (g.forward() ? "true" : "false") + "}";
}

constexpr const char* kMultiplicityNote =
    "records: one per (unordered class pair, surface point)";

// theta as a multiple of pi when it matches a rational hit, else radians.
std::string angle_label(const SpectrumReport& r, double theta) {
  for (const RationalHit& h : r.rational_hits) {
    if (std::fabs(theta - h.theta) <= std::max(r.params.eps_cluster, 1e-9)) {
      std::string s = h.p == 1 ? "" : std::to_string(h.p);
      return s + "\xCF\x80/" + std::to_string(h.q);
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", theta);
  return buf;
}

}  // namespace

std::string report_json(const SpectrumReport& r) {
  std::string s;
  s.reserve(4096 + 256 * r.records.size());
  s += "{\n\"angle_set\": [";
  for (std::size_t i = 0; i < r.angle_set.size(); ++i) {
    s += i ? ",\n  " : "\n  ";
    s += "{\"multiplicity\":" + num(r.angle_set[i].multiplicity) +
         ",\"theta\":" + num(r.angle_set[i].theta) + "}";
  }
  s += "\n],\n\"classes\": [";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const ClosedGeodesicClass& c = r.classes[i];
    s += i ? ",\n  " : "\n  ";
    s += "{\"axis\":" + json_axis(c.axis) + ",\"length\":" + num(c.length) +
         ",\"trace\":" + num(c.trace) + ",\"word\":" + json_word(c.rep.word()) + "}";
  }
  s += "\n],\n\"generators\": [";
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    const MoebiusElement& m = r.generators[i];
    s += i ? ",\n  " : "\n  ";
    s += "[" + num(m.a) + "," + num(m.b) + "," + num(m.c) + "," + num(m.d) + "]";
  }
  s += "\n],\n\"params\": {";
  s += "\"conj_len\":" + num(r.params.conj_len);
  s += ",\"degree_bound\":" + num(static_cast<std::uint64_t>(r.params.degree_bound));
  s += ",\"eps_cluster\":" + num(r.params.eps_cluster);
  s += ",\"eps_rat\":" + num(r.params.eps_rat);
  s += ",\"group\":" + json_string(r.group_name);
  s += ",\"max_trace\":" + num(r.params.max_trace);
  s += ",\"max_word_len\":" + num(r.params.max_word_len);
  s += ",\"multiplicity\":" + json_string(kMultiplicityNote);
  s += std::string(",\"oriented\":") + (r.params.oriented ? "true" : "false");
  s += ",\"qmax\":" + num(r.params.qmax);
  s += "},\n\"rational_hits\": [";
  for (std::size_t i = 0; i < r.rational_hits.size(); ++i) {
    const RationalHit& h = r.rational_hits[i];
    s += i ? ",\n  " : "\n  ";
    s += "{\"bound\":" + num(h.bound) + ",\"ok\":" + (h.ok ? "true" : "false") +
         ",\"p\":" + num(h.p) + ",\"phi_q\":" + num(h.phi_q) + ",\"q\":" + num(h.q) +
         ",\"theta\":" + num(h.theta) + "}";
  }
  s += "\n],\n\"records\": [";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const IntersectionRecord& rec = r.records[i];
    s += i ? ",\n  " : "\n  ";
    s += "{\"class_i\":" + num(rec.class_i) + ",\"class_j\":" + num(rec.class_j) +
         ",\"conjugator\":" + json_word(rec.conjugator) + ",\"cos2\":" + num(rec.cos2) +
         ",\"point\":{\"x\":" + num(rec.point.x) + ",\"y\":" + num(rec.point.y) +
         "},\"theta\":" + num(rec.theta) + "}";
  }
  s += "\n]\n}\n";
  return s;
}

std::string report_csv(const SpectrumReport& r) {
  std::string s = "class_i,class_j,conjugator,x,y,theta,cos2\n";
  for (const IntersectionRecord& rec : r.records) {
    s += num(rec.class_i) + "," + num(rec.class_j) + "," + word_to_string(rec.conjugator) +
         "," + num(rec.point.x) + "," + num(rec.point.y) + "," + num(rec.theta) + "," +
         num(rec.cos2) + "\n";
  }
  return s;
}

std::string report_svg(const SpectrumReport& r, const SvgOptions& opt) {
  if (r.classes.empty()) throw EmptyInputError("report_svg: no classes to render");
  if (!(opt.xmax > opt.xmin) || !(opt.ymax > 0) || opt.width <= 0)
    throw std::invalid_argument("report_svg: bad viewport");

  const double pad = 10;
  const double scale = (opt.width - 2 * pad) / (opt.xmax - opt.xmin);
  const double height = opt.ymax * scale + 2 * pad;
  auto sx = [&](double x) { return pad + (x - opt.xmin) * scale; };
  auto sy = [&](double y) { return height - pad - y * scale; };
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(opt.width) +
       "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(opt.width) + " " +
       fmt(height) + "\">\n";
  s += "<line class=\"real-axis\" x1=\"" + fmt(sx(opt.xmin)) + "\" y1=\"" + fmt(sy(0)) +
       "\" x2=\"" + fmt(sx(opt.xmax)) + "\" y2=\"" + fmt(sy(0)) +
       "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (const ClosedGeodesicClass& c : r.classes) {
    if (c.axis.is_vertical()) {
      double x = sx(c.axis.x());
      s += "<path class=\"geodesic\" d=\"M " + fmt(x) + " " + fmt(sy(0)) + " L " +
           fmt(x) + " " + fmt(sy(opt.ymax)) +
           "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\"/>\n";
    } else {
      double radius = c.axis.radius() * scale;
      // sweep flag 1 draws the upper arc from the left endpoint to the right
      s += "<path class=\"geodesic\" d=\"M " + fmt(sx(c.axis.center() - c.axis.radius())) +
           " " + fmt(sy(0)) + " A " + fmt(radius) + " " + fmt(radius) + " 0 0 1 " +
           fmt(sx(c.axis.center() + c.axis.radius())) + " " + fmt(sy(0)) +
           "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\"/>\n";
    }
  }
  for (const IntersectionRecord& rec : r.records) {
    double cx = sx(rec.point.x), cy = sy(rec.point.y);
    s += "<g class=\"record\"><circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
         "\" r=\"3\" fill=\"#d62728\"/><text x=\"" + fmt(cx + 5) + "\" y=\"" +
         fmt(cy - 5) + "\" font-size=\"11\">" + angle_label(r, rec.theta) +
         "</text></g>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string report_summary(const SpectrumReport& r) {
  std::ostringstream os;
  os << "group: " << r.group_name << "   generators: " << r.generators.size() << "\n";
  os << "bounds: max_word_len=" << r.params.max_word_len
     << " max_trace=" << r.params.max_trace << " conj_len=" << r.params.conj_len
     << " qmax=" << r.params.qmax << " eps_rat=" << r.params.eps_rat
     << " eps_cluster=" << r.params.eps_cluster
     << " degree_bound=" << r.params.degree_bound
     << " oriented=" << (r.params.oriented ? "yes" : "no") << "\n";
  os << "classes: " << r.classes.size() << "   records: " << r.records.size()
     << "   distinct angles: " << r.angle_set.size() << "\n";
  os << "multiplicity counts " << kMultiplicityNote << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%14s %6s %12s %8s %9s\n", "theta", "mult",
                "rational", "phi(q)", "totient");
  os << line;
  for (const AngleCluster& cluster : r.angle_set) {
    const RationalHit* hit = nullptr;
    for (const RationalHit& h : r.rational_hits) {
      if (std::fabs(h.theta - cluster.theta) <= std::max(r.params.eps_cluster, 1e-9)) {
        hit = &h;
        break;
      }
    }
    if (hit) {
      char frac[40];
      std::snprintf(frac, sizeof frac, "%lld pi/%lld", static_cast<long long>(hit->p),
                    static_cast<long long>(hit->q));
      std::snprintf(line, sizeof line, "%14.10f %6d %12s %8llu %9s\n", cluster.theta,
                    cluster.multiplicity, frac,
                    static_cast<unsigned long long>(hit->phi_q),
                    hit->ok ? "ok" : "VIOLATED");
    } else {
      std::snprintf(line, sizeof line, "%14.10f %6d %12s %8s %9s\n", cluster.theta,
                    cluster.multiplicity, "-", "-", "-");
    }
    os << line;
  }
  return os.str();
}

GeneratorSet parse_group_text(const std::string& text) {
  GeneratorSet g;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream row(line);
    double a, b, c, d;
    if (!(row >> a >> b >> c >> d)) {
      throw ParseError(ParseError::Kind::MalformedEntry, line_no,
                       "line " + std::to_string(line_no) +
                           ": expected 4 numbers 'a b c d'");
    }
    std::string rest;
    if (row >> rest) {
      throw ParseError(ParseError::Kind::MalformedEntry, line_no,
                       "line " + std::to_string(line_no) + ": trailing content '" +
                           rest + "'");
    }
    int index = static_cast<int>(g.gens.size()) + 1;
    double det = a * d - b * c;
    if (std::fabs(det - 1) > tol::det) {
      throw ParseError(ParseError::Kind::NonUnitDeterminant, index,
                       "generator " + std::to_string(index) + ": determinant " +
                           std::to_string(det) + " is not 1");
    }
    MoebiusElement m = moebius(a, b, c, d, Word{index});
    if (classify(m) == ElementClass::Identity) {
      throw ParseError(ParseError::Kind::IdentityGenerator, index,
                       "generator " + std::to_string(index) +
                           " is projectively the identity");
    }
    g.gens.push_back(std::move(m));
  }
  return g;
}

GeneratorSet parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::Io, 0, "cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  GeneratorSet g = parse_group_text(buf.str());
  g.name = path;
  return g;
}

std::string write_group_text(const GeneratorSet& g) {
  std::string s = "# generators, one per line: a b c d\n";
  for (const MoebiusElement& m : g.gens) {
    s += num(m.a) + " " + num(m.b) + " " + num(m.c) + " " + num(m.d) + "\n";
  }
  return s;
}

}  // namespace anglespec

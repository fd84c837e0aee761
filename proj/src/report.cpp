#include "bnfourier/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace bnf {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, x);
  std::string out(buf);
  if (out == "-0") out = "0";
  return out;
}

double round_number(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

std::string subset_label(SubsetMask s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : s.members()) {
    if (!first) out += ',';
    out += i < labels.size() ? labels[i] : std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::vector<SpectrumRow> spectrum_rows(const Spectrum& s) {
  std::vector<SpectrumRow> rows;
  const auto coeffs = s.coefficients();
  rows.reserve(coeffs.size());
  for (std::uint64_t m = 0; m < coeffs.size(); ++m) rows.push_back({SubsetMask{m}, coeffs[m]});
  std::stable_sort(rows.begin(), rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
    if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
    return a.subset.bits < b.subset.bits;
  });
  return rows;
}

nlohmann::ordered_json to_json(const CollapsedNetwork& c) {
  nlohmann::ordered_json out;
  out["inputs"] = c.inputs;
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& node : c.nodes) {
    nlohmann::ordered_json n;
    n["name"] = node.name;
    n["inputs"] = node.fn.labels();
    n["table"] = node.fn.to_hex();
    nodes.push_back(std::move(n));
  }
  out["nodes"] = std::move(nodes);
  auto constants = nlohmann::ordered_json::array();
  for (const auto& [name, value] : c.constants) constants.push_back({{"name", name}, {"value", value ? 1 : -1}});
  out["constants"] = std::move(constants);
  out["non_effective_inputs"] = effective_inputs(c).non_effective;
  return out;
}

std::string curve_csv(const UncertaintyCurve& curve, const BaselineResult* baseline) {
  std::string out = baseline ? "l,A_l,mean,stddev\n" : "l,A_l\n";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    out += std::to_string(curve.points[i].l) + "," + format_number(curve.points[i].value);
    if (baseline) {
      if (i < baseline->mean.points.size()) {
        out += "," + format_number(baseline->mean.points[i].value) + "," + format_number(baseline->stddev[i]);
      } else {
        out += ",,";
      }
    }
    out += '\n';
  }
  return out;
}

std::string scatter_csv(const std::vector<SensitivityRecord>& records) {
  std::string out = "name,in_degree,avg_sensitivity,prob_one,poincare_lower\n";
  for (const auto& r : records) {
    out += r.name + "," + std::to_string(r.in_degree) + "," + format_number(r.avg_sensitivity) + "," +
           format_number(r.prob_one) + "," + format_number(r.poincare_lower) + "\n";
  }
  return out;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr double kWidth = 480, kHeight = 320, kMargin = 40;

struct Frame {
  double x_max, y_max;
  double x(double v) const { return kMargin + (kWidth - 2 * kMargin) * (x_max > 0 ? v / x_max : 0); }
  double y(double v) const { return kHeight - kMargin - (kHeight - 2 * kMargin) * (y_max > 0 ? v / y_max : 0); }
};

std::string header(const Frame& f, const char* x_label, const char* y_label) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<line x1=\"" << kMargin << "\" y1=\"" << f.y(0) << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << f.y(0)
    << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << kMargin << "\" y1=\"" << f.y(0) << "\" x2=\"" << kMargin << "\" y2=\"" << kMargin
    << "\" stroke=\"black\"/>\n"
    << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 8 << "\" font-size=\"12\">" << x_label << " (max "
    << format_number(f.x_max) << ")</text>\n"
    << "<text x=\"4\" y=\"" << kMargin - 10 << "\" font-size=\"12\">" << y_label << " (max "
    << format_number(f.y_max) << ")</text>\n";
  return s.str();
}

std::string polyline(const Frame& f, const std::vector<CurvePoint>& pts, const char* color, bool dashed,
                     double offset = 0.0, const std::vector<double>* shift = nullptr) {
  std::ostringstream s;
  s << "<polyline fill=\"none\" stroke=\"" << color << "\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "")
    << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double v = pts[i].value + (shift ? offset * (*shift)[i] : 0.0);
    s << format_number(f.x(static_cast<double>(pts[i].l))) << "," << format_number(f.y(std::max(v, 0.0))) << " ";
  }
  s << "\"/>\n";
  return s.str();
}

}  // namespace

std::string curve_svg(const UncertaintyCurve& curve, const BaselineResult* baseline) {
  double y_max = 0;
  for (const auto& p : curve.points) y_max = std::max(y_max, p.value);
  if (baseline) {
    for (std::size_t i = 0; i < baseline->mean.points.size(); ++i) {
      y_max = std::max(y_max, baseline->mean.points[i].value + baseline->stddev[i]);
    }
  }
  const Frame f{curve.points.empty() ? 0.0 : static_cast<double>(curve.points.back().l), y_max};
  std::string out = header(f, "l", "A(l)");
  out += polyline(f, curve.points, "black", false);
  if (baseline) {
    out += polyline(f, baseline->mean.points, "red", false);
    out += polyline(f, baseline->mean.points, "red", true, 1.0, &baseline->stddev);
    out += polyline(f, baseline->mean.points, "red", true, -1.0, &baseline->stddev);
  }
  return out + "</svg>\n";
}

std::string scatter_svg(const std::vector<SensitivityRecord>& records) {
  double x_max = 1.0;
  for (const auto& r : records) x_max = std::max(x_max, r.avg_sensitivity);
  const Frame f{x_max, 1.0};
  std::ostringstream s;
  s << header(f, "AS(f)", "Pr[f=1]");
  for (const auto& r : records) {
    s << "<circle cx=\"" << format_number(f.x(r.avg_sensitivity)) << "\" cy=\"" << format_number(f.y(r.prob_one))
      << "\" r=\"2\" fill=\"steelblue\"/>\n";
  }
  // Lower bound 4p(1-p) under the uniform distribution.
  s << "<polyline fill=\"none\" stroke=\"gray\" points=\"";
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    s << format_number(f.x(4 * p * (1 - p))) << "," << format_number(f.y(p)) << " ";
  }
  s << "\"/>\n</svg>\n";
  return s.str();
}

}  // namespace bnf

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bnfourier/analysis.hpp"
#include "bnfourier/baseline.hpp"
#include "bnfourier/collapse.hpp"
#include "bnfourier/spectrum.hpp"

namespace bnf {

/// Output values carry 12 significant digits.
inline constexpr int kReportDigits = 12;

/// "%.12g" text of x, with negative zero printed as 0.
std::string format_number(double x);

/// x rounded to 12 significant digits, so JSON output is stable.
double round_number(double x);

/// "{a,b}" for the members of `s` named by `labels`; "{}" for the empty set.
std::string subset_label(SubsetMask s, const std::vector<std::string>& labels);

/// Spectrum rows sorted by degree, then mask.
struct SpectrumRow {
  SubsetMask subset;
  double coefficient = 0.0;
};
std::vector<SpectrumRow> spectrum_rows(const Spectrum& s);

nlohmann::ordered_json to_json(const CollapsedNetwork& c);

std::string curve_csv(const UncertaintyCurve& curve, const BaselineResult* baseline = nullptr);
std::string scatter_csv(const std::vector<SensitivityRecord>& records);

/// FNV-1a 64-bit digest of `bytes` as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

/// Minimal standalone SVG plots for inspection.
std::string curve_svg(const UncertaintyCurve& curve, const BaselineResult* baseline = nullptr);
std::string scatter_svg(const std::vector<SensitivityRecord>& records);

}  // namespace bnf

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bnfourier/analysis.hpp"
#include "bnfourier/baseline.hpp"
#include "bnfourier/collapse.hpp"
#include "bnfourier/error.hpp"
#include "bnfourier/expr.hpp"
#include "bnfourier/measures.hpp"
#include "bnfourier/network.hpp"
#include "bnfourier/report.hpp"
#include "bnfourier/selftest.hpp"
#include "bnfourier/spectrum.hpp"

namespace bnf::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct FunctionArgs {
  std::string expr;
  std::string hex;
  std::optional<unsigned> arity;
  std::vector<std::string> vars;
};

struct CommonArgs {
  std::string p;
  std::uint64_t seed = 0;
  unsigned cap = kDefaultArityCap;
  std::string out_dir;
  std::string format = "json";
  unsigned threads = 1;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec || !fs::is_directory(p)) throw InputError("output directory '" + dir + "' is not writable");
  return p;
}

double parse_probability(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw InputError("invalid probability '" + text + "'");
  return v;
}

// --p accepts a file of "name value" or "value" lines, or an inline comma
// list. A single value applies to every variable; empty means uniform.
ProductDist parse_distribution(const std::string& spec, const std::vector<std::string>& labels) {
  if (spec.empty()) return ProductDist::uniform(static_cast<unsigned>(labels.size()));
  std::vector<std::pair<std::string, std::string>> entries;
  std::error_code ec;
  if (fs::is_regular_file(spec, ec)) {
    std::istringstream in(read_file(spec));
    std::string line;
    while (std::getline(in, line)) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream fields(line);
      std::string a, b, extra;
      if (!(fields >> a)) continue;
      if (fields >> b) {
        if (fields >> extra) throw InputError("probability file line has too many fields: '" + line + "'");
        entries.emplace_back(a, b);
      } else {
        entries.emplace_back("", a);
      }
    }
  } else {
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) entries.emplace_back("", item);
  }
  const bool named = !entries.empty() && !entries.front().first.empty();
  std::vector<double> probs(labels.size(), 0.0);
  if (named) {
    std::vector<bool> seen(labels.size(), false);
    for (const auto& [name, value] : entries) {
      if (name.empty()) throw InputError("probability file mixes named and unnamed lines");
      const auto it = std::find(labels.begin(), labels.end(), name);
      if (it == labels.end()) throw InputError("probability given for unknown variable '" + name + "'");
      const auto j = static_cast<std::size_t>(it - labels.begin());
      probs[j] = parse_probability(value);
      seen[j] = true;
    }
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (!seen[j]) throw InputError("missing probability for '" + labels[j] + "'");
    }
  } else if (entries.size() == 1) {
    std::fill(probs.begin(), probs.end(), parse_probability(entries.front().second));
  } else {
    if (entries.size() != labels.size()) {
      throw InputError("probability list has " + std::to_string(entries.size()) + " entries for " +
                       std::to_string(labels.size()) + " variables");
    }
    for (std::size_t j = 0; j < labels.size(); ++j) probs[j] = parse_probability(entries[j].second);
  }
  return ProductDist(std::move(probs));
}

Json distribution_json(const std::string& spec, const ProductDist& d) {
  Json out;
  out["kind"] = spec.empty() ? "uniform" : "product";
  Json probs = Json::array();
  for (double p : d.probs()) probs.push_back(round_number(p));
  out["p"] = std::move(probs);
  return out;
}

BoolFn build_function(const FunctionArgs& args, unsigned cap) {
  if (args.expr.empty() == args.hex.empty()) throw InputError("give exactly one of --expr or --hex");
  if (!args.expr.empty()) {
    const Expr e = parse_expression(args.expr);
    if (args.vars.empty()) return truth_table(e, cap);
    return truth_table(e, args.vars, cap);
  }
  std::vector<std::string> labels = args.vars;
  if (labels.empty()) {
    unsigned n = 0;
    if (args.arity) {
      n = *args.arity;
    } else {
      const std::size_t digits = args.hex.size();
      if (digits < 2) throw InputError("single-digit hex tables need --arity or --vars");
      while ((std::size_t{1} << n) < 4 * digits) ++n;
    }
    labels = default_labels(n);
  } else if (args.arity && *args.arity != labels.size()) {
    throw InputError("--arity disagrees with the number of --vars");
  }
  return BoolFn::from_hex(std::move(labels), args.hex, cap);
}

SubsetMask mask_of(const std::vector<std::string>& names, const std::vector<std::string>& labels) {
  SubsetMask m;
  for (const auto& name : names) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw InputError("unknown variable '" + name + "'");
    m.bits |= std::uint64_t{1} << (it - labels.begin());
  }
  return m;
}

void emit(std::ostream& out, const CommonArgs& common, const std::string& stem, const Json& json,
          const std::string& csv) {
  const std::string text = common.format == "csv" ? csv : json.dump(2) + "\n";
  out << text;
  if (!common.out_dir.empty()) {
    write_file(prepare_out_dir(common.out_dir) / (stem + (common.format == "csv" ? ".csv" : ".json")), text);
  }
}

const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::positive: return "+1";
    case Polarity::negative: return "-1";
    case Polarity::unconstrained: return "unconstrained";
    case Polarity::binate: return "binate";
  }
  return "";
}

int cmd_spectrum(const FunctionArgs& fa, const CommonArgs& common, std::ostream& out) {
  const BoolFn f = build_function(fa, common.cap);
  const ProductDist d = parse_distribution(common.p, f.labels());
  const Spectrum s = transform(f, d, common.cap);
  Json json;
  json["labels"] = f.labels();
  json["table"] = f.to_hex();
  json["distribution"] = distribution_json(common.p, d);
  Json rows = Json::array();
  std::string csv = "subset,degree,mask,coefficient\n";
  for (const auto& row : spectrum_rows(s)) {
    const std::string label = subset_label(row.subset, f.labels());
    rows.push_back({{"subset", label},
                    {"degree", row.subset.size()},
                    {"mask", row.subset.bits},
                    {"coefficient", round_number(row.coefficient)}});
    csv += "\"" + label + "\"," + std::to_string(row.subset.size()) + "," + std::to_string(row.subset.bits) + "," +
           format_number(row.coefficient) + "\n";
  }
  json["coefficients"] = std::move(rows);
  json["parseval"] = round_number(s.weight());
  emit(out, common, "spectrum", json, csv);
  return kSuccess;
}

int cmd_measures(const FunctionArgs& fa, const CommonArgs& common, const std::vector<std::string>& given,
                 std::optional<double> eps, std::uint64_t samples, std::ostream& out) {
  const BoolFn f = build_function(fa, common.cap);
  const unsigned n = f.arity();
  const ProductDist d = parse_distribution(common.p, f.labels());
  const SubsetMask a = given.empty() ? SubsetMask::full(n) : mask_of(given, f.labels());
  const Spectrum s = transform(f, d, common.cap);

  Json json;
  std::string csv = "quantity,value\n";
  auto scalar = [&](const std::string& key, double v) {
    json[key] = round_number(v);
    csv += key + "," + format_number(v) + "\n";
  };
  json["labels"] = f.labels();
  json["table"] = f.to_hex();
  json["distribution"] = distribution_json(common.p, d);
  json["given"] = subset_label(a, f.labels());

  Json infl = Json::array();
  for (unsigned i = 0; i < n; ++i) {
    const double v = influence(f, d, i);
    infl.push_back({{"variable", f.labels()[i]}, {"value", round_number(v)}});
    csv += "influence[" + f.labels()[i] + "]," + format_number(v) + "\n";
  }
  json["influences"] = std::move(infl);
  scalar("avg_sensitivity", avg_sensitivity(f, d));
  scalar("sensitivity_given", avg_sensitivity(f, d, a));
  scalar("entropy", entropy(f, d));
  scalar("cond_entropy", cond_entropy(f, d, a));
  scalar("mutual_information", mutual_information(f, d, a));

  const auto bounds = entropy_bounds(f, d, a);
  json["entropy_bounds"] = {{"lower", round_number(bounds.lower)},
                            {"exact", round_number(bounds.exact)},
                            {"upper", round_number(bounds.upper)}};
  csv += "entropy_bounds.lower," + format_number(bounds.lower) + "\nentropy_bounds.exact," +
         format_number(bounds.exact) + "\nentropy_bounds.upper," + format_number(bounds.upper) + "\n";

  if (!a.is_empty()) {
    const auto b = mi_influence_bound_check(f, d, a);
    json["influence_bound"] = {{"lhs", round_number(b.lhs)}, {"rhs", round_number(b.rhs)}};
    csv += "influence_bound.lhs," + format_number(b.lhs) + "\ninfluence_bound.rhs," + format_number(b.rhs) + "\n";
  }

  Json ratio = Json::array();
  for (unsigned i = 0; i < n; ++i) {
    const auto r = influence_entropy_identity(f, d, i);
    ratio.push_back(
        {{"variable", f.labels()[i]}, {"influence", round_number(r.influence)}, {"ratio", round_number(r.ratio)}});
    csv += "entropy_ratio[" + f.labels()[i] + "]," + format_number(r.ratio) + "\n";
  }
  json["influence_entropy"] = std::move(ratio);

  const bool indep = independence_test(s, a);
  json["independent"] = indep;
  csv += std::string("independent,") + (indep ? "true" : "false") + "\n";

  const auto profile = unateness(f);
  Json pol = Json::array();
  for (unsigned i = 0; i < n; ++i) pol.push_back({{"variable", f.labels()[i]}, {"polarity", polarity_name(profile.polarity[i])}});
  json["unateness"] = {{"is_unate", profile.is_unate}, {"polarity", std::move(pol)}};
  csv += std::string("is_unate,") + (profile.is_unate ? "true" : "false") + "\n";
  if (profile.is_unate) {
    Json rows = Json::array();
    for (const auto& row : unate_coefficient_check(f, d)) {
      rows.push_back({{"variable", f.labels()[row.variable]},
                      {"coefficient", round_number(row.coefficient)},
                      {"predicted", round_number(row.predicted)}});
    }
    json["unate_coefficients"] = std::move(rows);
  }

  if (eps) {
    const NoiseMode mode = n <= 12 ? NoiseMode::exact : NoiseMode::monte_carlo;
    const auto ns = noise_sensitivity(f, d, *eps, mode, {samples, common.seed});
    json["noise_sensitivity"] = {{"eps", round_number(*eps)},
                                 {"mode", mode == NoiseMode::exact ? "exact" : "monte-carlo"},
                                 {"value", round_number(ns.value)},
                                 {"std_error", round_number(ns.std_error)},
                                 {"seed", common.seed}};
    csv += "noise_sensitivity," + format_number(ns.value) + "\n";
  }
  emit(out, common, "measures", json, csv);
  return kSuccess;
}

int cmd_collapse(const std::string& path, const CommonArgs& common, std::ostream& out) {
  const Network net = load_network(path);
  const CollapsedNetwork c = collapse(net, common.cap);
  const std::string text = to_json(c).dump(2) + "\n";
  if (common.out_dir.empty()) {
    out << text;
  } else {
    write_file(prepare_out_dir(common.out_dir) / "collapsed.json", text);
    const auto part = effective_inputs(c);
    out << "nodes " << c.nodes.size() << ", constants " << c.constants.size() << ", effective inputs "
        << part.effective.size() << ", non-effective inputs " << part.non_effective.size() << "\n";
  }
  return kSuccess;
}

Json curve_json(const UncertaintyCurve& curve) {
  Json pts = Json::array();
  for (const auto& p : curve.points) pts.push_back({{"l", p.l}, {"A", round_number(p.value)}});
  return pts;
}

Json baseline_json(const BaselineSpec& spec, const BaselineResult& b) {
  Json stddev = Json::array();
  for (double v : b.stddev) stddev.push_back(round_number(v));
  Json out;
  out["mode"] = std::string(to_string(spec.mode));
  out["trials"] = spec.trials;
  out["seed"] = spec.seed;
  out["resampled"] = b.resampled;
  out["unate_sampling"] = b.unate_exact ? "exact" : "approximate (monotone Markov chain for in-degree > 4)";
  out["mean"] = curve_json(b.mean);
  out["stddev"] = std::move(stddev);
  return out;
}

struct NetworkRun {
  Network net;
  CollapsedNetwork collapsed;
  ProductDist dist;
  std::string checksum;
};

NetworkRun load_run(const std::string& path, const CommonArgs& common) {
  const std::string text = read_file(path);
  NetworkRun r{parse_network(text), {}, {}, fnv1a64_hex(text)};
  r.collapsed = collapse(r.net, common.cap);
  r.dist = parse_distribution(common.p, r.net.inputs());
  return r;
}

Json metadata(const std::string& path, const NetworkRun& r, const CommonArgs& common) {
  Json m;
  m["seed"] = common.seed;
  m["distribution"] = distribution_json(common.p, r.dist);
  m["dataset"] = {{"file", fs::path(path).filename().string()}, {"fnv1a64", r.checksum}};
  m["cap"] = common.cap;
  return m;
}

int cmd_analyze(const std::string& path, const CommonArgs& common, std::optional<std::size_t> length,
                std::size_t top, const std::string& baseline_mode, std::size_t trials, bool svg, std::ostream& out) {
  const NetworkRun r = load_run(path, common);
  const auto& c = r.collapsed;
  const auto part = effective_inputs(c);
  const std::size_t L = length.value_or(c.inputs.size());
  if (L > c.inputs.size()) throw InputError("--L exceeds the number of inputs");

  const RankingResult ranking = determinative_power(c, r.dist);
  const UncertaintyCurve curve = uncertainty_curve(c, r.dist, ranking.tau, L);
  const auto scatter = sensitivity_scatter(c, r.dist);

  std::optional<BaselineSpec> spec;
  std::optional<BaselineResult> baseline;
  if (!baseline_mode.empty()) {
    spec = BaselineSpec{};
    spec->mode = parse_baseline_mode(baseline_mode);
    spec->trials = trials;
    spec->seed = common.seed;
    spec->cap = common.cap;
    spec->threads = common.threads;
    baseline = baseline_curves(r.net, *spec, r.dist, L);
  }

  std::size_t non_unate = 0;
  for (const auto& lf : local_functions(r.net, common.cap)) non_unate += unateness(lf.fn).is_unate ? 0 : 1;
  std::size_t max_support = 0;
  for (const auto& node : c.nodes) max_support = std::max(max_support, node.inputs.size());

  Json report;
  report["metadata"] = metadata(path, r, common);
  report["counts"] = {{"inputs", c.inputs.size()},
                      {"effective_inputs", part.effective.size()},
                      {"non_effective_inputs", part.non_effective.size()},
                      {"nodes", c.nodes.size()},
                      {"edges", r.net.edge_count()},
                      {"constants", c.constants.size()},
                      {"non_unate_functions", non_unate},
                      {"max_collapsed_support", max_support}};
  Json dvals = Json::array();
  for (std::size_t j = 0; j < c.inputs.size(); ++j) {
    dvals.push_back({{"input", c.inputs[j]},
                     {"D", round_number(ranking.d_values[j])},
                     {"out_degree", out_degree(r.net, c.inputs[j])},
                     {"collapsed_out_degree", out_degree(c, c.inputs[j])}});
  }
  report["d_values"] = std::move(dvals);
  Json tau = Json::array();
  for (auto j : ranking.tau) tau.push_back(c.inputs[j]);
  report["tau"] = std::move(tau);
  report["curve"] = curve_json(curve);
  if (baseline) report["baseline"] = baseline_json(*spec, *baseline);
  Json recs = Json::array();
  for (const auto& s : scatter) {
    recs.push_back({{"name", s.name},
                    {"in_degree", s.in_degree},
                    {"avg_sensitivity", round_number(s.avg_sensitivity)},
                    {"prob_one", round_number(s.prob_one)},
                    {"poincare_lower", round_number(s.poincare_lower)}});
  }
  report["sensitivity"] = std::move(recs);
  Json consts = Json::array();
  for (const auto& [name, value] : c.constants) consts.push_back({{"name", name}, {"value", value ? 1 : -1}});
  report["constants"] = std::move(consts);
  report["non_effective_inputs"] = part.non_effective;

  const fs::path dir = prepare_out_dir(common.out_dir.empty() ? "." : common.out_dir);
  write_file(dir / "report.json", report.dump(2) + "\n");
  write_file(dir / "curve.csv", curve_csv(curve, baseline ? &*baseline : nullptr));
  write_file(dir / "scatter.csv", scatter_csv(scatter));
  if (svg) {
    write_file(dir / "curve.svg", curve_svg(curve, baseline ? &*baseline : nullptr));
    write_file(dir / "scatter.svg", scatter_svg(scatter));
  }

  out << "inputs " << c.inputs.size() << " (effective " << part.effective.size() << "), nodes " << c.nodes.size()
      << ", constants " << c.constants.size() << "\n";
  out << "rank  D(bits)       input\n";
  for (std::size_t k = 0; k < std::min(top, ranking.tau.size()); ++k) {
    const auto j = ranking.tau[k];
    out << std::setw(4) << k + 1 << "  " << std::left << std::setw(12) << format_number(ranking.d_values[j])
        << "  " << c.inputs[j] << std::right << "\n";
  }
  out << "wrote " << (dir / "report.json").string() << "\n";
  return kSuccess;
}

int cmd_baseline(const std::string& path, const CommonArgs& common, std::optional<std::size_t> length,
                 const std::string& mode, std::size_t trials, unsigned degree, std::ostream& out) {
  const NetworkRun r = load_run(path, common);
  const std::size_t L = length.value_or(r.collapsed.inputs.size());
  if (L > r.collapsed.inputs.size()) throw InputError("--L exceeds the number of inputs");
  BaselineSpec spec;
  spec.mode = parse_baseline_mode(mode);
  spec.trials = trials;
  spec.seed = common.seed;
  spec.cap = common.cap;
  spec.threads = common.threads;
  spec.out_degree = degree;
  const BaselineResult b = baseline_curves(r.net, spec, r.dist, L);
  const RankingResult ranking = determinative_power(r.collapsed, r.dist);
  const UncertaintyCurve curve = uncertainty_curve(r.collapsed, r.dist, ranking.tau, L);

  Json report;
  report["metadata"] = metadata(path, r, common);
  report["curve"] = curve_json(curve);
  report["baseline"] = baseline_json(spec, b);
  const fs::path dir = prepare_out_dir(common.out_dir.empty() ? "." : common.out_dir);
  write_file(dir / "baseline.json", report.dump(2) + "\n");
  write_file(dir / "baseline.csv", curve_csv(curve, &b));
  out << "baseline " << to_string(spec.mode) << ", " << trials << " trials, resampled " << b.resampled << "\n";
  out << "wrote " << (dir / "baseline.json").string() << "\n";
  return kSuccess;
}

int cmd_selftest(std::uint64_t seed, std::size_t instances, std::ostream& out) {
  SelftestOptions opts;
  opts.seed = seed;
  opts.instances = instances;
  bool ok = true;
  for (const auto& check : run_selftest(opts)) {
    ok = ok && check.passed();
    out << (check.passed() ? "PASS " : "FAIL ") << check.name << "  instances=" << check.instances
        << " failures=" << check.failures << " max_error=" << format_number(check.max_error) << "\n";
  }
  return ok ? kSuccess : kFailure;
}

void add_function_options(CLI::App* cmd, FunctionArgs& fa) {
  cmd->add_option("--expr", fa.expr, "Boolean expression, e.g. \"x1 AND NOT x2\"");
  cmd->add_option("--hex", fa.hex, "truth table hex, least significant digit first");
  cmd->add_option("--arity", fa.arity, "arity for --hex tables");
  cmd->add_option("--vars", fa.vars, "variable order (comma separated)")->delimiter(',');
}

void add_common_options(CLI::App* cmd, CommonArgs& common, bool network) {
  cmd->add_option("--p", common.p, "probabilities: value, comma list, or file of 'name value' lines");
  cmd->add_option("--seed", common.seed, "random seed");
  cmd->add_option("--cap", common.cap, "arity cap for dense tables")->check(CLI::Range(0u, kMaxArity));
  cmd->add_option("--out", common.out_dir, "output directory");
  if (network) {
    cmd->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
  } else {
    cmd->add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier and information measures of Boolean functions and feed-forward Boolean networks",
               "bnfourier"};
  app.require_subcommand(1);

  FunctionArgs fa;
  CommonArgs common;
  std::vector<std::string> given;
  std::optional<double> eps;
  std::uint64_t samples = 1'000'000;
  std::string network_path;
  std::optional<std::size_t> length;
  std::size_t top = 10;
  std::string baseline_mode;
  std::size_t trials = 25;
  unsigned degree = 8;
  bool svg = false;
  std::size_t instances = 500;

  auto* spectrum = app.add_subcommand("spectrum", "Fourier coefficients of a function");
  add_function_options(spectrum, fa);
  add_common_options(spectrum, common, false);

  auto* measures = app.add_subcommand("measures", "influence, entropy and mutual-information report");
  add_function_options(measures, fa);
  add_common_options(measures, common, false);
  measures->add_option("--given", given, "conditioning variables (default: all)")->delimiter(',');
  measures->add_option("--eps", eps, "noise rate for noise sensitivity")->check(CLI::Range(0.0, 0.5));
  measures->add_option("--samples", samples, "Monte-Carlo samples when arity > 12");

  auto* collapse_cmd = app.add_subcommand("collapse", "express every node over the input layer");
  collapse_cmd->add_option("network", network_path, "network file")->required();
  add_common_options(collapse_cmd, common, true);

  auto* analyze = app.add_subcommand("analyze", "determinative power, A(l) curve and sensitivity scatter");
  analyze->add_option("network", network_path, "network file")->required();
  add_common_options(analyze, common, true);
  analyze->add_option("--L", length, "curve length (default: all inputs)");
  analyze->add_option("--top", top, "rows of the D(j) table to print");
  analyze->add_option("--baseline", baseline_mode, "random baseline mode")
      ->check(CLI::IsMember({"exchange-random", "exchange-unate", "random-topology-random", "random-topology-unate"}));
  analyze->add_option("--trials", trials, "baseline trials")->check(CLI::PositiveNumber);
  analyze->add_flag("--svg", svg, "also write SVG plots");

  auto* baseline = app.add_subcommand("baseline", "A(l) of randomized networks");
  baseline->add_option("network", network_path, "network file")->required();
  add_common_options(baseline, common, true);
  baseline->add_option("--mode", baseline_mode, "random baseline mode")
      ->required()
      ->check(CLI::IsMember({"exchange-random", "exchange-unate", "random-topology-random", "random-topology-unate"}));
  baseline->add_option("--trials", trials, "trials")->check(CLI::PositiveNumber);
  baseline->add_option("--L", length, "curve length (default: all inputs)");
  baseline->add_option("--out-degree", degree, "input out-degree for random topologies")->check(CLI::PositiveNumber);

  auto* selftest = app.add_subcommand("selftest", "randomized check of the spectral identities");
  selftest->add_option("--seed", common.seed, "random seed");
  selftest->add_option("--trials", instances, "random instances")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kUsageError;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(fa, common, out);
    if (measures->parsed()) return cmd_measures(fa, common, given, eps, samples, out);
    if (collapse_cmd->parsed()) return cmd_collapse(network_path, common, out);
    if (analyze->parsed()) return cmd_analyze(network_path, common, length, top, baseline_mode, trials, svg, out);
    if (baseline->parsed()) return cmd_baseline(network_path, common, length, baseline_mode, trials, degree, out);
    if (selftest->parsed()) return cmd_selftest(common.seed, instances, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsageError;
}

}  // namespace bnf::cli

// One PASS/FAIL/SKIPPED line per acceptance criterion. Exit status is
// nonzero iff any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../generators.hpp"
#include "../oracles.hpp"
#include "bnfourier/analysis.hpp"
#include "bnfourier/baseline.hpp"
#include "bnfourier/collapse.hpp"
#include "bnfourier/expr.hpp"
#include "bnfourier/measures.hpp"
#include "bnfourier/network.hpp"
#include "cli.hpp"

using namespace bnf;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

enum class Status { pass, fail, skipped };

struct Outcome {
  Status status = Status::pass;
  std::string detail;
};

class Recorder {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {Status::pass, summary};
    return {Status::fail, std::to_string(failures_) + " failed check(s): " + notes_};
  }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

BoolFn fn(const char* text) { return truth_table(parse_expression(text)); }

BoolFn parity(unsigned n) {
  return BoolFn::tabulate(default_labels(n), [n](std::uint64_t x) { return (n - std::popcount(x)) % 2 == 0; });
}

Outcome worked_examples() {
  Recorder r;
  const auto t0 = Clock::now();
  const Spectrum and2 = transform(fn("x1 AND x2"), ProductDist::uniform(2));
  const Spectrum par2 = transform(parity(2), ProductDist::uniform(2));
  const double elapsed = seconds_since(t0);
  const double want_and[] = {-0.5, 0.5, 0.5, 0.5};
  const double want_par[] = {0.0, 0.0, 0.0, 1.0};
  for (std::uint64_t s = 0; s < 4; ++s) {
    r.require(std::abs(and2.at(s) - want_and[s]) <= 1e-12, "AND2 coefficient " + std::to_string(s));
    r.require(std::abs(par2.at(s) - want_par[s]) <= 1e-12, "PARITY2 coefficient " + std::to_string(s));
  }
  r.require(elapsed < 1e-3, "runtime " + fmt(elapsed) + " s");
  return r.outcome("runtime " + fmt(elapsed * 1e6) + " us");
}

Outcome sensitivity_constants() {
  Recorder r;
  const std::pair<BoolFn, double> cases[] = {
      {fn("x1 AND x2"), 1.0}, {parity(2), 2.0}, {fn("x1 AND x2 AND x3"), 0.75}, {parity(3), 3.0}};
  std::string got;
  for (const auto& [f, want] : cases) {
    const double as = avg_sensitivity(f, ProductDist::uniform(f.arity()));
    r.require(std::abs(as - want) <= 1e-12, "AS=" + fmt(as) + " want " + fmt(want));
    got += (got.empty() ? "" : ", ") + fmt(as);
  }
  return r.outcome("AS = " + got);
}

Outcome identity_suite() {
  Recorder r;
  std::mt19937_64 rng(20240611);
  const std::size_t instances = 10000;
  const auto t0 = Clock::now();
  for (std::size_t t = 0; t < instances; ++t) {
    const unsigned n = static_cast<unsigned>(rng() % 9);
    BoolFn f = oracle::random_fn(n, rng);
    if (t % 3 == 0) {
      const std::uint64_t keep = rng() & SubsetMask::full(n).bits;
      const BoolFn g = f;
      f = BoolFn::tabulate(default_labels(n), [&](std::uint64_t x) { return g.bit(x & keep); });
    }
    const ProductDist d = oracle::random_dist(n, rng);
    const SubsetMask a{rng() & SubsetMask::full(n).bits};
    const Spectrum s = transform(f, d);

    r.require(std::abs(s.weight() - 1.0) <= 1e-9, "Parseval");
    const double ce = cond_entropy(f, d, a);
    r.require(std::abs(ce - oracle::cond_entropy(f, d, a.bits)) <= 1e-9, "spectral conditional entropy");
    const auto b = entropy_bounds(f, d, a);
    r.require(b.lower <= ce + 1e-9 && ce <= b.upper + 1e-9, "entropy sandwich");
    if (!a.is_empty()) {
      const auto ib = mi_influence_bound_check(f, d, a);
      r.require(ib.lhs >= ib.rhs - 1e-9, "influence bound");
    }
    r.require(independence_test(s, a) == oracle::factorizes(f, d, a.bits), "independence criterion");
    const double h = oracle::entropy(f, d);
    double singles = 0.0;
    for (unsigned i = 0; i < n; ++i) {
      const auto ie = influence_entropy_identity(f, d, i);
      r.require(std::abs(ie.influence - ie.ratio) <= 1e-9, "influence-entropy identity");
      const double mi = mi_from_coefficients(s.mean(), s[SubsetMask::single(i)], d.p(i));
      r.require(std::abs(mi - oracle::mutual_information(f, d, std::uint64_t{1} << i)) <= 1e-9,
                "single-variable MI from coefficients");
      singles += mi;
    }
    r.require(singles <= h + 1e-9 || n == 0, "chain bound");
  }
  const double elapsed = seconds_since(t0);
  r.require(elapsed < 60.0, "runtime " + fmt(elapsed) + " s");
  return r.outcome(std::to_string(instances) + " instances in " + fmt(elapsed) + " s");
}

Outcome unate_suite() {
  Recorder r;
  std::mt19937_64 rng(99173);
  std::uniform_real_distribution<double> w(-5.0, 5.0);
  const std::size_t instances = 1000;
  for (std::size_t t = 0; t < instances; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 8);
    std::vector<double> weights(n);
    for (auto& v : weights) v = w(rng);
    const double theta = 0.5 * w(rng);
    const BoolFn f = BoolFn::tabulate(default_labels(n), [&](std::uint64_t x) {
      double acc = 0.0;
      for (unsigned i = 0; i < n; ++i) acc += weights[i] * oracle::sign_of(x, i);
      return acc > theta;
    });
    const ProductDist d = oracle::random_dist(n, rng);
    const Spectrum s = transform(f, d);
    const auto rel = relevant_variables(f);
    r.require(unateness(f).is_unate, "threshold function unate");
    for (unsigned i = 0; i < n; ++i) {
      const double infl = oracle::influence(f, d, i);
      const double a = weights[i] >= 0 ? 1.0 : -1.0;
      const double predicted = a * d.sigma(i) * infl;
      r.require(std::abs(s[SubsetMask::single(i)] - predicted) <= 1e-9, "singleton coefficient relation");
      const double mi = oracle::mutual_information(f, d, std::uint64_t{1} << i);
      if (rel.contains(i)) r.require(mi > 1e-12, "relevant variable carries information");
      r.require(std::abs(mi_from_coefficients(s.mean(), predicted, d.p(i)) - mi) <= 1e-9, "MI via influence");
    }
  }
  return r.outcome(std::to_string(instances) + " threshold functions");
}

std::optional<fs::path> ecoli_fixture() {
  if (const char* env = std::getenv("BNF_ECOLI_FIXTURE"); env && *env) {
    if (fs::is_regular_file(env)) return fs::path(env);
    return std::nullopt;
  }
  const fs::path local = fs::path(BNF_TEST_DATA) / "ecoli.bnet";
  if (fs::is_regular_file(local)) return local;
  return std::nullopt;
}

Outcome collapse_soundness(const std::optional<fs::path>& fixture) {
  Recorder r;
  std::mt19937_64 rng(5150);
  const std::size_t networks = 500;
  for (std::size_t t = 0; t < networks; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
    const unsigned m = 1 + static_cast<unsigned>(rng() % 20);
    const Network net = parse_network(gen::layered_network(rng, n, m, 1 + rng() % 4));
    const CollapsedNetwork c = collapse(net);
    std::map<std::string, const CollapsedNode*> by_name;
    for (const auto& node : c.nodes) by_name[node.name] = &node;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      std::vector<bool> in(n);
      for (unsigned j = 0; j < n; ++j) in[j] = (x >> j) & 1u;
      const auto layered = evaluate_network(net, in);
      for (std::size_t k = 0; k < layered.size(); ++k) {
        const auto& node = *by_name.at(net.definitions()[k].name);
        std::uint64_t local = 0;
        for (std::size_t q = 0; q < node.inputs.size(); ++q) local |= std::uint64_t{in[node.inputs[q]]} << q;
        r.require(node.fn.bit(local) == layered[k], "collapsed value of " + node.name);
      }
    }
  }
  const auto source = fixture ? load_network(*fixture)
                              : parse_network(std::string("arca = fnr AND NOT oxyr\n") +
                                              "mara = ((NOT arca OR NOT fnr) OR oxyr OR salicylate)\n");
  const CollapsedNetwork mara = collapse(source);
  bool mara_on = false;
  std::string mara_fn;
  for (const auto& [name, value] : mara.constants) mara_on = mara_on || (name == "mara" && value);
  for (const auto& node : mara.nodes) {
    if (node.name != "mara" || node.is_constant()) continue;
    mara_fn = " (collapses to table " + node.fn.to_hex() + " over";
    for (const auto& l : node.fn.labels()) mara_fn += " " + l;
    mara_fn += ")";
  }
  const char* where = fixture ? "E. coli fixture" : "quoted definitions";
  r.require(mara_on, std::string("mara = 1 on ") + where + mara_fn);
  const auto non_effective = effective_inputs(mara).non_effective;
  r.require(std::find(non_effective.begin(), non_effective.end(), "salicylate") != non_effective.end(),
            std::string("salicylate non-effective on ") + where);
  return r.outcome(std::to_string(networks) + " networks; mara = 1 and salicylate non-effective on " + where);
}

std::string random_small_dag(std::mt19937_64& rng, unsigned n, unsigned m) {
  std::string text = "@inputs";
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i));
    text += " " + names.back();
  }
  text += "\n";
  for (unsigned k = 0; k < m; ++k) {
    const unsigned arity = 1 + static_cast<unsigned>(rng() % 4);
    std::string expr;
    for (unsigned a = 0; a < arity; ++a) {
      if (a > 0) expr += rng() % 2 ? " AND " : " OR ";
      if (rng() % 3 == 0) expr += "NOT ";
      expr += names[rng() % names.size()];
    }
    names.push_back("y" + std::to_string(k));
    text += names.back() + " = " + expr + "\n";
  }
  return text;
}

Outcome curve_bound() {
  Recorder r;
  std::mt19937_64 rng(6006);
  const std::size_t networks = 100;
  for (std::size_t t = 0; t < networks; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 10);
    const unsigned m = 1 + static_cast<unsigned>(rng() % 6);
    const Network net = parse_network(random_small_dag(rng, n, m));
    const CollapsedNetwork c = collapse(net);
    const ProductDist d = t % 2 ? ProductDist::uniform(n) : oracle::random_dist(n, rng);
    const auto ranking = determinative_power(c, d);
    const auto curve = uncertainty_curve(c, d, ranking.tau, n);
    for (std::size_t l = 0; l <= n; ++l) {
      const std::vector<std::size_t> given(ranking.tau.begin(), ranking.tau.begin() + static_cast<std::ptrdiff_t>(l));
      const double joint = oracle::network_cond_entropy(net, d, given);
      r.require(joint <= curve.points[l].value + 1e-9, "H(Y|X_tau) <= A(l)");
      if (l > 0) r.require(curve.points[l].value <= curve.points[l - 1].value, "A(l) non-increasing");
    }
  }
  return r.outcome(std::to_string(networks) + " networks");
}

Outcome ecoli_reproduction(const std::optional<fs::path>& fixture) {
  if (!fixture) return {Status::skipped, "E. coli fixture absent (set BNF_ECOLI_FIXTURE or add tests/data/ecoli.bnet)"};
  Recorder r;
  const auto t0 = Clock::now();
  const Network net = load_network(*fixture);
  const CollapsedNetwork c = collapse(net);
  const ProductDist d = ProductDist::uniform(static_cast<unsigned>(c.inputs.size()));
  const auto part = effective_inputs(c);
  r.require(part.effective.size() == 145, "effective inputs " + std::to_string(part.effective.size()));
  r.require(net.definitions().size() == 653, "non-input nodes " + std::to_string(net.definitions().size()));
  for (const auto& lf : local_functions(net)) r.require(unateness(lf.fn).is_unate, lf.name + " not unate");
  for (const auto& node : c.nodes) r.require(node.inputs.size() <= 8, node.name + " has support > 8");
  const std::pair<const char*, std::size_t> degrees[] = {{"glc-d_xt", 99}, {"glcn_xt>0", 93}, {"o2_xt", 73}};
  for (const auto& [name, want] : degrees) {
    const bool known = net.contains(name);
    r.require(known, std::string(name) + " missing");
    if (known) {
      const auto got = out_degree(net, name);
      r.require(got == want, std::string("out-degree ") + name + " = " + std::to_string(got));
    }
  }
  const auto ranking = determinative_power(c, d);
  const std::tuple<const char*, double, double> dvals[] = {
      {"o2_xt", 37.0, 0.5}, {"leu-l_xt", 20.9, 0.1}, {"glc-d_xt", 19.3, 0.1}, {"glcn_xt>0", 17.0, 0.5}};
  std::string summary;
  for (const auto& [name, want, tol] : dvals) {
    const auto it = std::find(c.inputs.begin(), c.inputs.end(), name);
    if (it == c.inputs.end()) {
      r.require(false, std::string(name) + " not an input");
      continue;
    }
    const double got = ranking.d_values[static_cast<std::size_t>(it - c.inputs.begin())];
    r.require(std::abs(got - want) <= tol, std::string("D(") + name + ") = " + fmt(got));
    summary += std::string(summary.empty() ? "" : ", ") + "D(" + name + ")=" + fmt(got);
  }
  for (const auto& rec : sensitivity_scatter(c, d)) {
    r.require(rec.avg_sensitivity >= 4.0 * rec.prob_one * (1.0 - rec.prob_one) - 1e-9, rec.name + " below 4p(1-p)");
  }
  (void)uncertainty_curve(c, d, ranking.tau, c.inputs.size());
  const double elapsed = seconds_since(t0);
  r.require(elapsed < 300.0, "runtime " + fmt(elapsed) + " s");
  return r.outcome(summary + "; " + fmt(elapsed) + " s");
}

Outcome ecoli_baselines(const std::optional<fs::path>& fixture) {
  if (!fixture) return {Status::skipped, "E. coli fixture absent (set BNF_ECOLI_FIXTURE or add tests/data/ecoli.bnet)"};
  Recorder r;
  const Network net = load_network(*fixture);
  const CollapsedNetwork c = collapse(net);
  const ProductDist d = ProductDist::uniform(static_cast<unsigned>(c.inputs.size()));
  const auto ranking = determinative_power(c, d);
  const std::size_t L = c.inputs.size();
  const auto curve = uncertainty_curve(c, d, ranking.tau, L);
  std::string summary;
  for (auto mode : {BaselineMode::exchange_random, BaselineMode::exchange_unate, BaselineMode::random_topology_random,
                    BaselineMode::random_topology_unate}) {
    BaselineSpec spec;
    spec.mode = mode;
    spec.trials = 25;
    spec.seed = 2009;
    const auto b = baseline_curves(net, spec, d, L);
    std::size_t below = 0;
    for (std::size_t l = 0; l <= L; ++l) below += b.mean.points[l].value < curve.points[l].value - 1e-9 ? 1 : 0;
    r.require(below == 0, std::string(to_string(mode)) + " below the network at " + std::to_string(below) + " l");
    summary += std::string(summary.empty() ? "" : ", ") + std::string(to_string(mode)) + " A(1) mean " +
               fmt(b.mean.points[std::min<std::size_t>(1, L)].value);
  }
  return r.outcome("network A(1) " + fmt(curve.points[std::min<std::size_t>(1, L)].value) + "; " + summary);
}

Outcome performance() {
  Recorder r;
  std::mt19937_64 rng(909);
  const BoolFn big = oracle::random_fn(20, rng);
  const ProductDist d20 = oracle::random_dist(20, rng);
  const auto t0 = Clock::now();
  const Spectrum s = transform(big, d20);
  const double elapsed = seconds_since(t0);
  r.require(elapsed < 2.0, "n=20 transform " + fmt(elapsed) + " s");
  r.require(std::abs(s.weight() - 1.0) < 1e-9, "n=20 Parseval");

  const BoolFn f = oracle::random_fn(10, rng);
  const ProductDist d = oracle::random_dist(10, rng);
  const Spectrum fast = transform(f, d);
  const auto naive = oracle::naive_transform(f, d);
  double worst = 0.0;
  for (std::uint64_t m = 0; m < f.size(); ++m) worst = std::max(worst, std::abs(fast.at(m) - naive[m]));
  r.require(worst <= 1e-12, "naive vs fast max error " + fmt(worst));
  return r.outcome("n=20 in " + fmt(elapsed) + " s; n=10 max error " + fmt(worst));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Recorder r;
  const fs::path root = fs::temp_directory_path() / "bnfourier-acceptance";
  fs::remove_all(root);
  const std::string net = std::string(BNF_TEST_DATA) + "/toy.bnet";
  std::vector<std::string> outputs;
  for (const char* sub : {"run1", "run2"}) {
    const std::string out = (root / sub).string();
    const char* argv[] = {"bnfourier", "analyze", net.c_str(), "--out", out.c_str(), "--seed", "42",
                          "--baseline", "random-topology-unate", "--trials", "25"};
    std::ostringstream sink, err;
    const int code = cli::run(static_cast<int>(std::size(argv)), argv, sink, err);
    r.require(code == 0, "analyze exit " + std::to_string(code) + " " + err.str());
    outputs.push_back(slurp(root / sub / "report.json") + slurp(root / sub / "curve.csv") +
                      slurp(root / sub / "scatter.csv"));
  }
  r.require(!outputs[0].empty() && outputs[0] == outputs[1], "reports differ");
  fs::remove_all(root);
  return r.outcome("report.json, curve.csv, scatter.csv byte-identical");
}

}  // namespace

int main() {
  const auto fixture = ecoli_fixture();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"worked-example spectra", worked_examples},
      {"sensitivity constants", sensitivity_constants},
      {"identity suite", identity_suite},
      {"unate suite", unate_suite},
      {"collapse soundness", [&] { return collapse_soundness(fixture); }},
      {"A(l) bound", curve_bound},
      {"E. coli reproduction", [&] { return ecoli_reproduction(fixture); }},
      {"E. coli baselines", [&] { return ecoli_baselines(fixture); }},
      {"performance", performance},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {Status::fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::pass ? "PASS" : o.status == Status::fail ? "FAIL" : "SKIPPED";
    failed += o.status == Status::fail;
    std::cout << "criterion " << k + 1 << " " << tag << "  " << criteria[k].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <string>

#include "../oracles.hpp"
#include "bnfourier/analysis.hpp"
#include "bnfourier/baseline.hpp"
#include "bnfourier/collapse.hpp"
#include "bnfourier/error.hpp"
#include "bnfourier/expr.hpp"
#include "bnfourier/measures.hpp"
#include "bnfourier/network.hpp"
#include "bnfourier/report.hpp"

using namespace bnf;

namespace {

std::string random_dag(std::mt19937_64& rng, unsigned n, unsigned m) {
  std::string text = "@inputs";
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i));
    text += " " + names.back();
  }
  text += "\n";
  for (unsigned k = 0; k < m; ++k) {
    const unsigned arity = 1 + static_cast<unsigned>(rng() % 3);
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

}  // namespace

TEST_CASE("determinative power examples") {
  const CollapsedNetwork copies = collapse(parse_network("a = x1\nb = x1\nc = x1 AND x2\nd = x3 OR NOT x3\n"));
  const auto r = determinative_power(copies, ProductDist::uniform(3));
  const double and_mi = oracle::h2(0.25) - 0.5;
  CHECK(r.d_values[0] == doctest::Approx(2.0 + and_mi));
  CHECK(r.d_values[1] == doctest::Approx(and_mi));
  CHECK(r.d_values[2] == 0.0);
  CHECK(r.tau == std::vector<std::size_t>{0, 1, 2});

  const CollapsedNetwork dict = collapse(parse_network("a = x\nb = x\nc = x\n"));
  CHECK(determinative_power(dict, ProductDist::uniform(1)).d_values[0] == doctest::Approx(3.0));
  CHECK(determinative_power(dict, ProductDist({0.2})).d_values[0] == doctest::Approx(3.0 * oracle::h2(0.2)));

  const CollapsedNetwork tie = collapse(parse_network("a = q\nb = p\n"));
  const auto rt = determinative_power(tie, ProductDist::uniform(2));
  CHECK(tie.inputs[rt.tau[0]] == "p");
  CHECK_THROWS_AS(determinative_power(tie, ProductDist::uniform(3)), InputError);
}

TEST_CASE("uncertainty curve endpoints and validation") {
  const CollapsedNetwork c = collapse(parse_network("y = x1 AND x2\nz = x1 OR x3\nk = 1\n"));
  const ProductDist d = ProductDist::uniform(3);
  const auto r = determinative_power(c, d);
  const auto curve = uncertainty_curve(c, d, r.tau, 3);
  REQUIRE(curve.points.size() == 4);
  CHECK(curve.points[0].l == 0);
  CHECK(curve.points[0].value == doctest::Approx(2.0 * oracle::h2(0.25)));
  CHECK(curve.points[0].value <= 2.0);
  CHECK(std::abs(curve.points[3].value) < 1e-12);
  CHECK_THROWS_AS(uncertainty_curve(c, d, {0, 0, 1}, 3), InputError);
  CHECK_THROWS_AS(uncertainty_curve(c, d, {0, 1}, 3), InputError);
  CHECK_THROWS_AS(uncertainty_curve(c, d, {0, 7}, 2), InputError);
}

TEST_CASE("property: A(l) bounds the joint conditional entropy and is non-increasing") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 60; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 8);
    const unsigned m = 1 + static_cast<unsigned>(rng() % 6);
    const Network net = parse_network(random_dag(rng, n, m));
    const CollapsedNetwork c = collapse(net);
    const ProductDist d = oracle::random_dist(n, rng);
    const auto r = determinative_power(c, d);
    const auto curve = uncertainty_curve(c, d, r.tau, n);
    for (std::size_t l = 0; l <= n; ++l) {
      const std::vector<std::size_t> given(r.tau.begin(), r.tau.begin() + static_cast<std::ptrdiff_t>(l));
      const double joint = oracle::network_cond_entropy(net, d, given);
      CHECK(joint <= curve.points[l].value + 1e-9);
      CHECK(std::abs(exact_conditional_entropy(c, d, given) - joint) < 1e-9);
      if (l > 0) CHECK(curve.points[l].value <= curve.points[l - 1].value + 1e-12);
      double sum = 0.0;
      std::uint64_t gmask = 0;
      for (auto j : given) gmask |= std::uint64_t{1} << j;
      for (const auto& node : c.nodes) {
        if (node.is_constant()) continue;
        std::uint64_t local = 0;
        for (std::size_t k = 0; k < node.inputs.size(); ++k) {
          if ((gmask >> node.inputs[k]) & 1u) local |= std::uint64_t{1} << k;
        }
        sum += oracle::cond_entropy(node.fn, d.marginal(node.inputs), local);
      }
      CHECK(std::abs(sum - curve.points[l].value) < 1e-9);
    }
  }
}

TEST_CASE("sensitivity scatter") {
  const CollapsedNetwork c = collapse(parse_network(
      "par = (a AND NOT b AND NOT c) OR (NOT a AND b AND NOT c) OR (NOT a AND NOT b AND c) OR (a AND b AND c)\n"
      "k = a OR NOT a\n"));
  const auto recs = sensitivity_scatter(c, ProductDist::uniform(3));
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].name == "par");
  CHECK(recs[0].in_degree == 3);
  CHECK(recs[0].avg_sensitivity == doctest::Approx(3.0));
  CHECK(recs[0].prob_one == doctest::Approx(0.5));
  CHECK(recs[0].poincare_lower == doctest::Approx(1.0));
  CHECK(recs[1].avg_sensitivity == 0.0);
  CHECK(recs[1].prob_one == 1.0);
  CHECK(recs[1].poincare_lower == 0.0);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 6);
    const CollapsedNetwork r = collapse(parse_network(random_dag(rng, n, 5)));
    const ProductDist d = oracle::random_dist(n, rng);
    for (const auto& rec : sensitivity_scatter(r, d)) {
      CHECK(rec.avg_sensitivity >= rec.poincare_lower - 1e-9);
      CHECK(rec.prob_one >= 0.0);
      CHECK(rec.prob_one <= 1.0);
    }
  }
}

TEST_CASE("random function samplers") {
  Rng rng(5);
  const BoolFn f = sample_random_function(4, rng);
  CHECK(f.arity() == 4);
  CHECK(sample_random_function(6, 42) == sample_random_function(6, 42));
  CHECK_THROWS_AS(sample_random_function(12, 1, 10), CapExceeded);
  for (unsigned k = 0; k <= 7; ++k) {
    for (std::uint64_t s = 0; s < 10; ++s) CHECK(unateness(sample_random_unate(k, s)).is_unate);
  }
  CHECK(sample_random_unate(6, 9) == sample_random_unate(6, 9));

  std::map<std::string, int> counts;
  Rng urng(12);
  for (int t = 0; t < 14000; ++t) counts[sample_random_unate(2, urng).to_hex()]++;
  CHECK(counts.size() == 14);
  for (const auto& [hex, count] : counts) CHECK(std::abs(count - 1000) < 150);
}

TEST_CASE("baseline modes and determinism") {
  CHECK(parse_baseline_mode("exchange-unate") == BaselineMode::exchange_unate);
  CHECK(to_string(BaselineMode::random_topology_random) == "random-topology-random");
  CHECK_THROWS_AS(parse_baseline_mode("shuffle"), InputError);
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));

  const Network net = parse_network("y = a AND b\nz = y OR c\nw = NOT a OR z OR d\n");
  const ProductDist d = ProductDist::uniform(4);
  for (auto mode : {BaselineMode::exchange_random, BaselineMode::exchange_unate, BaselineMode::random_topology_random,
                    BaselineMode::random_topology_unate}) {
    BaselineSpec spec;
    spec.mode = mode;
    spec.trials = 6;
    spec.seed = 11;
    const auto one = baseline_curves(net, spec, d, 4);
    spec.threads = 3;
    const auto three = baseline_curves(net, spec, d, 4);
    REQUIRE(one.mean.points.size() == 5);
    REQUIRE(one.trials.size() == 6);
    for (std::size_t l = 0; l <= 4; ++l) {
      CHECK(one.mean.points[l].value == three.mean.points[l].value);
      CHECK(one.stddev[l] == three.stddev[l]);
      CHECK(one.stddev[l] >= 0.0);
    }
    CHECK(std::abs(one.mean.points[4].value) < 1e-12);
    CHECK(one.unate_exact);
  }
}

TEST_CASE("report formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(37.0) == "37");
  CHECK(round_number(1.0 / 3.0) == 0.333333333333);
  CHECK(subset_label(SubsetMask::of({0, 2}), {"a", "b", "c"}) == "{a,c}");
  CHECK(subset_label(SubsetMask{}, {"a"}) == "{}");
  CHECK(fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");

  UncertaintyCurve curve{{{0, 1.5}, {1, 0.25}}};
  CHECK(curve_csv(curve) == "l,A_l\n0,1.5\n1,0.25\n");
  BaselineResult b;
  b.mean = UncertaintyCurve{{{0, 2.0}, {1, 1.0}}};
  b.stddev = {0.5, 0.0};
  CHECK(curve_csv(curve, &b) == "l,A_l,mean,stddev\n0,1.5,2,0.5\n1,0.25,1,0\n");
  const std::vector<SensitivityRecord> recs{{"n1", 2, 1.0, 0.25, 0.75}};
  CHECK(scatter_csv(recs) == "name,in_degree,avg_sensitivity,prob_one,poincare_lower\nn1,2,1,0.25,0.75\n");
  CHECK(curve_svg(curve).find("<svg") != std::string::npos);
  CHECK(scatter_svg(recs).find("<svg") != std::string::npos);

  const auto rows = spectrum_rows(transform(truth_table(parse_expression("x1 AND x2 AND x3")), ProductDist::uniform(3)));
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].subset.bits == 0);
  CHECK(rows[1].subset.bits == 1);
  CHECK(rows[3].subset.bits == 4);
  CHECK(rows[4].subset.bits == 3);
  CHECK(rows[7].subset.bits == 7);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "bnfourier/analysis.hpp"
#include "bnfourier/collapse.hpp"
#include "bnfourier/error.hpp"
#include "bnfourier/expr.hpp"
#include "bnfourier/measures.hpp"
#include "bnfourier/network.hpp"
#include "bnfourier/selftest.hpp"
#include "bnfourier/spectrum.hpp"

namespace py = pybind11;
using namespace bnf;

namespace {

SubsetMask mask_of(const BoolFn& f, const std::vector<std::string>& names) {
  SubsetMask m;
  for (const auto& name : names) {
    const auto it = std::find(f.labels().begin(), f.labels().end(), name);
    if (it == f.labels().end()) throw InputError("unknown variable '" + name + "'");
    m.bits |= std::uint64_t{1} << (it - f.labels().begin());
  }
  return m;
}

ProductDist dist_or_uniform(const BoolFn& f, const py::object& d) {
  return d.is_none() ? ProductDist::uniform(f.arity()) : d.cast<ProductDist>();
}

unsigned label_index(const BoolFn& f, const std::string& name) {
  const auto it = std::find(f.labels().begin(), f.labels().end(), name);
  if (it == f.labels().end()) throw InputError("unknown variable '" + name + "'");
  return static_cast<unsigned>(it - f.labels().begin());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fourier and information measures of Boolean functions";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", input_error.ptr());

  py::class_<ProductDist>(m, "ProductDist")
      .def(py::init<std::vector<double>>(), py::arg("p"))
      .def_static("uniform", &ProductDist::uniform)
      .def_property_readonly("arity", &ProductDist::arity)
      .def_property_readonly("p", [](const ProductDist& d) {
        return std::vector<double>(d.probs().begin(), d.probs().end());
      })
      .def("mu", &ProductDist::mu)
      .def("sigma", &ProductDist::sigma);

  py::class_<BoolFn>(m, "BoolFn")
      .def_static("from_hex", [](const std::string& hex, std::vector<std::string> labels) {
        return BoolFn::from_hex(std::move(labels), hex);
      }, py::arg("hex"), py::arg("labels"))
      .def_property_readonly("arity", &BoolFn::arity)
      .def_property_readonly("labels", &BoolFn::labels)
      .def("to_hex", &BoolFn::to_hex)
      .def("is_constant", &BoolFn::is_constant)
      .def("__call__", [](const BoolFn& f, std::vector<int> signs) { return f.evaluate(signs); })
      .def("__eq__", [](const BoolFn& a, const BoolFn& b) { return a == b; })
      .def("__repr__", [](const BoolFn& f) { return "BoolFn(arity=" + std::to_string(f.arity()) + ", hex=" + f.to_hex() + ")"; });

  m.def("truth_table", [](const std::string& expr, py::object vars) {
    const Expr e = parse_expression(expr);
    if (vars.is_none()) return truth_table(e);
    return truth_table(e, vars.cast<std::vector<std::string>>());
  }, py::arg("expr"), py::arg("vars") = py::none(), "Truth table of a DSL expression.");

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly("arity", &Spectrum::arity)
      .def_property_readonly("coefficients", [](const Spectrum& s) {
        return std::vector<double>(s.coefficients().begin(), s.coefficients().end());
      })
      .def("__getitem__", [](const Spectrum& s, std::uint64_t mask) {
        if (mask >= s.coefficients().size()) throw py::index_error("mask out of range");
        return s.at(mask);
      })
      .def("mean", &Spectrum::mean)
      .def("weight", &Spectrum::weight);

  m.def("transform", [](const BoolFn& f, py::object d) { return transform(f, dist_or_uniform(f, d)); },
        py::arg("f"), py::arg("d") = py::none(), "Fourier coefficients indexed by subset bitmask.");
  m.def("entropy", [](const BoolFn& f, py::object d) { return entropy(f, dist_or_uniform(f, d)); },
        py::arg("f"), py::arg("d") = py::none());
  m.def("cond_entropy", [](const BoolFn& f, std::vector<std::string> given, py::object d) {
    return cond_entropy(f, dist_or_uniform(f, d), mask_of(f, given));
  }, py::arg("f"), py::arg("given"), py::arg("d") = py::none());
  m.def("mutual_information", [](const BoolFn& f, std::vector<std::string> given, py::object d) {
    return mutual_information(f, dist_or_uniform(f, d), mask_of(f, given));
  }, py::arg("f"), py::arg("given"), py::arg("d") = py::none());
  m.def("entropy_bounds", [](const BoolFn& f, std::vector<std::string> given, py::object d) {
    const auto b = entropy_bounds(f, dist_or_uniform(f, d), mask_of(f, given));
    return py::make_tuple(b.lower, b.exact, b.upper);
  }, py::arg("f"), py::arg("given"), py::arg("d") = py::none(), "(lower, exact, upper) for H(f | X_given).");
  m.def("influence", [](const BoolFn& f, const std::string& var, py::object d) {
    return influence(f, dist_or_uniform(f, d), label_index(f, var));
  }, py::arg("f"), py::arg("var"), py::arg("d") = py::none());
  m.def("avg_sensitivity", [](const BoolFn& f, py::object d) { return avg_sensitivity(f, dist_or_uniform(f, d)); },
        py::arg("f"), py::arg("d") = py::none());
  m.def("unateness", [](const BoolFn& f) {
    const auto profile = unateness(f);
    std::vector<int> pol;
    for (auto p : profile.polarity) pol.push_back(static_cast<int>(p));
    return py::make_tuple(profile.is_unate, pol);
  }, py::arg("f"), "(is_unate, polarity per variable: -1, 0, +1, or 2 for binate).");

  py::class_<Network>(m, "Network")
      .def_property_readonly("inputs", &Network::inputs)
      .def_property_readonly("names", [](const Network& n) {
        std::vector<std::string> out;
        for (const auto& def : n.definitions()) out.push_back(def.name);
        return out;
      })
      .def("__str__", [](const Network& n) { return print_network(n); });
  m.def("parse_network", [](const std::string& text) { return parse_network(text); }, py::arg("text"));

  py::class_<CollapsedNetwork>(m, "CollapsedNetwork")
      .def_readonly("inputs", &CollapsedNetwork::inputs)
      .def_readonly("constants", &CollapsedNetwork::constants)
      .def_property_readonly("nodes", [](const CollapsedNetwork& c) {
        py::dict out;
        for (const auto& node : c.nodes) out[py::str(node.name)] = node.fn;
        return out;
      })
      .def_property_readonly("non_effective_inputs", [](const CollapsedNetwork& c) {
        return effective_inputs(c).non_effective;
      });
  m.def("collapse", [](const Network& n, unsigned cap) { return collapse(n, cap); }, py::arg("network"),
        py::arg("cap") = kDefaultArityCap);

  auto net_dist = [](const CollapsedNetwork& c, const py::object& d) {
    return d.is_none() ? ProductDist::uniform(static_cast<unsigned>(c.inputs.size())) : d.cast<ProductDist>();
  };
  m.def("determinative_power", [net_dist](const CollapsedNetwork& c, py::object d) {
    const auto r = determinative_power(c, net_dist(c, d));
    py::dict values;
    for (std::size_t j = 0; j < c.inputs.size(); ++j) values[py::str(c.inputs[j])] = r.d_values[j];
    std::vector<std::string> tau;
    for (auto j : r.tau) tau.push_back(c.inputs[j]);
    return py::make_tuple(values, tau);
  }, py::arg("collapsed"), py::arg("d") = py::none(), "({input: D}, ranking by D).");
  m.def("uncertainty_curve", [net_dist](const CollapsedNetwork& c, std::vector<std::string> order, py::object d) {
    std::vector<std::size_t> idx;
    for (const auto& name : order) {
      const auto it = std::find(c.inputs.begin(), c.inputs.end(), name);
      if (it == c.inputs.end()) throw InputError("unknown input '" + name + "'");
      idx.push_back(static_cast<std::size_t>(it - c.inputs.begin()));
    }
    std::vector<double> values;
    for (const auto& p : uncertainty_curve(c, net_dist(c, d), idx, idx.size()).points) values.push_back(p.value);
    return values;
  }, py::arg("collapsed"), py::arg("order"), py::arg("d") = py::none(), "A(l) for l = 0..len(order).");
  m.def("sensitivity_scatter", [net_dist](const CollapsedNetwork& c, py::object d) {
    py::list out;
    for (const auto& r : sensitivity_scatter(c, net_dist(c, d))) {
      py::dict row;
      row["name"] = r.name;
      row["in_degree"] = r.in_degree;
      row["avg_sensitivity"] = r.avg_sensitivity;
      row["prob_one"] = r.prob_one;
      row["poincare_lower"] = r.poincare_lower;
      out.append(row);
    }
    return out;
  }, py::arg("collapsed"), py::arg("d") = py::none());

  m.def("run_selftest", [](std::uint64_t seed, std::size_t instances) {
    SelftestOptions opts;
    opts.seed = seed;
    opts.instances = instances;
    py::dict out;
    for (const auto& check : run_selftest(opts)) out[py::str(check.name)] = check.passed();
    return out;
  }, py::arg("seed") = 1, py::arg("instances") = 100, "{identity name: passed}.");
}

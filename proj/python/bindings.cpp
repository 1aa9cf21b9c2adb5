// Copyright 2026 The postdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "postdist/cli.hpp"
#include "postdist/distances.hpp"
#include "postdist/error.hpp"
#include "postdist/gallery.hpp"
#include "postdist/io.hpp"
#include "postdist/suite.hpp"
#include "postdist/theorems.hpp"

namespace py = pybind11;
using namespace postdist;

namespace {

OptimizerConfig make_config(std::size_t restarts, std::size_t max_iterations, double tol,
                            std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.max_iterations = max_iterations;
  cfg.value_tolerance = tol;
  cfg.master_seed = seed;
  return cfg;
}

py::object witness_to_python(const Witness& w) {
  if (const auto* p = std::get_if<PureState>(&w)) return py::cast(ComplexVector(p->amplitudes()));
  if (const auto* r = std::get_if<DensityMatrix>(&w)) return py::cast(r->matrix());
  const auto& pair = std::get<RankOnePair>(w);
  return py::make_tuple(ComplexVector(pair.left.amplitudes()),
                        ComplexVector(pair.right.amplitudes()));
}

py::dict report_to_python(const TheoremReport& r) {
  py::dict d;
  d["statement_id"] = r.statement_id;
  d["inputs"] = r.inputs;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["slack"] = r.slack;
  d["relation"] = std::string(relation_symbol(r.relation));
  d["pass"] = r.pass;
  py::list side;
  for (const Condition& c : r.side_conditions) {
    py::dict s;
    s["name"] = c.name;
    s["lhs"] = c.lhs;
    s["rhs"] = c.rhs;
    s["pass"] = c.pass;
    side.append(s);
  }
  d["side_conditions"] = side;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_postdist, m) {
  m.doc() = "Distances between postselected quantum channels";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  auto validity = py::register_exception<ValidityError>(m, "ValidityError", base.ptr());
  py::register_exception<NumericalDegeneracyError>(m, "NumericalDegeneracyError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  // Subclasses of ValidityError surface as ValidityError.
  (void)validity;

  py::class_<Channel>(m, "Channel")
      .def(py::init<std::size_t, std::size_t, std::vector<ComplexMatrix>, std::string>(),
           py::arg("dim_in"), py::arg("dim_out"), py::arg("kraus"), py::arg("name") = "")
      .def_property_readonly("dim_in", &Channel::dim_in)
      .def_property_readonly("dim_out", &Channel::dim_out)
      .def_property_readonly("rank", &Channel::rank)
      .def_property_readonly("name", &Channel::name)
      .def_property_readonly("kraus", &Channel::kraus)
      .def_property_readonly("effect", &Channel::effect)
      .def("renamed", &Channel::renamed)
      .def("apply", [](const Channel& ch, const ComplexMatrix& x) { return postdist::apply(ch, x); })
      .def("__repr__", [](const Channel& ch) {
        return "<Channel '" + ch.name() + "' " + std::to_string(ch.dim_in()) + "->" +
               std::to_string(ch.dim_out()) + " rank " + std::to_string(ch.rank()) + ">";
      });

  m.def("is_trace_preserving", &is_trace_preserving);
  m.def("validate", [](const Channel& ch, bool post) {
    const ValidityReport r = validate(ch, post);
    py::dict d;
    d["effect_min"] = r.effect_min;
    d["effect_max"] = r.effect_max;
    d["trace_nonincreasing"] = r.trace_nonincreasing;
    d["trace_preserving"] = r.trace_preserving;
    d["postselection_valid"] = r.postselection_valid;
    return d;
  }, py::arg("channel"), py::arg("require_postselection") = false);
  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("scale", &scale, py::arg("channel"), py::arg("c"),
        py::arg("assert_trace_nonincreasing") = false);
  m.def("tensor_with_identity", &tensor_with_identity, py::arg("channel"), py::arg("anc_dim"),
        py::arg("cap") = kDefaultDimensionCap);
  m.def("isometry_channel", &isometry_channel, py::arg("u"), py::arg("name") = "isometry");
  m.def("identity_channel", &identity_channel);
  m.def("random_channel", [](std::size_t din, std::size_t dout, std::size_t rank,
                             std::uint64_t seed, bool postselection) {
    return random_channel(din, dout, rank, seed,
                          postselection ? RandomKind::kPostselection : RandomKind::kCptp);
  }, py::arg("dim_in"), py::arg("dim_out"), py::arg("rank"), py::arg("seed"),
        py::arg("postselection") = false);

  m.def("nonconvexity_pair", &nonconvexity_pair);
  m.def("contractivity_triple", [](double eps) {
    ContractivityTriple t = contractivity_triple(eps);
    return py::make_tuple(t.psi, t.phi, t.tau);
  });
  m.def("conversion_pair", &conversion_pair);
  m.def("teleportation", &teleportation);
  m.def("dephasing", &dephasing);

  m.def("channel_to_json", &channel_to_json);
  m.def("channel_from_json", [](const std::string& s) { return channel_from_json(s); });

  m.def("objective_f", [](const Channel& psi, const Channel& phi, const ComplexMatrix& rho) {
    return objective_f(psi, phi, DensityMatrix(rho));
  });
  m.def("diamond_norm_channel", &diamond_norm_channel);
  m.def("measures", [] {
    std::vector<std::string> out;
    for (Measure x : {Measure::kOperationalTrace, Measure::kTrace, Measure::kDiamond,
                      Measure::kHatTrace, Measure::kHatDiamond}) {
      out.emplace_back(measure_name(x));
    }
    return out;
  });
  m.def("distance", [](const std::string& measure, const Channel& psi, const Channel& phi,
                       std::size_t restarts, std::size_t max_iterations, double tol,
                       std::uint64_t seed) {
    const DistanceEstimate e = distance(parse_measure(measure), psi, phi,
                                        make_config(restarts, max_iterations, tol, seed));
    py::dict d;
    d["value"] = e.value;
    d["witness"] = witness_to_python(e.witness);
    d["restarts_used"] = e.restarts_used;
    d["converged"] = e.converged;
    d["measure"] = std::string(measure_name(e.measure));
    return d;
  }, py::arg("measure"), py::arg("psi"), py::arg("phi"), py::arg("restarts") = 64,
        py::arg("max_iterations") = 2000, py::arg("tol") = 1e-8, py::arg("seed") = 0);
  m.def("dense_oracle", [](const std::string& measure, const Channel& psi, const Channel& phi,
                           std::size_t samples, std::uint64_t seed) {
    return dense_oracle(parse_measure(measure), psi, phi, samples, seed);
  }, py::arg("measure"), py::arg("psi"), py::arg("phi"), py::arg("samples") = 10000,
        py::arg("seed") = 0);

  m.def("alpha_of", [](const Channel& phi, std::size_t restarts, std::uint64_t seed) {
    return alpha_of(phi, make_config(restarts, 2000, 1e-8, seed));
  }, py::arg("phi"), py::arg("restarts") = 64, py::arg("seed") = 0);
  m.def("conversion_check", [](const Channel& psi, const Channel& phi, std::size_t restarts,
                               std::uint64_t seed) {
    const ConversionResult r = conversion_check(psi, phi, make_config(restarts, 2000, 1e-8, seed));
    py::dict d;
    d["k"] = r.k;
    d["alpha"] = r.alpha;
    d["probability_spread"] = r.probability_spread;
    d["hat_distance"] = r.hat_distance;
    d["normalized_distance"] = r.normalized_distance;
    d["spread_ok"] = r.spread_ok;
    d["left_ok"] = r.left_ok;
    d["right_ok"] = r.right_ok;
    d["right_vacuous"] = r.right_vacuous;
    d["report"] = report_to_python(r.report);
    return d;
  }, py::arg("psi"), py::arg("phi"), py::arg("restarts") = 64, py::arg("seed") = 0);
  m.def("counterexample_contractivity",
        [](double eps) { return report_to_python(counterexample_contractivity(eps)); });
  m.def("counterexample_nonconvexity",
        [](double eps) { return report_to_python(counterexample_nonconvexity(eps)); });

  m.def("fig1_curve", [](double eps, std::size_t grid) {
    std::vector<std::pair<double, double>> out;
    for (const CurveRow& r : fig1_curve(eps, grid)) out.emplace_back(r.parameter, r.values[0]);
    return out;
  }, py::arg("epsilon"), py::arg("grid") = 200);
  m.def("fig2_curve", [](const std::vector<double>& eps, std::size_t grid) {
    std::vector<std::tuple<double, double, double>> out;
    for (const CurveRow& r : fig2_curve(eps, grid)) {
      out.emplace_back(r.parameter, r.values[0], r.values[1]);
    }
    return out;
  }, py::arg("epsilons") = std::vector<double>{}, py::arg("grid") = 20);

  m.def("statement_ids", &statement_ids);
  m.def("verify", [](const std::string& suite, std::uint64_t seed, std::size_t trials,
                     std::vector<std::size_t> dims) {
    SuiteConfig cfg;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.dims = std::move(dims);
    const SuiteResult r = run_suite(parse_statement_list(suite), cfg);
    py::dict d;
    d["passed"] = r.passed;
    d["failed"] = r.failed;
    d["report"] = format_suite(r);
    return d;
  }, py::arg("suite") = "all", py::arg("seed") = 0, py::arg("trials") = 10,
        py::arg("dims") = std::vector<std::size_t>{2, 3});

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "postdist");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}

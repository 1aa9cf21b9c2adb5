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


#include "postdist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "postdist/distances.hpp"
#include "postdist/error.hpp"
#include "postdist/gallery.hpp"
#include "postdist/io.hpp"
#include "postdist/suite.hpp"
#include "postdist/theorems.hpp"

namespace postdist {
namespace {

using Json = nlohmann::ordered_json;

// Values given on the command line; unset fields keep per-command defaults.
struct GlobalFlags {
  std::uint64_t seed = 0;
  std::optional<std::size_t> restarts;
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  std::vector<std::size_t> dims;
  std::optional<std::size_t> trials;
};

OptimizerConfig optimizer_from(const GlobalFlags& g, OptimizerConfig base) {
  base.master_seed = g.seed;
  if (g.restarts) base.restarts = *g.restarts;
  if (g.tol) base.value_tolerance = *g.tol;
  if (g.max_iter) base.max_iterations = *g.max_iter;
  base.check();
  return base;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

Json matrix_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json witness_json(const Witness& w) {
  Json out;
  if (const auto* p = std::get_if<PureState>(&w)) {
    out["kind"] = "pure_state";
    out["dim"] = p->dim();
    out["amplitudes"] = vector_json(p->amplitudes());
  } else if (const auto* r = std::get_if<DensityMatrix>(&w)) {
    out["kind"] = "density_matrix";
    out["dim"] = r->dim();
    out["matrix"] = matrix_json(r->matrix());
  } else {
    const auto& pair = std::get<RankOnePair>(w);
    out["kind"] = "rank_one_pair";
    out["dim"] = pair.left.dim();
    out["left"] = vector_json(pair.left.amplitudes());
    out["right"] = vector_json(pair.right.amplitudes());
  }
  return out;
}

std::string witness_summary(const Witness& w) {
  if (const auto* p = std::get_if<PureState>(&w)) {
    return "pure state, dim " + std::to_string(p->dim());
  }
  if (const auto* r = std::get_if<DensityMatrix>(&w)) {
    return "density matrix, dim " + std::to_string(r->dim());
  }
  return "pure pair, dim " + std::to_string(std::get<RankOnePair>(w).left.dim());
}

std::string csv_double(double x) { return format_double(x + 0.0); }

int cmd_dist(const GlobalFlags& g, const std::string& measure_text, const std::string& file_a,
             const std::string& file_b, const std::string& out_path, std::ostream& out) {
  const Measure m = parse_measure(measure_text);
  const OptimizerConfig cfg = optimizer_from(g, OptimizerConfig{});
  const Channel a = read_channel_file(file_a);
  const Channel b = read_channel_file(file_b);
  const DistanceEstimate est = distance(m, a, b, cfg);

  out << "measure: " << measure_name(m) << "\n"
      << "channels: " << a.name() << " vs " << b.name() << "\n"
      << "value: " << format_double(est.value) << "\n"
      << "witness: " << witness_summary(est.witness) << "\n"
      << "restarts_used: " << est.restarts_used << "\n"
      << "converged: " << (est.converged ? "true" : "false") << "\n";

  if (!out_path.empty()) {
    Json result;
    result["measure"] = std::string(measure_name(m));
    result["channel_a"] = a.name();
    result["channel_b"] = b.name();
    result["value"] = est.value;
    result["restarts_used"] = est.restarts_used;
    result["converged"] = est.converged;
    result["seed"] = cfg.master_seed;
    result["witness"] = witness_json(est.witness);
    Json doc;
    doc["result"] = std::move(result);
    write_text_file(out_path, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_verify(const GlobalFlags& g, const std::string& suite, const std::string& out_path,
               std::ostream& out) {
  const std::vector<std::string> ids = parse_statement_list(suite);
  SuiteConfig cfg;
  cfg.seed = g.seed;
  if (!g.dims.empty()) cfg.dims = g.dims;
  if (g.trials) cfg.trials = *g.trials;
  cfg.optimizer = optimizer_from(g, SuiteConfig::default_suite_optimizer());
  for (std::size_t d : cfg.dims) {
    if (d < 2 || d > 3) throw ParameterError("suite dimensions must be 2 or 3");
  }
  const SuiteResult result = run_suite(ids, cfg);
  const std::string text = format_suite(result);
  out << text;
  if (!out_path.empty()) write_text_file(out_path, text);
  return result.failed == 0 ? kExitOk : kExitFailedChecks;
}

int cmd_example(const std::string& name, double epsilon, std::size_t dim, const std::string& gate,
                const std::string& out_dir, std::ostream& out) {
  GalleryParams params;
  params.epsilon = epsilon;
  params.dim = dim;
  if (name == "isometry") params.unitary = named_gate(gate);
  const std::vector<Channel> channels = gallery(name, params);
  std::filesystem::create_directories(out_dir);
  for (const Channel& ch : channels) {
    const std::filesystem::path path = std::filesystem::path(out_dir) / (ch.name() + ".json");
    write_channel_file(path, ch);
    out << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_curve(int figure, const std::vector<double>& epsilons, std::size_t grid,
              const std::string& out_path, std::ostream& out) {
  std::string text;
  if (figure == 1) {
    if (epsilons.size() > 1) throw ParameterError("figure 1 takes a single epsilon");
    const double eps = epsilons.empty() ? 0.25 : epsilons.front();
    text = "p,f\n";
    for (const CurveRow& row : fig1_curve(eps, grid)) {
      text += csv_double(row.parameter) + "," + csv_double(row.values.at(0)) + "\n";
    }
  } else if (figure == 2) {
    text = "epsilon,before,after\n";
    for (const CurveRow& row : fig2_curve(epsilons, grid)) {
      text += csv_double(row.parameter) + "," + csv_double(row.values.at(0)) + "," +
              csv_double(row.values.at(1)) + "\n";
    }
  } else {
    throw ParameterError("figure must be 1 or 2");
  }
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances between postselected quantum channels", "postdist"};
  app.require_subcommand(1);

  GlobalFlags g;
  std::size_t restarts = 0, max_iter = 0, trials = 0;
  double tol = 0.0;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  auto* restarts_opt = app.add_option("--restarts", restarts, "optimizer restarts");
  auto* tol_opt = app.add_option("--tol", tol, "optimizer value tolerance");
  auto* iter_opt = app.add_option("--max-iter", max_iter, "iterations per local run");
  app.add_option("--dims", g.dims, "suite input dimensions, comma separated")->delimiter(',');
  auto* trials_opt = app.add_option("--trials", trials, "instances per statement");

  std::string measure, file_a, file_b, dist_out;
  auto* dist = app.add_subcommand("dist", "estimate a distance between two channel files");
  dist->fallthrough();
  dist->add_option("measure", measure, "dtrD | dtr | diamond | hat-tr | hat-diamond")->required();
  dist->add_option("A", file_a, "first channel file")->required();
  dist->add_option("B", file_b, "second channel file")->required();
  dist->add_option("--out", dist_out, "result JSON path");

  std::string suite = "all", verify_out;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->fallthrough();
  verify->add_option("--suite", suite, "all or a comma separated list of statement ids")
      ->capture_default_str();
  verify->add_option("--out", verify_out, "report path");

  std::string example_name, gate = "H", out_dir = ".";
  double example_eps = 0.25;
  std::size_t example_dim = 2;
  auto* example = app.add_subcommand("example", "write gallery channels to files");
  example->fallthrough();
  example->add_option("name", example_name, "gallery entry")->required();
  example->add_option("--epsilon", example_eps, "family parameter")->capture_default_str();
  example->add_option("--dim", example_dim, "dimension")->capture_default_str();
  example->add_option("--gate", gate, "gate for the isometry entry")->capture_default_str();
  example->add_option("--out-dir", out_dir, "output directory")->capture_default_str();

  int figure = 1;
  std::vector<double> curve_eps;
  std::size_t grid = 200;
  std::string curve_out;
  auto* curve = app.add_subcommand("curve", "export figure data as CSV");
  curve->fallthrough();
  curve->add_option("figure", figure, "1 or 2")->required();
  curve->add_option("--epsilon", curve_eps, "epsilon value(s)")->delimiter(',');
  curve->add_option("--grid", grid, "grid size")->capture_default_str();
  curve->add_option("--out", curve_out, "CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (restarts_opt->count() > 0) g.restarts = restarts;
  if (tol_opt->count() > 0) g.tol = tol;
  if (iter_opt->count() > 0) g.max_iter = max_iter;
  if (trials_opt->count() > 0) g.trials = trials;

  try {
    if (g.trials && *g.trials < 1) throw ParameterError("trials must be >= 1");
    if (*dist) return cmd_dist(g, measure, file_a, file_b, dist_out, out);
    if (*verify) return cmd_verify(g, suite, verify_out, out);
    if (*example) return cmd_example(example_name, example_eps, example_dim, gate, out_dir, out);
    return cmd_curve(figure, curve_eps, grid, curve_out, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ValidityError& e) {
    err << "validity error: " << e.what() << "\n";
    return kExitValidity;
  } catch (const InvalidInputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidity;
  } catch (const NumericalDegeneracyError& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kExitValidity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailedChecks;
  }
}

}  // namespace postdist

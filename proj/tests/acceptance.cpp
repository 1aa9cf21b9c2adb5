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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion carries its own runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "postdist/cli.hpp"
#include "postdist/distances.hpp"
#include "postdist/gallery.hpp"
#include "postdist/random.hpp"
#include "postdist/suite.hpp"
#include "postdist/theorems.hpp"

namespace postdist {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Outcome nonconvexity() {
  Outcome o;
  for (double eps : {1.0 / 32, 1.0 / 8, 0.25}) {
    const auto [psi, phi] = nonconvexity_pair(eps);
    const double f0 = objective_f(psi, phi, DensityMatrix(oracle::diag({1, 0})));
    const double f1 = objective_f(psi, phi, DensityMatrix(oracle::diag({0, 1})));
    const double fm = objective_f(psi, phi, DensityMatrix::maximally_mixed(2));
    o.require(std::abs(f0) <= 1e-9 && std::abs(f1) <= 1e-9, "f at pure states, eps=" + num(eps));
    o.require(std::abs(fm - (2 - 4 * eps)) <= 1e-9, "f at I/2 = " + num(fm));
    for (const CurveRow& row : fig1_curve(eps, 200)) {
      const double expect = oracle::nonconvexity_diagonal(eps, row.parameter);
      o.require(std::abs(row.values[0] - expect) <= 1e-9, "fig1 at p=" + num(row.parameter));
    }
  }
  return o;
}

Outcome contractivity() {
  Outcome o;
  OptimizerConfig cfg;
  for (double eps : {0.1, 1.0 / 3, 0.5}) {
    const TheoremReport r = counterexample_contractivity(eps);
    const double after = 2.0 / (1.0 + eps);
    o.require(std::abs(r.rhs - 1.0) <= 1e-9, "direct before, eps=" + num(eps));
    o.require(std::abs(r.lhs - after) <= 1e-9, "direct after, eps=" + num(eps));
    o.require(r.pass, "counterexample report, eps=" + num(eps));
    const ContractivityTriple t = contractivity_triple(eps);
    const double before_opt = hat_d_diamond(t.psi, t.phi, cfg).value;
    const double after_opt =
        hat_d_diamond(compose(t.tau, t.psi), compose(t.tau, t.phi), cfg).value;
    o.require(std::abs(before_opt - 1.0) <= 1e-4, "optimizer before = " + num(before_opt));
    o.require(std::abs(after_opt - after) <= 1e-4, "optimizer after = " + num(after_opt));
  }
  return o;
}

Outcome conversion() {
  Outcome o;
  OptimizerConfig cfg;
  const auto [psi, phi] = conversion_pair();
  const double hat = hat_d_tr(psi, phi, cfg).value;
  const double dd = d_tr_D(psi, phi, cfg).value;
  o.require(std::abs(hat) <= 1e-6, "hat_d_tr = " + num(hat));
  o.require(std::abs(dd - 0.5) <= 1e-6, "d_tr_D = " + num(dd));
  o.require(std::isinf(alpha_of(phi, cfg)), "alpha is finite");
  return o;
}

Outcome teleportation_criterion() {
  Outcome o;
  OptimizerConfig cfg;
  for (std::size_t d : {2, 3}) {
    const Channel tel = teleportation(d);
    Rng rng(derive_seed(0, "teleportation", d));
    for (int s = 0; s < 100; ++s) {
      const ComplexMatrix rho = random_density(d, rng);
      const double p = apply_renormalized(tel, DensityMatrix(rho)).probability;
      o.require(std::abs(p - 1.0 / double(d * d)) <= 1e-12, "probability = " + num(p));
    }
    const double hd = hat_d_diamond(tel, identity_channel(d), cfg).value;
    o.require(hd <= 1e-5, "hat_d_diamond = " + num(hd));
    const ConversionResult c = conversion_check(tel, identity_channel(d), cfg);
    o.require(c.k == 1.0 / double(d * d), "k = " + num(c.k));
    o.require(c.probability_spread < 1e-12, "spread = " + num(c.probability_spread));
  }
  return o;
}

Outcome suites() {
  Outcome o;
  SuiteConfig cfg;
  cfg.trials = 200;
  cfg.dims = {2, 3};
  const std::vector<std::string> ids = {"L1", "F2", "T1", "T2", "T3", "C1",
                                        "T4", "C2", "L2", "T5", "T6"};
  const SuiteResult r = run_suite(ids, cfg);
  for (const SuiteEntry& e : r.entries) {
    o.require(e.report.pass, format_entry(e).substr(0, 120));
  }
  o.require(r.entries.size() == ids.size() * 200, "instance count");
  if (o.pass) o.detail = std::to_string(r.passed) + " instances";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  OptimizerConfig cfg;
  struct Pair {
    std::string label;
    Channel psi, phi;
  };
  std::vector<Pair> pairs;
  for (double eps : {1.0 / 32, 1.0 / 8, 0.25}) {
    auto [a, b] = nonconvexity_pair(eps);
    pairs.push_back({"nonconvexity " + num(eps), a, b});
  }
  for (double eps : {0.1, 1.0 / 3, 0.5}) {
    const ContractivityTriple t = contractivity_triple(eps);
    pairs.push_back({"contractivity " + num(eps), t.psi, t.phi});
    pairs.push_back({"contractivity composed " + num(eps), compose(t.tau, t.psi),
                     compose(t.tau, t.phi)});
  }
  {
    auto [a, b] = conversion_pair();
    pairs.push_back({"conversion", a, b});
  }
  for (std::size_t d : {2, 3}) {
    pairs.push_back({"teleportation " + std::to_string(d), teleportation(d), identity_channel(d)});
  }
  pairs.push_back({"isometry H", isometry_channel(named_gate("H")), identity_channel(2)});

  double worst = 0.0;
  std::string worst_at;
  for (const Pair& p : pairs) {
    for (Measure m : {Measure::kOperationalTrace, Measure::kTrace, Measure::kDiamond,
                      Measure::kHatTrace, Measure::kHatDiamond}) {
      const double opt = distance(m, p.psi, p.phi, cfg).value;
      const double orc = dense_oracle(m, p.psi, p.phi, 100000, derive_seed(0, p.label, 0));
      const double gap = std::abs(opt - orc);
      if (gap > worst) {
        worst = gap;
        worst_at = p.label + " " + std::string(measure_name(m));
      }
      o.require(gap <= 5e-3, p.label + " " + std::string(measure_name(m)) + ": optimizer " +
                                 num(opt) + " oracle " + num(orc));
    }
  }
  if (o.pass) o.detail = "max gap " + num(worst) + " (" + worst_at + ")";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string reports[2];
  for (std::string& rep : reports) {
    const char* argv[] = {"postdist", "verify", "--suite", "all", "--seed", "0"};
    std::ostringstream out, err;
    const int code = run_cli(6, argv, out, err);
    o.require(code == 0, "verify exit code " + std::to_string(code));
    rep = out.str();
  }
  o.require(!reports[0].empty() && reports[0] == reports[1], "reports differ");
  return o;
}

}  // namespace
}  // namespace postdist

int main() {
  using namespace postdist;
  const std::vector<Criterion> criteria = {
      {"nonconvexity", 1.0, nonconvexity},
      {"contractivity-failure", 30.0, contractivity},
      {"conversion-alpha-necessity", 10.0, conversion},
      {"teleportation", 30.0, teleportation_criterion},
      {"inequality-suites", 600.0, suites},
      {"optimizer-vs-oracle", 300.0, oracle_agreement},
      {"determinism", std::numeric_limits<double>::infinity(), determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      if (o.pass) o.detail = "over budget of " + num(c.budget_seconds) + " s";
      o.pass = false;
    }
    std::printf("%s %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}

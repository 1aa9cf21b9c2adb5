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

#include "postdist/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "postdist/error.hpp"
#include "postdist/gallery.hpp"
#include "postdist/random.hpp"

namespace postdist {

OptimizerConfig SuiteConfig::default_suite_optimizer() {
  OptimizerConfig cfg;
  cfg.restarts = 4;
  cfg.max_iterations = 300;
  return cfg;
}

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = {"L1", "F2", "T1", "T2",  "T3",  "C1", "T4",
                                               "C2", "L2", "T5", "T6", "CE1", "CE2", "CE3"};
  return ids;
}

std::vector<std::string> parse_statement_list(const std::string& spec) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& id : statement_ids()) out.push_back(id);
      continue;
    }
    const auto& ids = statement_ids();
    if (std::find(ids.begin(), ids.end(), item) == ids.end()) {
      throw ParameterError("unknown statement id '" + item + "'");
    }
    out.push_back(item);
  }
  if (out.empty()) throw ParameterError("empty statement list");
  // Keep the canonical order and drop repeats.
  std::vector<std::string> ordered;
  for (const auto& id : statement_ids()) {
    if (std::find(out.begin(), out.end(), id) != out.end()) ordered.push_back(id);
  }
  return ordered;
}

namespace {

// One instance's channels, drawn from a dedicated stream.
class Corpus {
 public:
  Corpus(std::uint64_t seed, const std::string& id, std::size_t index)
      : rng_(derive_seed(seed, id, index)), tag_(id + "#" + std::to_string(index)) {}

  Rng& rng() { return rng_; }

  // 1e-3 .. 0.2, log-uniform.
  double eta() { return 1e-3 * std::pow(200.0, rng_.uniform()); }

  Channel cptp(std::size_t din, std::size_t dout, std::size_t rank, const std::string& label) {
    return random_channel(din, dout, rank, rng_.next(), RandomKind::kCptp)
        .renamed(label + "[" + tag_ + "]");
  }

  Channel post(std::size_t din, std::size_t dout, std::size_t rank, const std::string& label) {
    return random_channel(din, dout, rank, rng_.next(), RandomKind::kPostselection)
        .renamed(label + "[" + tag_ + "]");
  }

  ComplexMatrix unitary(std::size_t d) { return random_unitary(d, rng_); }
  ComplexMatrix isometry(std::size_t din, std::size_t dout) {
    return random_isometry(din, dout, rng_);
  }

  // (1-η) ideal + η noise, as a Kraus union; scaled by c afterwards.
  Channel mix(const Channel& ideal, const Channel& noise, double eta, double c,
              const std::string& label) {
    std::vector<ComplexMatrix> kraus;
    for (const auto& k : ideal.kraus()) kraus.push_back(std::sqrt((1.0 - eta) * c) * k);
    for (const auto& k : noise.kraus()) kraus.push_back(std::sqrt(eta * c) * k);
    return Channel(ideal.dim_in(), ideal.dim_out(), std::move(kraus), label + "[" + tag_ + "]");
  }

 private:
  Rng rng_;
  std::string tag_;
};

std::size_t dim_for(const SuiteConfig& cfg, std::size_t i) {
  if (cfg.dims.empty()) throw ParameterError("dimension list is empty");
  return cfg.dims[i % cfg.dims.size()];
}

OptimizerConfig instance_optimizer(const SuiteConfig& cfg, const std::string& id,
                                   std::size_t i) {
  OptimizerConfig o = cfg.optimizer;
  o.master_seed = derive_seed(cfg.seed, id + "/optimizer", i);
  return o;
}

TheoremReport run_l1(const SuiteConfig& cfg, std::size_t i) {
  Corpus c(cfg.seed, "L1", i);
  const std::size_t d = dim_for(cfg, i);
  const OptimizerConfig o = instance_optimizer(cfg, "L1", i);
  switch (i % 3) {
    case 0: return check_lemma_trace_dists(c.cptp(d, d, 2, "cptp"), c.cptp(d, d, 2, "cptp"), o);
    case 1: return check_lemma_trace_dists(c.post(d, d, 2, "post"), c.post(d, d, 3, "post"), o);
    default: {
      const Channel u = isometry_channel(c.unitary(d), "unitary");
      const Channel psi = c.mix(u, c.cptp(d, d, 2, "noise"), c.eta(), 1.0, "near_unitary");
      return check_lemma_trace_dists(psi, u, o);
    }
  }
}

TheoremReport run_f2(const SuiteConfig& cfg, std::size_t i) {
  Corpus c(cfg.seed, "F2", i);
  const std::size_t d = dim_for(cfg, i);
  const OptimizerConfig o = instance_optimizer(cfg, "F2", i);
  switch (i % 3) {
    case 0: return check_fact_norms(c.cptp(d, d, 1 + i % 3, "cptp"), o);
    case 1: return check_fact_norms(c.post(d, d, 2, "post"), o);
    default: {
      const Channel u = isometry_channel(c.unitary(d), "unitary");
      const double scale = 0.5 + 0.5 * c.rng().uniform();
      return check_fact_norms(c.mix(u, c.post(d, d, 2, "noise"), c.eta(), scale, "scaled"), o);
    }
  }
}

TheoremReport run_t1(const SuiteConfig& cfg, std::size_t i) {
  Corpus c(cfg.seed, "T1", i);
  const std::size_t d = dim_for(cfg, i);
  const std::size_t n = 2 + i % 2;
  std::vector<std::pair<Channel, Channel>> pairs;
  for (std::size_t j = 0; j < n; ++j) {
    const Channel ideal = c.cptp(d, d, 1 + j % 2, "ideal");
    pairs.emplace_back(c.mix(ideal, c.cptp(d, d, 2, "noise"), c.eta(), 1.0, "noisy"), ideal);
  }
  return check_standard_subadditivity(pairs, instance_optimizer(cfg, "T1", i));
}

TheoremReport run_t2(const SuiteConfig& cfg, std::size_t i) {
  Corpus c(cfg.seed, "T2", i);
  const std::size_t d = dim_for(cfg, i);
  const ComplexMatrix u = c.unitary(d);
  const Channel psi = c.mix(isometry_channel(u), c.cptp(d, d, 2, "noise"), c.eta(), 1.0,
                            "near_unitary_tp");
  return check_theorem_watrous(psi, u, instance_optimizer(cfg, "T2", i));
}

// Near-isometric trace-nonincreasing channel; odd instances use a non-square
// isometry into one extra dimension.
std::pair<Channel, ComplexMatrix> near_isometry(Corpus& c, std::size_t d, std::size_t i) {
  const std::size_t dout = i % 2 == 1 ? d + 1 : d;
  const ComplexMatrix u = c.isometry(d, dout);
  const double scale = 0.85 + 0.15 * c.rng().uniform();
  const Channel psi = c.mix(isometry_channel(u), c.cptp(d, dout, 2, "noise"), c.eta(), scale,
                            "near_isometry");
  return {psi, u};
}

TheoremReport run_t3(const SuiteConfig& cfg, std::size_t i) {
  Corpus c(cfg.seed, "T3", i);
  const auto [psi, u] = near_isometry(c, dim_for(cfg, i), i);
  return check_theorem_op(psi, u, instance_optimizer(cfg, "T3", i));
}

TheoremReport run_c1(const SuiteConfig& cfg, std::size_t i) {
  Corpus c(cfg.seed, "C1", i);
  const auto [psi, u] = near_isometry(c, dim_for(cfg, i), i);
  return check_corollary_diam(psi, u, instance_optimizer(cfg, "C1", i));
}

TheoremReport run_t4(const SuiteConfig& cfg, std::size_t i) {
  Corpus c(cfg.seed, "T4", i);
  const std::size_t d = dim_for(cfg, i);
  const std::size_t anc = (d == 2 && i % 4 == 1) ? 2 : 1;
  const Channel phi = c.post(d, d, 2, "post");
  const Channel psi = c.mix(phi, c.post(d, d, 2, "noise"), c.eta(), 1.0, "near_post");
  const Channel phi2 = c.cptp(d * anc, 2, 2, "outer_cptp");
  const Channel psi2 = c.mix(phi2, c.post(d * anc, 2, 2, "noise"), c.eta(), 1.0, "outer_post");
  return check_weak_subadditivity(psi, phi, psi2, phi2, anc, instance_optimizer(cfg, "T4", i));
}

TheoremReport run_c2(const SuiteConfig& cfg, std::size_t i) {
  const OptimizerConfig o = instance_optimizer(cfg, "C2", i);
  if (i == 0) {
    // The contractivity triple with τ completed to a trace-preserving map.
    const double eps = 1.0 / 3.0;
    const ContractivityTriple t = contractivity_triple(eps);
    std::vector<ComplexMatrix> kraus = t.tau.kraus();
    ComplexMatrix p0 = ComplexMatrix::Zero(3, 3);
    p0(0, 0) = std::sqrt(1.0 - eps);
    kraus.push_back(p0);
    const Channel tau_tp(3, 3, std::move(kraus), "tau_tp");
    return check_contraction(t.psi, t.phi, tau_tp, o);
  }
  Corpus c(cfg.seed, "C2", i);
  const std::size_t d = dim_for(cfg, i);
  const Channel phi = c.post(d, d, 2, "post");
  const Channel psi = c.mix(phi, c.post(d, d, 2, "noise"), c.eta(), 1.0, "near_post");
  return check_contraction(psi, phi, c.cptp(d, d, 2, "tau"), o);
}

TheoremReport run_l2(const SuiteConfig& cfg, std::size_t i) {
  const OptimizerConfig o = instance_optimizer(cfg, "L2", i);
  Corpus c(cfg.seed, "L2", i);
  const std::size_t d = dim_for(cfg, i);
  if (i == 4) {
    const auto [psi, phi] = conversion_pair();
    return conversion_check(psi, phi, o).report;
  }
  switch (i % 4) {
    case 0: return conversion_check(teleportation(d), identity_channel(d), o).report;
    case 1:
    case 3: {
      const Channel u = isometry_channel(c.unitary(d), "unitary");
      const double scale = 0.3 + 0.7 * c.rng().uniform();
      const Channel psi = c.mix(u, c.post(d, d, 2, "noise"), c.eta(), scale, "near_unitary");
      return conversion_check(psi, u, o).report;
    }
    default: {
      const Channel phi = c.cptp(d, d, 2, "cptp");
      const double scale = 0.3 + 0.7 * c.rng().uniform();
      const Channel psi = c.mix(phi, c.post(d, d, 2, "noise"), c.eta(), scale, "near_cptp");
      return conversion_check(psi, phi, o).report;
    }
  }
}

PostTheoremReports run_post(const SuiteConfig& cfg, std::size_t i) {
  const OptimizerConfig o = instance_optimizer(cfg, "T5", i);
  Corpus c(cfg.seed, "T5", i);
  const std::size_t d = dim_for(cfg, i);
  if (i % 7 == 0) return check_post_theorems(teleportation(d), ComplexMatrix::Identity(d, d), o);
  const ComplexMatrix u = c.unitary(d);
  const double scale = 0.3 + 0.7 * c.rng().uniform();
  const Channel psi = c.mix(isometry_channel(u), c.post(d, d, 2, "noise"), c.eta(), scale,
                            "near_unitary");
  return check_post_theorems(psi, u, o);
}

TheoremReport run_ce1(const SuiteConfig& cfg, std::size_t i) {
  static const double kEps[] = {1.0 / 32, 1.0 / 8, 1.0 / 4};
  if (i < 3) return counterexample_nonconvexity(kEps[i]);
  Corpus c(cfg.seed, "CE1", i);
  return counterexample_nonconvexity(0.01 + 0.48 * c.rng().uniform());
}

TheoremReport run_ce2(const SuiteConfig& cfg, std::size_t i) {
  static const double kEps[] = {1.0 / 10, 1.0 / 3, 1.0 / 2};
  if (i < 3) return counterexample_contractivity(kEps[i]);
  Corpus c(cfg.seed, "CE2", i);
  return counterexample_contractivity(0.01 + 0.98 * c.rng().uniform());
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

SuiteResult run_suite(const std::vector<std::string>& ids, const SuiteConfig& cfg) {
  cfg.optimizer.check();
  if (cfg.trials < 1) throw ParameterError("trials must be >= 1");
  SuiteResult out;
  std::map<std::size_t, PostTheoremReports> post_cache;
  for (const std::string& id : ids) {
    const std::size_t n = id == "CE3" ? 1 : cfg.trials;
    for (std::size_t i = 0; i < n; ++i) {
      TheoremReport r;
      if (id == "L1") r = run_l1(cfg, i);
      else if (id == "F2") r = run_f2(cfg, i);
      else if (id == "T1") r = run_t1(cfg, i);
      else if (id == "T2") r = run_t2(cfg, i);
      else if (id == "T3") r = run_t3(cfg, i);
      else if (id == "C1") r = run_c1(cfg, i);
      else if (id == "T4") r = run_t4(cfg, i);
      else if (id == "C2") r = run_c2(cfg, i);
      else if (id == "L2") r = run_l2(cfg, i);
      else if (id == "T5" || id == "T6") {
        auto it = post_cache.find(i);
        if (it == post_cache.end()) it = post_cache.emplace(i, run_post(cfg, i)).first;
        r = id == "T5" ? it->second.hat_diamond : it->second.operator_gap;
      } else if (id == "CE1") r = run_ce1(cfg, i);
      else if (id == "CE2") r = run_ce2(cfg, i);
      else if (id == "CE3") r = counterexample_alpha_necessity(instance_optimizer(cfg, "CE3", i));
      else throw ParameterError("unknown statement id '" + id + "'");
      (r.pass ? out.passed : out.failed) += 1;
      out.entries.push_back({i, std::move(r)});
    }
  }
  return out;
}

std::string format_entry(const SuiteEntry& e) {
  const TheoremReport& r = e.report;
  std::string line = r.statement_id + " #" + std::to_string(e.instance) + " lhs=" + fmt(r.lhs) +
                     " " + std::string(relation_symbol(r.relation)) + " rhs=" + fmt(r.rhs) +
                     " slack=" + fmt(r.slack) + " " + (r.pass ? "PASS" : "FAIL") + " | " +
                     r.inputs + "\n";
  for (const Condition& c : r.side_conditions) {
    if (c.pass) continue;
    line += "    side condition failed: " + c.name + ": " + fmt(c.lhs) + " " +
            std::string(relation_symbol(c.relation)) + " " + fmt(c.rhs) + "\n";
  }
  return line;
}

std::string format_suite(const SuiteResult& result) {
  std::string out;
  for (const SuiteEntry& e : result.entries) out += format_entry(e);
  out += "summary: " + std::to_string(result.passed) + "/" +
         std::to_string(result.passed + result.failed) + " passed, " +
         std::to_string(result.failed) + " failed\n";
  return out;
}

}  // namespace postdist

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

#include "postdist/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "postdist/error.hpp"
#include "postdist/random.hpp"

namespace postdist {

void OptimizerConfig::check() const {
  if (restarts < 1) throw ParameterError("optimizer: restarts must be >= 1");
  if (max_iterations < 1) throw ParameterError("optimizer: max_iterations must be >= 1");
  if (!(step_tolerance > 0.0) || !(value_tolerance > 0.0)) {
    throw ParameterError("optimizer: tolerances must be positive");
  }
}

std::size_t ParameterLayout::size() const {
  return std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
}

void normalize_blocks(std::span<double> x, const ParameterLayout& layout) {
  std::size_t offset = 0;
  for (const std::size_t n : layout.blocks) {
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) sq += x[offset + i] * x[offset + i];
    const double norm = std::sqrt(sq);
    if (norm > 0.0) {
      for (std::size_t i = 0; i < n; ++i) x[offset + i] /= norm;
    } else {
      x[offset] = 1.0;
    }
    offset += n;
  }
}

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

double eval(const Objective& f, const Vec& x) {
  return f(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
}

Vec gradient(const Objective& f, Vec x) {
  Vec g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    x[i] = xi + kGradientStep;
    const double up = eval(f, x);
    x[i] = xi - kGradientStep;
    const double down = eval(f, x);
    x[i] = xi;
    g[i] = (up - down) / (2.0 * kGradientStep);
  }
  return g;
}

void normalize(Vec& x, const ParameterLayout& layout) {
  normalize_blocks(std::span<double>(x.data(), static_cast<std::size_t>(x.size())),
                   layout);
}

}  // namespace

LocalResult local_ascent(const Objective& f, std::vector<double> x0,
                         const ParameterLayout& layout,
                         const OptimizerConfig& cfg) {
  const auto n = static_cast<Eigen::Index>(layout.size());
  if (static_cast<Eigen::Index>(x0.size()) != n || n == 0) {
    throw InvalidInputError("local_ascent: starting point does not match layout");
  }
  Vec x = Eigen::Map<Vec>(x0.data(), n);
  normalize(x, layout);
  double fx = eval(f, x);
  Vec g = gradient(f, x);
  Mat h = Mat::Identity(n, n);
  bool h_is_identity = true;
  int small_steps = 0;
  std::size_t it = 0;

  for (; it < cfg.max_iterations; ++it) {
    if (g.norm() < 1e-12) break;
    Vec d = h * g;
    double slope = g.dot(d);
    if (!(slope > 0.0)) {
      h.setIdentity();
      h_is_identity = true;
      d = g;
      slope = g.dot(d);
    }
    // Unit-sphere blocks: a step longer than ~0.5 is never meaningful.
    double t = std::min(1.0, 0.5 / d.norm());
    Vec trial(n);
    double f_trial = 0.0;
    bool accepted = false;
    while (t * d.norm() > cfg.step_tolerance) {
      trial = x + t * d;
      normalize(trial, layout);
      f_trial = eval(f, trial);
      if (f_trial >= fx + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      if (h_is_identity) break;
      h.setIdentity();
      h_is_identity = true;
      continue;
    }
    const Vec g_new = gradient(f, trial);
    const Vec s = trial - x;
    const Vec y = g - g_new;  // gradient change of -f
    const double sy = s.dot(y);
    if (sy > 1e-16) {
      if (h_is_identity) {
        h *= sy / y.squaredNorm();
        h_is_identity = false;
      }
      const double rho = 1.0 / sy;
      const Vec hy = h * y;
      // H ← (I - ρ s yᵀ) H (I - ρ y sᵀ) + ρ s sᵀ
      h += (rho * rho * y.dot(hy) + rho) * (s * s.transpose()) -
           rho * (hy * s.transpose() + s * hy.transpose());
    }
    const double gain = f_trial - fx;
    x = trial;
    fx = f_trial;
    g = g_new;
    if (s.norm() <= cfg.step_tolerance || gain <= 1e-2 * cfg.value_tolerance) {
      if (++small_steps >= 2) {
        ++it;
        break;
      }
    } else {
      small_steps = 0;
    }
  }
  LocalResult out;
  out.x.assign(x.data(), x.data() + n);
  out.value = fx;
  out.iterations = it;
  return out;
}

MultiStartResult multi_start_maximize(const Objective& f,
                                      const ParameterLayout& layout,
                                      const OptimizerConfig& cfg) {
  cfg.check();
  const std::size_t n = layout.size();
  MultiStartResult best;
  best.value = -std::numeric_limits<double>::infinity();
  best.restart_values.reserve(cfg.restarts);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    Rng rng(derive_seed(cfg.master_seed, r));
    std::vector<double> x0(n);
    for (auto& v : x0) v = rng.normal();
    LocalResult local = local_ascent(f, std::move(x0), layout, cfg);
    best.restart_values.push_back(local.value);
    if (local.value > best.value) {
      best.value = local.value;
      best.x = std::move(local.x);
      best.best_restart = r;
    }
  }
  best.restarts_used = cfg.restarts;
  if (cfg.restarts >= 2) {
    std::vector<double> sorted = best.restart_values;
    std::partial_sort(sorted.begin(), sorted.begin() + 2, sorted.end(),
                      std::greater<>());
    best.converged = sorted[0] - sorted[1] <= cfg.value_tolerance;
  }
  return best;
}

}  // namespace postdist

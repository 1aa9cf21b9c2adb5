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

#ifndef POSTDIST_OPTIMIZER_HPP
#define POSTDIST_OPTIMIZER_HPP

// Multi-start local ascent for scale-invariant objectives on products of
// real unit spheres.
//
// Every parameter vector is split into blocks and each block is kept at unit
// Euclidean norm; objectives are expected to be invariant under positive
// rescaling of each block (normalized state vectors, factors T of TT†/tr).
// Local refinement is quasi-Newton ascent (BFGS inverse-Hessian updates)
// on central-difference gradients with an Armijo backtracking line search.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace postdist {

struct OptimizerConfig {
  std::size_t restarts = 64;
  std::size_t max_iterations = 2000;
  double step_tolerance = 1e-9;
  double value_tolerance = 1e-8;
  std::uint64_t master_seed = 0;

  /// Throws ParameterError unless restarts >= 1, max_iterations >= 1 and both
  /// tolerances are positive.
  void check() const;
};

using Objective = std::function<double(std::span<const double>)>;

/// Sizes of the independently normalized blocks.
struct ParameterLayout {
  std::vector<std::size_t> blocks;
  std::size_t size() const;
};

void normalize_blocks(std::span<double> x, const ParameterLayout& layout);

inline constexpr double kGradientStep = 1e-6;

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
};

LocalResult local_ascent(const Objective& f, std::vector<double> x0,
                         const ParameterLayout& layout,
                         const OptimizerConfig& cfg);

struct MultiStartResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t best_restart = 0;
  std::size_t restarts_used = 0;
  bool converged = false;
  std::vector<double> restart_values;
};

/// Restart r starts from a Gaussian point seeded by
/// derive_seed(cfg.master_seed, r). The result is the maximum over restarts,
/// ties going to the smallest restart index, so it does not depend on the
/// order in which restarts are evaluated. `converged` is set when the two
/// best restart values agree within cfg.value_tolerance.
MultiStartResult multi_start_maximize(const Objective& f,
                                      const ParameterLayout& layout,
                                      const OptimizerConfig& cfg);

}  // namespace postdist

#endif  // POSTDIST_OPTIMIZER_HPP

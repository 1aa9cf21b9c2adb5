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

#ifndef POSTDIST_DISTANCES_HPP
#define POSTDIST_DISTANCES_HPP

// Distances between trace-nonincreasing CP maps Ψ, Φ : L(H) -> L(H').
//
//   operational trace     sup_ρ ||Ψ(ρ) - Φ(ρ)||_tr           over pure ρ
//   trace                 sup_X ||Ψ(X) - Φ(X)||_tr           over X = |u⟩⟨v|
//   diamond               trace distance of Ψ⊗I_H, Φ⊗I_H     over pure |u⟩ ∈ H⊗H
//   hat trace             sup_ρ f_{Ψ,Φ}(ρ)                   over all of D(H)
//   hat diamond           sup f_{Ψ⊗I_H, Φ⊗I_H}(|u⟩⟨u|)      over pure |u⟩ ∈ H⊗H
//
// with f_{Ψ,Φ}(ρ) = ||Ψ(ρ)/tr Ψ(ρ) - Φ(ρ)/tr Φ(ρ)||_tr. The first three
// objectives are convex in the input, so extreme points suffice. f is not
// convex, so the hat trace distance is optimized over full-rank factors
// ρ = T T† / tr(T T†).
//
// Every estimate is the best value found, hence a lower bound on the true
// supremum, and is reproducible from its witness via evaluate_witness.

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "postdist/channel.hpp"
#include "postdist/optimizer.hpp"

namespace postdist {

enum class Measure {
  kOperationalTrace,
  kTrace,
  kDiamond,
  kHatTrace,
  kHatDiamond,
};

/// CLI spelling: dtrD, dtr, diamond, hat-tr, hat-diamond.
std::string_view measure_name(Measure m);
Measure parse_measure(std::string_view name);
bool is_stabilized(Measure m);
bool is_postselected(Measure m);

struct RankOnePair {
  PureState left;
  PureState right;
};

using Witness = std::variant<PureState, DensityMatrix, RankOnePair>;

struct DistanceEstimate {
  double value = 0.0;
  Witness witness;
  std::size_t restarts_used = 0;
  bool converged = false;
  Measure measure = Measure::kOperationalTrace;
};

inline constexpr std::size_t kMaxUnstabilizedDim = 8;
inline constexpr std::size_t kMaxStabilizedDim = 4;
inline constexpr std::size_t kMaxOracleDim = 3;

/// f_{Ψ,Φ}(ρ). Both channels must be postselection superoperators.
double objective_f(const Channel& psi, const Channel& phi, const DensityMatrix& rho);

DistanceEstimate d_tr_D(const Channel& psi, const Channel& phi,
                        const OptimizerConfig& cfg);
DistanceEstimate d_tr(const Channel& psi, const Channel& phi,
                      const OptimizerConfig& cfg);
DistanceEstimate d_diamond(const Channel& psi, const Channel& phi,
                           const OptimizerConfig& cfg);
DistanceEstimate hat_d_tr(const Channel& psi, const Channel& phi,
                          const OptimizerConfig& cfg);
DistanceEstimate hat_d_diamond(const Channel& psi, const Channel& phi,
                               const OptimizerConfig& cfg);
DistanceEstimate distance(Measure m, const Channel& psi, const Channel& phi,
                          const OptimizerConfig& cfg);

/// ||Ψ||_◇ = ||A||_op² from the Stinespring operator; exact.
double diamond_norm_channel(const Channel& psi);

/// Optimizer estimate of the induced norm of a single CP map, i.e. the
/// distance from the zero map, for the three unstabilized/stabilized linear
/// measures. For CP Ψ all three equal ||A||_op².
DistanceEstimate channel_norm_estimate(Measure m, const Channel& psi,
                                       const OptimizerConfig& cfg);

/// max over pure |u⟩, |v⟩ of ||Φ(|u⟩⟨u|) - Φ(|v⟩⟨v|)||_tr. The objective is
/// convex in each argument, so pure pairs reach the maximum over D(H)².
/// The witness holds (|u⟩, |v⟩).
DistanceEstimate output_diameter(const Channel& phi, const OptimizerConfig& cfg);

/// Best objective value over `samples` seeded random points of the measure's
/// domain: Haar pure states, pairs of Haar pure states, or Hilbert-Schmidt
/// random density matrices. Supported for input dimension <= 3.
double dense_oracle(Measure m, const Channel& psi, const Channel& phi,
                    std::size_t samples, std::uint64_t seed);

/// Exact objective of `m` at `witness`. Pure states and density matrices are
/// accepted wherever the domain allows; stabilized measures expect inputs on
/// H⊗H (input factor first).
double evaluate_witness(Measure m, const Channel& psi, const Channel& phi,
                        const Witness& witness);

// Direct evaluations without validation, also used by the theorem checks.

/// ||Ψ(X) - Φ(X)||_tr.
double output_distance(const Channel& psi, const Channel& phi,
                       const ComplexMatrix& x);
/// f_{Ψ,Φ} at a density matrix given as a plain matrix.
double renormalized_distance(const Channel& psi, const Channel& phi,
                             const ComplexMatrix& rho);
/// ||Ψ(|u⟩⟨v|) - Φ(|u⟩⟨v|)||_tr.
double rank_one_distance(const Channel& psi, const Channel& phi,
                         const ComplexVector& u, const ComplexVector& v);

/// The four normalized states (|u⟩ + i^k |v⟩)/||·|| together with the squared
/// norms of the unnormalized vectors. Skips k where |u⟩ + i^k|v⟩ vanishes.
struct PolarizationTerm {
  PureState state;
  double weight;
};
std::vector<PolarizationTerm> polarization_states(const ComplexVector& u,
                                                  const ComplexVector& v);

}  // namespace postdist

#endif  // POSTDIST_DISTANCES_HPP

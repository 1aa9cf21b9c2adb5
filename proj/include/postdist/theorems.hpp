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

#ifndef POSTDIST_THEOREMS_HPP
#define POSTDIST_THEOREMS_HPP

// Checkable forms of the inequalities relating the distance measures.
//
// Every supremum is estimated from below, so a check of the form
// "estimate ≤ bound(other estimate)" would be unsound when the right-hand
// estimate falls short. Each check instead evaluates the right-hand objective
// at the states that the inequality's argument actually uses (the
// left-hand witness and states derived from it), and takes the larger of that
// value and the right-hand estimate. With that transfer, an inequality that
// holds mathematically can only fail by rounding.

#include <optional>
#include <string>
#include <vector>

#include "postdist/distances.hpp"

namespace postdist {

inline constexpr double kOptimizerSlack = 1e-3;
inline constexpr double kClosedFormSlack = 1e-6;

enum class Relation {
  kLessEqual,  // lhs ≤ rhs + tolerance
  kGreater,    // lhs > rhs + tolerance
  kNear,       // |lhs - rhs| ≤ tolerance
};

std::string_view relation_symbol(Relation r);

/// A comparison that must hold for the report to pass.
struct Condition {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::kLessEqual;
  double tolerance = kClosedFormSlack;
  bool pass = false;
};

Condition make_condition(std::string name, double lhs, double rhs,
                         Relation relation, double tolerance);

/// Where a recorded value came from.
struct WitnessRecord {
  std::string label;
  Measure measure;
  Witness witness;
  double value;
};

struct TheoremReport {
  std::string statement_id;
  std::string inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  Relation relation = Relation::kLessEqual;
  double tolerance = kOptimizerSlack;
  std::vector<Condition> side_conditions;
  std::vector<WitnessRecord> witnesses;
  std::vector<std::string> notes;
  bool pass = false;
};

/// d_tr ≤ 2 d_tr^D.
TheoremReport check_lemma_trace_dists(const Channel& psi, const Channel& phi,
                                      const OptimizerConfig& cfg);

/// ||A||²_op against the optimizer estimates of ||Ψ||_◇ and max_ρ tr Ψ(ρ).
TheoremReport check_fact_norms(const Channel& psi, const OptimizerConfig& cfg);

/// |g_u⟩ = (⟨u|U† ⊗ 1) A |u⟩, one entry per environment index.
ComplexVector construct_g(const StinespringOp& a, const ComplexMatrix& u_iso,
                          const PureState& u);

/// ||A - U ⊗ g||_op ≤ 2√ε and 1 - ε ≤ ||g||² ≤ ||A||²_op ≤ 1 with
/// ε = d_tr^D(Ψ, U·U†).
TheoremReport check_theorem_op(const Channel& psi, const ComplexMatrix& u_iso,
                               const OptimizerConfig& cfg);

/// d_◇(Ψ, U·U†) ≤ 4√ε + ε.
TheoremReport check_corollary_diam(const Channel& psi, const ComplexMatrix& u_iso,
                                   const OptimizerConfig& cfg);

/// d_◇(Ψ, U·U†) ≤ √(2ε) for trace-preserving Ψ; PreconditionError otherwise.
TheoremReport check_theorem_watrous(const Channel& psi, const ComplexMatrix& u_iso,
                                    const OptimizerConfig& cfg);

/// d_◇(Ψ_N∘…∘Ψ_1, Φ_N∘…∘Φ_1) ≤ Σ_i d_◇(Ψ_i, Φ_i). Pairs are listed in
/// application order.
TheoremReport check_standard_subadditivity(
    const std::vector<std::pair<Channel, Channel>>& pairs, const OptimizerConfig& cfg);

/// d̂_◇(Ψ'∘(Ψ⊗I_K'), Φ'∘(Φ⊗I_K')) ≤ d̂_◇(Ψ', Φ') + d̂_◇(Ψ, Φ) with Φ'
/// trace-preserving, Ψ, Φ : L(H) -> L(H') and Ψ', Φ' acting on H'⊗K'.
TheoremReport check_weak_subadditivity(const Channel& psi, const Channel& phi,
                                       const Channel& psi2, const Channel& phi2,
                                       std::size_t anc_dim, const OptimizerConfig& cfg);

/// The same inequality with Ψ' = Φ' = τ trace-preserving and no ancilla:
/// d̂_◇(τ∘Ψ, τ∘Φ) ≤ d̂_◇(Ψ, Φ).
TheoremReport check_contraction(const Channel& psi, const Channel& phi,
                                const Channel& tau, const OptimizerConfig& cfg);

/// Direct evaluation of the contractivity counterexample.
TheoremReport counterexample_contractivity(double epsilon);

/// Claim that f is not convex along the diagonal family of nonconvexity_pair.
TheoremReport counterexample_nonconvexity(double epsilon);

/// On conversion_pair(): d̂_tr vanishes, d_tr^D(Ψ/||Ψ||_◇, Φ) does not, and
/// α is infinite.
TheoremReport counterexample_alpha_necessity(const OptimizerConfig& cfg);

struct AlphaResult {
  double alpha = 0.0;                   // may be +infinity
  double spread = 0.0;                  // s, 2 for unitary Φ
  bool unitary = false;
  std::optional<RankOnePair> witness;   // maximizing pure pair when estimated
};

/// Requires Φ trace-preserving. Single square unitary Kraus: α = 8.
/// Otherwise α = 40/s with s estimated over pure pairs; s < 1e-9: infinite.
AlphaResult alpha_details(const Channel& phi, const OptimizerConfig& cfg);
double alpha_of(const Channel& phi, const OptimizerConfig& cfg);

struct ConversionResult {
  double k = 0.0;
  double alpha = 0.0;
  double probability_spread = 0.0;
  double hat_distance = 0.0;       // d̂_tr estimate
  double hat_distance_eff = 0.0;   // after transfer
  double normalized_distance = 0.0;  // d_tr^D(Ψ/k, Φ) estimate
  bool spread_ok = false;
  bool left_ok = false;
  bool right_ok = false;
  bool right_vacuous = false;
  TheoremReport report;
};

ConversionResult conversion_check(const Channel& psi, const Channel& phi,
                                  const OptimizerConfig& cfg);

struct PostTheoremReports {
  TheoremReport hat_diamond;   // d̂_◇ ≤ 24√ε + 18ε
  TheoremReport operator_gap;  // ||A - U⊗g||_op ≤ 6||A||_op √ε and window
};

/// Requires a square unitary U: both bounds rest on α = 8.
PostTheoremReports check_post_theorems(const Channel& psi, const ComplexMatrix& u_iso,
                                       const OptimizerConfig& cfg);

struct CurveRow {
  double parameter;
  std::vector<double> values;
};

/// fig1: rows (p, f(ρ_p)) for p = j/grid, j = 0..grid. fig2: one row
/// (ε, before, after) per ε; pass an empty list to use ε = j/(grid+1).
std::vector<CurveRow> fig1_curve(double epsilon, std::size_t grid);
std::vector<CurveRow> fig2_curve(const std::vector<double>& epsilons, std::size_t grid);

}  // namespace postdist

#endif  // POSTDIST_THEOREMS_HPP

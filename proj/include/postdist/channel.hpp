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

#ifndef POSTDIST_CHANNEL_HPP
#define POSTDIST_CHANNEL_HPP

// Completely positive maps in Kraus form, the states they act on, and the
// Choi and Stinespring representations.

#include <cstdint>
#include <string>
#include <vector>

#include "postdist/linalg.hpp"

namespace postdist {

inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPostselectionFloor = 1e-10;
inline constexpr double kKrausTruncation = 1e-12;
inline constexpr double kChoiPsdTolerance = 1e-9;
inline constexpr double kIsometryTolerance = 1e-10;

/// Unit-norm state vector.
class PureState {
 public:
  /// The one-dimensional state (1).
  PureState() : amplitudes_(ComplexVector::Ones(1)) {}
  /// Rejects vectors whose norm differs from 1 by more than 1e-12.
  explicit PureState(ComplexVector amplitudes);
  static PureState normalized(const ComplexVector& v);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  ComplexMatrix projector() const;

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit trace (all within 1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);
  explicit DensityMatrix(const PureState& state);
  /// T T† / tr(T T†) for any nonzero square T.
  static DensityMatrix from_factor(const ComplexMatrix& factor);
  static DensityMatrix maximally_mixed(std::size_t dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

/// A linear CP map L(C^dim_in) -> L(C^dim_out) given by Kraus operators.
/// Construction checks shapes and finiteness only; trace-nonincreasing and
/// postselection validity are checked by validate().
class Channel {
 public:
  Channel(std::size_t dim_in, std::size_t dim_out,
          std::vector<ComplexMatrix> kraus, std::string name = {});

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  std::size_t rank() const { return kraus_.size(); }
  const std::string& name() const { return name_; }

  /// E = Σ K†K.
  const ComplexMatrix& effect() const { return effect_; }
  double effect_min() const { return effect_min_; }
  double effect_max() const { return effect_max_; }

  Channel renamed(std::string name) const;

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> kraus_;
  std::string name_;
  ComplexMatrix effect_;
  double effect_min_ = 0.0;
  double effect_max_ = 0.0;
};

struct ValidityReport {
  double effect_min = 0.0;
  double effect_max = 0.0;
  // Always true for a Kraus representation; kept so reports read uniformly.
  bool completely_positive = true;
  bool trace_nonincreasing = false;
  bool trace_preserving = false;
  bool postselection_valid = false;
};

/// Throws NotTraceNonincreasingError when λ_max(E) > 1 + 1e-9, and
/// InvalidPostselectionError when `require_postselection` is set and
/// λ_min(E) <= 1e-10.
ValidityReport validate(const Channel& ch, bool require_postselection);

bool is_trace_preserving(const Channel& ch);

/// Σ K X K† for any dim_in×dim_in operator X.
ComplexMatrix apply(const Channel& ch, const ComplexMatrix& x);
ComplexMatrix apply(const Channel& ch, const DensityMatrix& rho);

struct RenormalizedOutput {
  DensityMatrix state;
  double probability;
};

/// Ψ(ρ) / tr Ψ(ρ) together with the postselection probability tr Ψ(ρ).
RenormalizedOutput apply_renormalized(const Channel& ch,
                                      const DensityMatrix& rho);

/// J = Σ_ij |i⟩⟨j| ⊗ Ψ(|i⟩⟨j|), input factor first, unnormalized.
class ChoiMatrix {
 public:
  /// Rejects matrices with an eigenvalue below -1e-9.
  ChoiMatrix(ComplexMatrix matrix, std::size_t dim_in, std::size_t dim_out);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }

 private:
  ComplexMatrix matrix_;
  std::size_t dim_in_;
  std::size_t dim_out_;
};

ChoiMatrix kraus_to_choi(const Channel& ch);
Channel choi_to_kraus(const ChoiMatrix& choi);

/// Ψ(·) = tr_env[A · A†] with A : C^dim_in -> C^dim_out ⊗ C^dim_env.
/// Row (o, e) of A, index o * dim_env + e, is row o of Kraus operator e.
struct StinespringOp {
  ComplexMatrix a;
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  std::size_t dim_env = 0;
};

StinespringOp stinespring(const Channel& ch);

/// Ψ ⊗ I_anc with Kraus operators K ⊗ identity(anc_dim).
Channel tensor_with_identity(const Channel& ch, std::size_t anc_dim,
                             std::size_t cap = kDefaultDimensionCap);

/// outer ∘ inner.
Channel compose(const Channel& outer, const Channel& inner);

/// c · Ψ. With `assert_trace_nonincreasing`, throws when c·λ_max(E) > 1+1e-9.
Channel scale(const Channel& ch, double c,
              bool assert_trace_nonincreasing = false);

bool is_isometry(const ComplexMatrix& u, double tol = kIsometryTolerance);

/// ρ ↦ U ρ U†. Throws InvalidInputError unless U†U = identity.
Channel isometry_channel(const ComplexMatrix& u, std::string name = "isometry");
Channel identity_channel(std::size_t dim);

enum class RandomKind { kCptp, kPostselection };

/// Deterministic per seed. kCptp: Kraus operators cut from a Haar isometry
/// C^dim_in -> C^dim_out ⊗ C^rank. kPostselection: Ginibre Kraus operators
/// rescaled to λ_max(E) = 1 - 1e-3, then mixed with weight 0.01 with a
/// trace-preserving channel so that λ_min(E) >= 0.01.
Channel random_channel(std::size_t dim_in, std::size_t dim_out,
                       std::size_t rank, std::uint64_t seed, RandomKind kind);

}  // namespace postdist

#endif  // POSTDIST_CHANNEL_HPP

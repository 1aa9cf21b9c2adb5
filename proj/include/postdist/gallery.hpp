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

#ifndef POSTDIST_GALLERY_HPP
#define POSTDIST_GALLERY_HPP

// Named example channels with known closed-form distances.

#include <string_view>
#include <utility>
#include <vector>

#include "postdist/channel.hpp"

namespace postdist {

/// Qubit maps Ψ_ε = (1-ε)|0⟩⟨0|·|0⟩⟨0| + ε|1⟩⟨1|·|1⟩⟨1| and Φ_ε with the roles
/// of |0⟩ and |1⟩ swapped. Requires ε ∈ (0, 1/2).
std::pair<Channel, Channel> nonconvexity_pair(double epsilon);

struct ContractivityTriple {
  Channel psi;  // ρ ↦ (|0⟩⟨0| + |1⟩⟨1|)/2 · tr ρ on C^3
  Channel phi;  // ρ ↦ (|0⟩⟨0| + |2⟩⟨2|)/2 · tr ρ
  Channel tau;  // ρ ↦ (1-ε) Π ρ Π + ε ρ,  Π = |1⟩⟨1| + |2⟩⟨2|
};

/// Requires ε ∈ (0, 1).
ContractivityTriple contractivity_triple(double epsilon);

/// On C^2: Φ(ρ) = |0⟩⟨0| tr ρ and Ψ(ρ) = ½|0⟩⟨0| tr ρ + ½|0⟩⟨0|ρ|0⟩⟨0|.
/// Returned as (Ψ, Φ).
std::pair<Channel, Channel> conversion_pair();

/// The postselected teleportation map from H to B: the single Kraus operator
/// identity(d)/d, so tr Ψ(ρ) = 1/d² on every input.
Channel teleportation(std::size_t dim);

/// Computational-basis dephasing ρ ↦ Σ |i⟩⟨i|ρ|i⟩⟨i|.
Channel dephasing(std::size_t dim);

/// Constant map ρ ↦ σ tr ρ for a diagonal σ given by its weights.
Channel constant_diagonal(const std::vector<double>& weights, std::size_t dim_in,
                          std::string name);

struct GalleryParams {
  double epsilon = 0.25;
  std::size_t dim = 2;
  ComplexMatrix unitary;  // used by "isometry"
};

/// Dispatch by name: nonconvexity_pair, contractivity_triple,
/// conversion_pair, alpha_necessity_pair, teleportation, identity, isometry.
std::vector<Channel> gallery(std::string_view name, const GalleryParams& params);

/// Named gates for the "isometry" example: I, X, Y, Z, H, S, T (qubit).
ComplexMatrix named_gate(std::string_view name);

}  // namespace postdist

#endif  // POSTDIST_GALLERY_HPP

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

#include "postdist/gallery.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "postdist/error.hpp"

namespace postdist {

namespace {

ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t i,
                   std::size_t j) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows),
                                        static_cast<Eigen::Index>(cols));
  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return m;
}

}  // namespace

std::pair<Channel, Channel> nonconvexity_pair(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ParameterError("nonconvexity_pair: epsilon must lie in (0, 1/2)");
  }
  const double big = std::sqrt(1.0 - epsilon);
  const double small = std::sqrt(epsilon);
  Channel psi(2, 2, {big * unit(2, 2, 0, 0), small * unit(2, 2, 1, 1)},
              "nonconvexity_psi");
  Channel phi(2, 2, {big * unit(2, 2, 1, 1), small * unit(2, 2, 0, 0)},
              "nonconvexity_phi");
  return {std::move(psi), std::move(phi)};
}

Channel constant_diagonal(const std::vector<double>& weights, std::size_t dim_in,
                          std::string name) {
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    for (std::size_t j = 0; j < dim_in; ++j) {
      kraus.push_back(std::sqrt(weights[i]) * unit(weights.size(), dim_in, i, j));
    }
  }
  return Channel(dim_in, weights.size(), std::move(kraus), std::move(name));
}

ContractivityTriple contractivity_triple(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ParameterError("contractivity_triple: epsilon must lie in (0, 1)");
  }
  ComplexMatrix projector = unit(3, 3, 1, 1) + unit(3, 3, 2, 2);
  Channel tau(3, 3,
              {std::sqrt(1.0 - epsilon) * projector,
               std::sqrt(epsilon) * identity(3)},
              "contractivity_tau");
  return {constant_diagonal({0.5, 0.5, 0.0}, 3, "contractivity_psi"),
          constant_diagonal({0.5, 0.0, 0.5}, 3, "contractivity_phi"),
          std::move(tau)};
}

std::pair<Channel, Channel> conversion_pair() {
  // Ψ(ρ) = |0⟩⟨0| (ρ_00 + ½ ρ_11).
  Channel psi(2, 2, {unit(2, 2, 0, 0), std::sqrt(0.5) * unit(2, 2, 0, 1)},
              "conversion_psi");
  Channel phi(2, 2, {unit(2, 2, 0, 0), unit(2, 2, 0, 1)}, "conversion_phi");
  return {std::move(psi), std::move(phi)};
}

Channel teleportation(std::size_t dim) {
  if (dim < 1) throw ParameterError("teleportation: dimension must be >= 1");
  return Channel(dim, dim, {identity(dim) / static_cast<double>(dim)},
                 "teleportation");
}

Channel dephasing(std::size_t dim) {
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < dim; ++i) kraus.push_back(unit(dim, dim, i, i));
  return Channel(dim, dim, std::move(kraus), "dephasing");
}

ComplexMatrix named_gate(std::string_view name) {
  using std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  ComplexMatrix g(2, 2);
  if (name == "I") {
    g << 1, 0, 0, 1;
  } else if (name == "X") {
    g << 0, 1, 1, 0;
  } else if (name == "Y") {
    g << 0, -i, i, 0;
  } else if (name == "Z") {
    g << 1, 0, 0, -1;
  } else if (name == "H") {
    g << 1 / sqrt2, 1 / sqrt2, 1 / sqrt2, -1 / sqrt2;
  } else if (name == "S") {
    g << 1, 0, 0, i;
  } else if (name == "T") {
    g << 1, 0, 0, std::exp(i * (std::numbers::pi / 4));
  } else {
    throw ParameterError("unknown gate '" + std::string(name) + "'");
  }
  return g;
}

std::vector<Channel> gallery(std::string_view name, const GalleryParams& params) {
  if (name == "nonconvexity_pair") {
    auto [psi, phi] = nonconvexity_pair(params.epsilon);
    return {std::move(psi), std::move(phi)};
  }
  if (name == "contractivity_triple") {
    auto t = contractivity_triple(params.epsilon);
    return {std::move(t.psi), std::move(t.phi), std::move(t.tau)};
  }
  if (name == "conversion_pair" || name == "alpha_necessity_pair") {
    auto [psi, phi] = conversion_pair();
    return {std::move(psi), std::move(phi)};
  }
  if (name == "teleportation") {
    return {teleportation(params.dim)};
  }
  if (name == "identity") {
    return {identity_channel(params.dim).renamed("identity")};
  }
  if (name == "isometry") {
    return {isometry_channel(params.unitary, "isometry")};
  }
  throw ParameterError("unknown gallery entry '" + std::string(name) + "'");
}

}  // namespace postdist

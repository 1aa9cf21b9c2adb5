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

#ifndef POSTDIST_RANDOM_HPP
#define POSTDIST_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "postdist/linalg.hpp"

namespace postdist {

/// Seeded generator whose output depends only on the seed: uniform and
/// normal variates are derived from the raw 64-bit engine stream rather than
/// the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Child seed for `index` under `master`; stable across platforms.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t index);

/// Complex Gaussian entries with unit variance per real component.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-random unit vector.
ComplexVector random_unit_vector(std::size_t dim, Rng& rng);

/// Haar-random isometry C^dim_in -> C^dim_out (dim_out >= dim_in).
ComplexMatrix random_isometry(std::size_t dim_in, std::size_t dim_out,
                              Rng& rng);

inline ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  return random_isometry(dim, dim, rng);
}

/// Hilbert-Schmidt random density matrix T T† / tr(T T†), T square Ginibre.
ComplexMatrix random_density(std::size_t dim, Rng& rng);

}  // namespace postdist

#endif  // POSTDIST_RANDOM_HPP

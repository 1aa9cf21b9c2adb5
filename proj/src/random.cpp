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

#include "postdist/random.hpp"

#include <cmath>
#include <numbers>

#include "postdist/error.hpp"

namespace postdist {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                          std::uint64_t index) {
  // FNV-1a over the tag.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return derive_seed(mix64(master) ^ h, index);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      out(i, j) = Complex(re, im);
    }
  }
  return out;
}

ComplexVector random_unit_vector(std::size_t dim, Rng& rng) {
  if (dim == 0) throw ParameterError("random_unit_vector: dim must be >= 1");
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v[i] = Complex(re, im);
  }
  return v / v.norm();
}

ComplexMatrix random_isometry(std::size_t dim_in, std::size_t dim_out,
                              Rng& rng) {
  if (dim_in == 0 || dim_out < dim_in) {
    throw ParameterError("random_isometry: need 1 <= dim_in <= dim_out");
  }
  const ComplexMatrix g = ginibre(dim_out, dim_in, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(
                                            static_cast<Eigen::Index>(dim_out),
                                            static_cast<Eigen::Index>(dim_in));
  // Fix column phases so the distribution is Haar.
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double m = std::abs(d);
    if (m > 0.0) q.col(j) *= d / m;
  }
  return q;
}

ComplexMatrix random_density(std::size_t dim, Rng& rng) {
  const ComplexMatrix t = ginibre(dim, dim, rng);
  ComplexMatrix rho = t * t.adjoint();
  rho = (rho + rho.adjoint()) * 0.5;
  return rho / rho.trace().real();
}

}  // namespace postdist

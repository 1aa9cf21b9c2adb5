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

#ifndef POSTDIST_LINALG_HPP
#define POSTDIST_LINALG_HPP

// Dense complex matrices and the norms every other module consumes.
//
// Storage is row-major everywhere. Kronecker products use the (i_A, i_B)
// convention: the row of A ⊗ B indexed by (i, j) is i * rows(B) + j. The
// same convention is used by partial_trace and by all channel code, so a
// row-major coefficient buffer can be reinterpreted as a bipartite matrix
// without copying.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace postdist {

using Complex = std::complex<double>;
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr std::size_t kDefaultDimensionCap = 4096;
inline constexpr double kHermitianTolerance = 1e-10;

/// Eigenvalues in descending order with matching orthonormal eigenvector
/// columns.
struct HermitianEigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

enum class Keep { kFirst, kSecond };

ComplexMatrix identity(std::size_t dim);

bool all_finite(const ComplexMatrix& x);

/// Largest entrywise modulus of X - X†. Requires a square matrix.
double hermitian_deviation(const ComplexMatrix& x);

/// Throws CapacityError if `dim` exceeds `cap`.
void check_dimension(std::size_t dim, std::size_t cap = kDefaultDimensionCap);

/// Singular values in descending order, via the eigenvalues of X†X (or XX†,
/// whichever is smaller) with negative rounding clamped to zero.
RealVector singular_values(const ComplexMatrix& x);

/// Sum of singular values. Hermitian inputs take the eigenvalue route,
/// which keeps full relative precision on tiny singular values.
double trace_norm(const ComplexMatrix& x);

/// Sum of |eigenvalue| of a matrix the caller guarantees is Hermitian. No
/// validation; intended for optimizer inner loops.
double trace_norm_hermitian(const ComplexMatrix& x);

/// Largest singular value.
double operator_norm(const ComplexMatrix& x);

/// Eigen-decomposition of a Hermitian matrix. The input is symmetrized as
/// (X + X†)/2 before decomposing; inputs further than kHermitianTolerance
/// from Hermitian are rejected.
HermitianEigenSystem hermitian_eig(const ComplexMatrix& x);

/// Eigenvalues only, descending. Same validation as hermitian_eig.
RealVector hermitian_eigenvalues(const ComplexMatrix& x);

/// Kronecker product A ⊗ B.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::size_t cap = kDefaultDimensionCap);

/// Partial trace of a (d1·d2)×(d1·d2) matrix over the factor not kept.
ComplexMatrix partial_trace(const ComplexMatrix& x, std::size_t d1,
                            std::size_t d2, Keep keep);

}  // namespace postdist

#endif  // POSTDIST_LINALG_HPP

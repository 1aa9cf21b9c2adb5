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

#include "postdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "postdist/error.hpp"

namespace postdist {

namespace {

void require_finite(const ComplexMatrix& x, const char* op) {
  if (!all_finite(x)) {
    throw InvalidInputError(std::string(op) + ": matrix has non-finite entries");
  }
}

RealVector descending(const RealVector& ascending) {
  return ascending.reverse();
}

}  // namespace

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

bool all_finite(const ComplexMatrix& x) {
  const Complex* data = x.data();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(data[i].real()) || !std::isfinite(data[i].imag())) {
      return false;
    }
  }
  return true;
}

double hermitian_deviation(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) {
    throw InvalidInputError("hermitian_deviation: matrix is not square");
  }
  if (x.size() == 0) return 0.0;
  return (x - x.adjoint()).cwiseAbs().maxCoeff();
}

void check_dimension(std::size_t dim, std::size_t cap) {
  if (dim > cap) {
    throw CapacityError("dimension " + std::to_string(dim) +
                        " exceeds the cap of " + std::to_string(cap));
  }
}

RealVector singular_values(const ComplexMatrix& x) {
  require_finite(x, "singular_values");
  if (x.size() == 0) return RealVector();
  ComplexMatrix gram = x.rows() < x.cols() ? ComplexMatrix(x * x.adjoint())
                                           : ComplexMatrix(x.adjoint() * x);
  gram = (gram + gram.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram,
                                                      Eigen::EigenvaluesOnly);
  RealVector values = descending(solver.eigenvalues());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    values[i] = std::sqrt(std::max(values[i], 0.0));
  }
  return values;
}

double trace_norm_hermitian(const ComplexMatrix& x) {
  if (x.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double trace_norm(const ComplexMatrix& x) {
  require_finite(x, "trace_norm");
  if (x.size() == 0) return 0.0;
  if (x.rows() == x.cols()) {
    const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
    if (hermitian_deviation(x) <= 1e-14 * scale) {
      return trace_norm_hermitian((x + x.adjoint()) * 0.5);
    }
  }
  return singular_values(x).sum();
}

double operator_norm(const ComplexMatrix& x) {
  require_finite(x, "operator_norm");
  if (x.size() == 0) return 0.0;
  return singular_values(x)[0];
}

HermitianEigenSystem hermitian_eig(const ComplexMatrix& x) {
  require_finite(x, "hermitian_eig");
  if (hermitian_deviation(x) > kHermitianTolerance) {
    throw InvalidInputError("hermitian_eig: matrix is not Hermitian");
  }
  const ComplexMatrix sym = (x + x.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  HermitianEigenSystem out;
  out.eigenvalues = descending(solver.eigenvalues());
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& x) {
  require_finite(x, "hermitian_eigenvalues");
  if (hermitian_deviation(x) > kHermitianTolerance) {
    throw InvalidInputError("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const ComplexMatrix sym = (x + x.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym,
                                                      Eigen::EigenvaluesOnly);
  return descending(solver.eigenvalues());
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::size_t cap) {
  require_finite(a, "tensor");
  require_finite(b, "tensor");
  const auto rows = static_cast<std::size_t>(a.rows()) *
                    static_cast<std::size_t>(b.rows());
  const auto cols = static_cast<std::size_t>(a.cols()) *
                    static_cast<std::size_t>(b.cols());
  check_dimension(rows, cap);
  check_dimension(cols, cap);
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& x, std::size_t d1,
                            std::size_t d2, Keep keep) {
  const auto n = static_cast<Eigen::Index>(d1 * d2);
  if (d1 == 0 || d2 == 0 || x.rows() != n || x.cols() != n) {
    throw InvalidInputError("partial_trace: matrix is not (d1*d2) square");
  }
  const auto a = static_cast<Eigen::Index>(d1);
  const auto b = static_cast<Eigen::Index>(d2);
  if (keep == Keep::kFirst) {
    ComplexMatrix out = ComplexMatrix::Zero(a, a);
    for (Eigen::Index i = 0; i < a; ++i) {
      for (Eigen::Index j = 0; j < a; ++j) {
        Complex sum = 0.0;
        for (Eigen::Index k = 0; k < b; ++k) sum += x(i * b + k, j * b + k);
        out(i, j) = sum;
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(b, b);
  for (Eigen::Index k = 0; k < a; ++k) {
    out += x.block(k * b, k * b, b, b);
  }
  return out;
}

}  // namespace postdist

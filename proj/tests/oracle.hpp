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


#ifndef POSTDIST_TESTS_ORACLE_HPP
#define POSTDIST_TESTS_ORACLE_HPP

// Reference implementations used only by the tests. They share no code with
// the library: norms come from Eigen's JacobiSVD and everything else is
// written as explicit index loops.

#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <vector>

#include "postdist/channel.hpp"

namespace oracle {

using postdist::Channel;
using postdist::Complex;
using postdist::ComplexMatrix;
using postdist::ComplexVector;

inline Eigen::MatrixXcd to_col_major(const ComplexMatrix& x) { return Eigen::MatrixXcd(x); }

inline double trace_norm(const ComplexMatrix& x) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_col_major(x));
  return svd.singularValues().sum();
}

inline double operator_norm(const ComplexMatrix& x) {
  if (x.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_col_major(x));
  return svd.singularValues()(0);
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Traces out the second factor of a (d1*d2)-dimensional operator.
inline ComplexMatrix trace_second(const ComplexMatrix& x, int d1, int d2) {
  ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j)
      for (int k = 0; k < d2; ++k) out(i, j) += x(i * d2 + k, j * d2 + k);
  return out;
}

inline ComplexMatrix trace_first(const ComplexMatrix& x, int d1, int d2) {
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d1; ++k) out(i, j) += x(k * d2 + i, k * d2 + j);
  return out;
}

inline ComplexMatrix image(const Channel& ch, const ComplexMatrix& x) {
  ComplexMatrix out = ComplexMatrix::Zero(ch.dim_out(), ch.dim_out());
  for (const ComplexMatrix& k : ch.kraus()) {
    for (Eigen::Index a = 0; a < k.rows(); ++a)
      for (Eigen::Index b = 0; b < k.rows(); ++b)
        for (Eigen::Index i = 0; i < k.cols(); ++i)
          for (Eigen::Index j = 0; j < k.cols(); ++j)
            out(a, b) += k(a, i) * x(i, j) * std::conj(k(b, j));
  }
  return out;
}

// (Ψ ⊗ I_anc)(X) with the input factor first.
inline ComplexMatrix apply_extended(const Channel& ch, int anc, const ComplexMatrix& x) {
  const int din = static_cast<int>(ch.dim_in());
  const int dout = static_cast<int>(ch.dim_out());
  ComplexMatrix out = ComplexMatrix::Zero(dout * anc, dout * anc);
  for (int p = 0; p < anc; ++p) {
    for (int q = 0; q < anc; ++q) {
      ComplexMatrix block(din, din);
      for (int i = 0; i < din; ++i)
        for (int j = 0; j < din; ++j) block(i, j) = x(i * anc + p, j * anc + q);
      const ComplexMatrix out_block = image(ch, block);
      for (int a = 0; a < dout; ++a)
        for (int b = 0; b < dout; ++b) out(a * anc + p, b * anc + q) = out_block(a, b);
    }
  }
  return out;
}

inline Complex trace(const ComplexMatrix& x) {
  Complex t = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) t += x(i, i);
  return t;
}

// f_{Ψ,Φ}(ρ) computed from the loop-based pieces above.
inline double f(const Channel& psi, const Channel& phi, const ComplexMatrix& rho) {
  const ComplexMatrix a = image(psi, rho);
  const ComplexMatrix b = image(phi, rho);
  return trace_norm(a / trace(a).real() - b / trace(b).real());
}

inline double f_extended(const Channel& psi, const Channel& phi, int anc,
                         const ComplexMatrix& rho) {
  const ComplexMatrix a = apply_extended(psi, anc, rho);
  const ComplexMatrix b = apply_extended(phi, anc, rho);
  return trace_norm(a / trace(a).real() - b / trace(b).real());
}

inline ComplexMatrix projector(const ComplexVector& v) {
  ComplexMatrix p(v.size(), v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    for (Eigen::Index j = 0; j < v.size(); ++j) p(i, j) = v(i) * std::conj(v(j));
  return p / v.squaredNorm();
}

inline ComplexMatrix diag(const std::vector<double>& d) {
  ComplexMatrix m = ComplexMatrix::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// Hand-normalized f on the diagonal family ρ_p = diag(1-p, p) for the
// nonconvexity pair: Ψ(ρ_p) ∝ diag((1-ε)(1-p), εp), Φ(ρ_p) ∝ diag(ε(1-p), (1-ε)p).
inline double nonconvexity_diagonal(double eps, double p) {
  const double q = 1.0 - p;
  const double ta = (1 - eps) * q + eps * p;
  const double tb = eps * q + (1 - eps) * p;
  if (ta == 0.0 || tb == 0.0) return 0.0;
  return std::abs((1 - eps) * q / ta - eps * q / tb) + std::abs(eps * p / ta - (1 - eps) * p / tb);
}

}  // namespace oracle

#endif  // POSTDIST_TESTS_ORACLE_HPP

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

#include "postdist/channel.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "postdist/error.hpp"
#include "postdist/random.hpp"

namespace postdist {

// ---------------------------------------------------------------------------
// States

PureState::PureState(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw InvalidInputError("PureState: empty amplitude vector");
  }
  if (!amplitudes_.allFinite()) {
    throw InvalidInputError("PureState: non-finite amplitudes");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw InvalidInputError("PureState: amplitudes are not unit norm");
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidInputError("PureState: cannot normalize a zero vector");
  }
  return PureState(v / n);
}

ComplexMatrix PureState::projector() const {
  return amplitudes_ * amplitudes_.adjoint();
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw InvalidInputError("DensityMatrix: matrix must be square and nonempty");
  }
  if (!all_finite(matrix_)) {
    throw InvalidInputError("DensityMatrix: non-finite entries");
  }
  if (hermitian_deviation(matrix_) > kHermitianTolerance) {
    throw InvalidInputError("DensityMatrix: matrix is not Hermitian");
  }
  matrix_ = (matrix_ + matrix_.adjoint()) * 0.5;
  if (std::abs(matrix_.trace().real() - 1.0) > 1e-10) {
    throw InvalidInputError("DensityMatrix: trace is not 1");
  }
  const RealVector eig = hermitian_eigenvalues(matrix_);
  if (eig[eig.size() - 1] < -1e-10) {
    throw InvalidInputError("DensityMatrix: matrix is not positive semidefinite");
  }
}

DensityMatrix::DensityMatrix(const PureState& state)
    : DensityMatrix(state.projector()) {}

DensityMatrix DensityMatrix::from_factor(const ComplexMatrix& factor) {
  if (factor.rows() == 0 || !all_finite(factor)) {
    throw InvalidInputError("DensityMatrix: invalid factor");
  }
  ComplexMatrix rho = factor * factor.adjoint();
  const double tr = rho.trace().real();
  if (!(tr > 0.0)) throw InvalidInputError("DensityMatrix: zero factor");
  rho /= tr;
  return DensityMatrix((rho + rho.adjoint()) * 0.5);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

// ---------------------------------------------------------------------------
// Channel

Channel::Channel(std::size_t dim_in, std::size_t dim_out,
                 std::vector<ComplexMatrix> kraus, std::string name)
    : dim_in_(dim_in),
      dim_out_(dim_out),
      kraus_(std::move(kraus)),
      name_(std::move(name)) {
  if (dim_in_ == 0 || dim_out_ == 0) {
    throw InvalidInputError("Channel: dimensions must be positive");
  }
  check_dimension(dim_in_);
  check_dimension(dim_out_);
  if (kraus_.empty()) {
    throw EmptyChannelError("Channel: needs at least one Kraus operator");
  }
  effect_ = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim_in_),
                                static_cast<Eigen::Index>(dim_in_));
  for (const auto& k : kraus_) {
    if (static_cast<std::size_t>(k.rows()) != dim_out_ ||
        static_cast<std::size_t>(k.cols()) != dim_in_) {
      throw InvalidInputError("Channel: Kraus operator has wrong shape");
    }
    if (!all_finite(k)) {
      throw InvalidInputError("Channel: Kraus operator has non-finite entries");
    }
    effect_.noalias() += k.adjoint() * k;
  }
  effect_ = (effect_ + effect_.adjoint()) * 0.5;
  const RealVector eig = hermitian_eigenvalues(effect_);
  effect_max_ = eig[0];
  effect_min_ = eig[eig.size() - 1];
}

Channel Channel::renamed(std::string name) const {
  Channel copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ValidityReport validate(const Channel& ch, bool require_postselection) {
  ValidityReport report;
  report.effect_min = ch.effect_min();
  report.effect_max = ch.effect_max();
  report.trace_nonincreasing = ch.effect_max() <= 1.0 + kTraceTolerance;
  report.trace_preserving = is_trace_preserving(ch);
  report.postselection_valid = ch.effect_min() > kPostselectionFloor;
  if (!report.trace_nonincreasing) {
    throw NotTraceNonincreasingError(
        "channel '" + ch.name() + "' is not trace-nonincreasing (lambda_max(E) = " +
        std::to_string(ch.effect_max()) + ")");
  }
  if (require_postselection && !report.postselection_valid) {
    throw InvalidPostselectionError(
        "channel '" + ch.name() +
        "' is not a postselection superoperator (lambda_min(E) = " +
        std::to_string(ch.effect_min()) + ")");
  }
  return report;
}

bool is_trace_preserving(const Channel& ch) {
  return std::max(std::abs(ch.effect_max() - 1.0),
                  std::abs(ch.effect_min() - 1.0)) <= kTraceTolerance;
}

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& x) {
  if (static_cast<std::size_t>(x.rows()) != ch.dim_in() ||
      static_cast<std::size_t>(x.cols()) != ch.dim_in()) {
    throw InvalidInputError("apply: operator dimension does not match channel input");
  }
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(ch.dim_out()),
                                          static_cast<Eigen::Index>(ch.dim_out()));
  for (const auto& k : ch.kraus()) out.noalias() += k * x * k.adjoint();
  return out;
}

ComplexMatrix apply(const Channel& ch, const DensityMatrix& rho) {
  ComplexMatrix out = postdist::apply(ch, rho.matrix());
  return (out + out.adjoint()) * 0.5;
}

RenormalizedOutput apply_renormalized(const Channel& ch,
                                      const DensityMatrix& rho) {
  const ComplexMatrix out = postdist::apply(ch, rho);
  const double p = out.trace().real();
  if (!(p >= 1e-12)) {
    throw NumericalDegeneracyError(
        "apply_renormalized: postselection probability below 1e-12");
  }
  return {DensityMatrix(out / p), p};
}

// ---------------------------------------------------------------------------
// Choi

ChoiMatrix::ChoiMatrix(ComplexMatrix matrix, std::size_t dim_in,
                       std::size_t dim_out)
    : matrix_(std::move(matrix)), dim_in_(dim_in), dim_out_(dim_out) {
  const auto n = static_cast<Eigen::Index>(dim_in * dim_out);
  if (dim_in == 0 || dim_out == 0 || matrix_.rows() != n || matrix_.cols() != n) {
    throw InvalidInputError("ChoiMatrix: shape does not match dimensions");
  }
  const RealVector eig = hermitian_eigenvalues(matrix_);
  if (eig[eig.size() - 1] < -kChoiPsdTolerance) {
    throw NotCompletelyPositiveError("ChoiMatrix: matrix is not positive semidefinite");
  }
}

ChoiMatrix kraus_to_choi(const Channel& ch) {
  const auto di = static_cast<Eigen::Index>(ch.dim_in());
  const auto d_o = static_cast<Eigen::Index>(ch.dim_out());
  check_dimension(ch.dim_in() * ch.dim_out());
  ComplexMatrix j = ComplexMatrix::Zero(di * d_o, di * d_o);
  ComplexVector v(di * d_o);
  for (const auto& k : ch.kraus()) {
    for (Eigen::Index i = 0; i < di; ++i) {
      for (Eigen::Index o = 0; o < d_o; ++o) v[i * d_o + o] = k(o, i);
    }
    j.noalias() += v * v.adjoint();
  }
  return ChoiMatrix((j + j.adjoint()) * 0.5, ch.dim_in(), ch.dim_out());
}

Channel choi_to_kraus(const ChoiMatrix& choi) {
  const HermitianEigenSystem sys = hermitian_eig(choi.matrix());
  if (sys.eigenvalues[sys.eigenvalues.size() - 1] < -kChoiPsdTolerance) {
    throw NotCompletelyPositiveError("choi_to_kraus: negative Choi eigenvalue");
  }
  const auto di = static_cast<Eigen::Index>(choi.dim_in());
  const auto d_o = static_cast<Eigen::Index>(choi.dim_out());
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < sys.eigenvalues.size(); ++k) {
    const double lambda = sys.eigenvalues[k];
    if (lambda <= kKrausTruncation) continue;
    ComplexMatrix op(d_o, di);
    const double s = std::sqrt(lambda);
    for (Eigen::Index i = 0; i < di; ++i) {
      for (Eigen::Index o = 0; o < d_o; ++o) {
        op(o, i) = s * sys.eigenvectors(i * d_o + o, k);
      }
    }
    kraus.push_back(std::move(op));
  }
  if (kraus.empty()) {
    throw EmptyChannelError("choi_to_kraus: no Choi eigenvalue above threshold");
  }
  return Channel(choi.dim_in(), choi.dim_out(), std::move(kraus), "from_choi");
}

// ---------------------------------------------------------------------------
// Stinespring and algebra

StinespringOp stinespring(const Channel& ch) {
  const auto d_o = static_cast<Eigen::Index>(ch.dim_out());
  const auto r = static_cast<Eigen::Index>(ch.rank());
  StinespringOp op;
  op.dim_in = ch.dim_in();
  op.dim_out = ch.dim_out();
  op.dim_env = ch.rank();
  op.a.resize(d_o * r, static_cast<Eigen::Index>(ch.dim_in()));
  for (Eigen::Index e = 0; e < r; ++e) {
    const ComplexMatrix& k = ch.kraus()[static_cast<std::size_t>(e)];
    for (Eigen::Index o = 0; o < d_o; ++o) op.a.row(o * r + e) = k.row(o);
  }
  return op;
}

Channel tensor_with_identity(const Channel& ch, std::size_t anc_dim,
                             std::size_t cap) {
  if (anc_dim == 0) {
    throw ParameterError("tensor_with_identity: ancilla dimension must be >= 1");
  }
  if (anc_dim == 1) return ch;
  const ComplexMatrix id = identity(anc_dim);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(ch.rank());
  for (const auto& k : ch.kraus()) kraus.push_back(tensor(k, id, cap));
  return Channel(ch.dim_in() * anc_dim, ch.dim_out() * anc_dim,
                 std::move(kraus), ch.name() + "(x)I" + std::to_string(anc_dim));
}

Channel compose(const Channel& outer, const Channel& inner) {
  if (inner.dim_out() != outer.dim_in()) {
    throw InvalidInputError("compose: inner output dimension != outer input dimension");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(outer.rank() * inner.rank());
  for (const auto& ko : outer.kraus()) {
    for (const auto& ki : inner.kraus()) kraus.push_back(ko * ki);
  }
  return Channel(inner.dim_in(), outer.dim_out(), std::move(kraus),
                 outer.name() + "o" + inner.name());
}

Channel scale(const Channel& ch, double c, bool assert_trace_nonincreasing) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw ParameterError("scale: factor must be positive and finite");
  }
  if (assert_trace_nonincreasing && c * ch.effect_max() > 1.0 + kTraceTolerance) {
    throw NotTraceNonincreasingError("scale: scaled channel would increase trace");
  }
  const double s = std::sqrt(c);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(ch.rank());
  for (const auto& k : ch.kraus()) kraus.push_back(s * k);
  return Channel(ch.dim_in(), ch.dim_out(), std::move(kraus), ch.name());
}

bool is_isometry(const ComplexMatrix& u, double tol) {
  if (u.rows() < u.cols() || u.cols() == 0 || !all_finite(u)) return false;
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - identity(static_cast<std::size_t>(u.cols()))).cwiseAbs().maxCoeff() <= tol;
}

Channel isometry_channel(const ComplexMatrix& u, std::string name) {
  if (!is_isometry(u)) {
    throw InvalidInputError("isometry_channel: U is not an isometry");
  }
  return Channel(static_cast<std::size_t>(u.cols()),
                 static_cast<std::size_t>(u.rows()), {u}, std::move(name));
}

Channel identity_channel(std::size_t dim) {
  return Channel(dim, dim, {identity(dim)}, "identity");
}

namespace {

std::vector<ComplexMatrix> cptp_kraus(std::size_t dim_in, std::size_t dim_out,
                                      std::size_t rank, Rng& rng) {
  const ComplexMatrix v = random_isometry(dim_in, dim_out * rank, rng);
  std::vector<ComplexMatrix> kraus(rank, ComplexMatrix(dim_out, dim_in));
  for (std::size_t o = 0; o < dim_out; ++o) {
    for (std::size_t e = 0; e < rank; ++e) {
      kraus[e].row(static_cast<Eigen::Index>(o)) =
          v.row(static_cast<Eigen::Index>(o * rank + e));
    }
  }
  return kraus;
}

}  // namespace

Channel random_channel(std::size_t dim_in, std::size_t dim_out,
                       std::size_t rank, std::uint64_t seed, RandomKind kind) {
  if (rank == 0) throw ParameterError("random_channel: rank must be >= 1");
  if (dim_in == 0 || dim_out == 0) {
    throw ParameterError("random_channel: dimensions must be >= 1");
  }
  Rng rng(seed);
  if (kind == RandomKind::kCptp) {
    if (dim_out * rank < dim_in) {
      throw ParameterError("random_channel: dim_out * rank < dim_in admits no CPTP map");
    }
    return Channel(dim_in, dim_out, cptp_kraus(dim_in, dim_out, rank, rng),
                   "random_cptp");
  }
  constexpr double kTop = 1.0 - 1e-3;
  constexpr double kFloor = 0.01;
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(rank + 1);
  ComplexMatrix effect = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim_in),
                                             static_cast<Eigen::Index>(dim_in));
  for (std::size_t e = 0; e < rank; ++e) {
    kraus.push_back(ginibre(dim_out, dim_in, rng));
    effect += kraus.back().adjoint() * kraus.back();
  }
  const double top = hermitian_eigenvalues((effect + effect.adjoint()) * 0.5)[0];
  const double s = std::sqrt((1.0 - kFloor) * kTop / top);
  for (auto& k : kraus) k *= s;
  const std::size_t floor_rank = (dim_in + dim_out - 1) / dim_out;
  for (auto& k : cptp_kraus(dim_in, dim_out, floor_rank, rng)) {
    kraus.push_back(std::sqrt(kFloor) * k);
  }
  return Channel(dim_in, dim_out, std::move(kraus), "random_postselection");
}

}  // namespace postdist

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

#include "postdist/distances.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "postdist/error.hpp"
#include "postdist/random.hpp"

namespace postdist {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::kOperationalTrace: return "dtrD";
    case Measure::kTrace: return "dtr";
    case Measure::kDiamond: return "diamond";
    case Measure::kHatTrace: return "hat-tr";
    case Measure::kHatDiamond: return "hat-diamond";
  }
  return "?";
}

Measure parse_measure(std::string_view name) {
  for (Measure m : {Measure::kOperationalTrace, Measure::kTrace, Measure::kDiamond,
                    Measure::kHatTrace, Measure::kHatDiamond}) {
    if (measure_name(m) == name) return m;
  }
  throw ParameterError("unknown measure '" + std::string(name) + "'");
}

bool is_stabilized(Measure m) {
  return m == Measure::kDiamond || m == Measure::kHatDiamond;
}

bool is_postselected(Measure m) {
  return m == Measure::kHatTrace || m == Measure::kHatDiamond;
}

namespace {

// 2×2 blocks dominate the corpus; closed forms avoid a full eigensolver.
double fast_trace_norm_hermitian(const ComplexMatrix& x) {
  if (x.rows() == 1) return std::abs(x(0, 0).real());
  if (x.rows() == 2) {
    const double a = x(0, 0).real();
    const double d = x(1, 1).real();
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(x(0, 1)));
    return 2.0 * std::max(std::abs(mid), rad);
  }
  // Fix the overall sign so that X and -X give bit-identical norms.
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double v = x(i, i).real();
    if (v != 0.0) return v > 0.0 ? trace_norm_hermitian(x) : trace_norm_hermitian(-x);
  }
  return trace_norm_hermitian(x);
}

// (σ1 + σ2)² = ||X||_F² + 2|det X| for 2×2 X.
double fast_trace_norm(const ComplexMatrix& x) {
  if (x.rows() == 1 && x.cols() == 1) return std::abs(x(0, 0));
  if (x.rows() == 2 && x.cols() == 2) {
    const double det = std::abs(x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0));
    return std::sqrt(x.squaredNorm() + 2.0 * det);
  }
  return singular_values(x).sum();
}

// X ↦ Ψ(X) through the Stinespring operator: for any C with dim_in rows,
// Ψ(C C†) = W W† with W the d_out × (r·cols) reshape of A·C.
class Image {
 public:
  explicit Image(const Channel& ch)
      : a_(stinespring(ch).a),
        d_out_(static_cast<Eigen::Index>(ch.dim_out())),
        r_(static_cast<Eigen::Index>(ch.rank())) {}

  ComplexMatrix factor(const ComplexMatrix& c) const {
    ComplexMatrix ac = a_ * c;
    return Eigen::Map<const ComplexMatrix>(ac.data(), d_out_, r_ * c.cols());
  }

 private:
  ComplexMatrix a_;
  Eigen::Index d_out_;
  Eigen::Index r_;
};

ComplexMatrix decode(std::span<const double> x, Eigen::Index rows) {
  const auto cols = static_cast<Eigen::Index>(x.size() / 2) / rows;
  ComplexMatrix c(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const auto k = static_cast<std::size_t>(2 * (i * cols + j));
      c(i, j) = Complex(x[k], x[k + 1]);
    }
  }
  return c;
}

ComplexVector as_vector(const ComplexMatrix& c) {
  return Eigen::Map<const ComplexVector>(c.data(), c.size());
}


void require_same_dims(const Channel& psi, const Channel& phi, const char* who) {
  if (psi.dim_in() != phi.dim_in() || psi.dim_out() != phi.dim_out()) {
    throw InvalidInputError(std::string(who) + ": channel dimensions differ");
  }
}

void require_policy(Measure m, const Channel& psi) {
  const std::size_t cap = is_stabilized(m) ? kMaxStabilizedDim : kMaxUnstabilizedDim;
  if (psi.dim_in() > cap || psi.dim_out() > cap) {
    throw CapacityError(std::string(measure_name(m)) + ": dimension " +
                        std::to_string(std::max(psi.dim_in(), psi.dim_out())) +
                        " exceeds the supported maximum " + std::to_string(cap));
  }
}

void validate_pair(Measure m, const Channel& psi, const Channel& phi) {
  require_same_dims(psi, phi, measure_name(m).data());
  validate(psi, is_postselected(m));
  validate(phi, is_postselected(m));
}

// Objective at the parameters of one evaluation point; built once per call.
struct Problem {
  Objective objective;
  ParameterLayout layout;
};

Problem make_problem(Measure m, const Channel& psi_in, const Channel& phi_in) {
  const std::size_t d = psi_in.dim_in();
  const Channel psi = is_stabilized(m) ? tensor_with_identity(psi_in, d) : psi_in;
  const Channel phi = is_stabilized(m) ? tensor_with_identity(phi_in, d) : phi_in;
  const Image ip(psi);
  const Image iq(phi);
  const auto n = static_cast<Eigen::Index>(psi.dim_in());
  Problem p;
  switch (m) {
    case Measure::kOperationalTrace:
    case Measure::kDiamond:
      p.layout.blocks = {static_cast<std::size_t>(2 * n)};
      p.objective = [ip, iq, n](std::span<const double> x) {
        const ComplexMatrix c = decode(x, n);
        const ComplexMatrix wp = ip.factor(c);
        const ComplexMatrix wq = iq.factor(c);
        const ComplexMatrix diff = wp * wp.adjoint() - wq * wq.adjoint();
        return fast_trace_norm_hermitian(diff) / c.squaredNorm();
      };
      break;
    case Measure::kTrace:
      p.layout.blocks = {static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n)};
      p.objective = [ip, iq, n](std::span<const double> x) {
        const auto half = static_cast<std::size_t>(2 * n);
        const ComplexMatrix u = decode(x.subspan(0, half), n);
        const ComplexMatrix v = decode(x.subspan(half, half), n);
        const ComplexMatrix pu = ip.factor(u), pv = ip.factor(v);
        const ComplexMatrix qu = iq.factor(u), qv = iq.factor(v);
        const ComplexMatrix diff = pu * pv.adjoint() - qu * qv.adjoint();
        return fast_trace_norm(diff) / std::sqrt(u.squaredNorm() * v.squaredNorm());
      };
      break;
    case Measure::kHatTrace:
    case Measure::kHatDiamond: {
      // Hat trace: a full square factor T of ρ = TT†/tr. Hat diamond: a pure
      // vector on H⊗H.
      const std::size_t len = m == Measure::kHatTrace
                                  ? static_cast<std::size_t>(2 * n * n)
                                  : static_cast<std::size_t>(2 * n);
      p.layout.blocks = {len};
      p.objective = [ip, iq, n](std::span<const double> x) {
        const ComplexMatrix c = decode(x, n);
        const ComplexMatrix wp = ip.factor(c);
        const ComplexMatrix wq = iq.factor(c);
        const ComplexMatrix diff = wp * wp.adjoint() / wp.squaredNorm() -
                                   wq * wq.adjoint() / wq.squaredNorm();
        return fast_trace_norm_hermitian(diff);
      };
      break;
    }
  }
  return p;
}

Witness witness_from(Measure m, const std::vector<double>& x, std::size_t n) {
  const auto rows = static_cast<Eigen::Index>(n);
  const std::span<const double> all(x);
  switch (m) {
    case Measure::kTrace: {
      const std::size_t half = 2 * n;
      return RankOnePair{PureState::normalized(as_vector(decode(all.subspan(0, half), rows))),
                         PureState::normalized(as_vector(decode(all.subspan(half, half), rows)))};
    }
    case Measure::kHatTrace:
      return DensityMatrix::from_factor(decode(all, rows));
    default:
      return PureState::normalized(as_vector(decode(all, rows)));
  }
}

DistanceEstimate optimize(Measure m, const Channel& psi, const Channel& phi,
                          const OptimizerConfig& cfg) {
  cfg.check();
  validate_pair(m, psi, phi);
  require_policy(m, psi);
  const Problem problem = make_problem(m, psi, phi);
  const MultiStartResult res = multi_start_maximize(problem.objective, problem.layout, cfg);
  const std::size_t n = is_stabilized(m) ? psi.dim_in() * psi.dim_in() : psi.dim_in();
  DistanceEstimate est;
  est.witness = witness_from(m, res.x, n);
  est.value = evaluate_witness(m, psi, phi, est.witness);
  est.restarts_used = res.restarts_used;
  est.converged = res.converged;
  est.measure = m;
  return est;
}

Channel zero_channel(std::size_t dim_in, std::size_t dim_out) {
  return Channel(dim_in, dim_out,
                 {ComplexMatrix::Zero(static_cast<Eigen::Index>(dim_out),
                                      static_cast<Eigen::Index>(dim_in))},
                 "zero");
}

std::size_t stabilized_ancilla(const Channel& psi, std::size_t witness_dim) {
  if (witness_dim == 0 || witness_dim % psi.dim_in() != 0) {
    throw InvalidInputError("evaluate_witness: witness dimension is not a multiple of dim_in");
  }
  return witness_dim / psi.dim_in();
}

}  // namespace

double output_distance(const Channel& psi, const Channel& phi, const ComplexMatrix& x) {
  return trace_norm(postdist::apply(psi, x) - postdist::apply(phi, x));
}

double renormalized_distance(const Channel& psi, const Channel& phi,
                             const ComplexMatrix& rho) {
  const ComplexMatrix a = postdist::apply(psi, rho);
  const ComplexMatrix b = postdist::apply(phi, rho);
  const double ta = a.trace().real();
  const double tb = b.trace().real();
  if (!(ta > 1e-12) || !(tb > 1e-12)) {
    throw NumericalDegeneracyError("postselection probability below 1e-12");
  }
  ComplexMatrix diff = a / ta - b / tb;
  diff = (diff + diff.adjoint()) * 0.5;
  return fast_trace_norm_hermitian(diff);
}

double rank_one_distance(const Channel& psi, const Channel& phi, const ComplexVector& u,
                         const ComplexVector& v) {
  return output_distance(psi, phi, u * v.adjoint());
}

double objective_f(const Channel& psi, const Channel& phi, const DensityMatrix& rho) {
  validate_pair(Measure::kHatTrace, psi, phi);
  if (rho.dim() != psi.dim_in()) {
    throw InvalidInputError("objective_f: state dimension != dim_in");
  }
  return renormalized_distance(psi, phi, rho.matrix());
}

std::vector<PolarizationTerm> polarization_states(const ComplexVector& u,
                                                  const ComplexVector& v) {
  static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<PolarizationTerm> out;
  for (const Complex& ph : kPhase) {
    const ComplexVector w = u + ph * v;
    const double sq = w.squaredNorm();
    if (sq > 1e-24) out.push_back({PureState::normalized(w), sq});
  }
  return out;
}

double evaluate_witness(Measure m, const Channel& psi, const Channel& phi,
                        const Witness& witness) {
  validate_pair(m, psi, phi);
  const std::size_t d = psi.dim_in();
  if (const auto* pair = std::get_if<RankOnePair>(&witness)) {
    if (m != Measure::kTrace) {
      throw InvalidInputError("evaluate_witness: rank-one pair only fits the trace measure");
    }
    if (pair->left.dim() != d || pair->right.dim() != d) {
      throw InvalidInputError("evaluate_witness: witness dimension != dim_in");
    }
    return rank_one_distance(psi, phi, pair->left.amplitudes(), pair->right.amplitudes());
  }
  const ComplexMatrix rho = std::holds_alternative<PureState>(witness)
                                ? std::get<PureState>(witness).projector()
                                : std::get<DensityMatrix>(witness).matrix();
  const auto wdim = static_cast<std::size_t>(rho.rows());
  if (is_stabilized(m)) {
    const std::size_t anc = stabilized_ancilla(psi, wdim);
    const Channel p = tensor_with_identity(psi, anc);
    const Channel q = tensor_with_identity(phi, anc);
    return m == Measure::kDiamond ? output_distance(p, q, rho)
                                  : renormalized_distance(p, q, rho);
  }
  if (wdim != d) throw InvalidInputError("evaluate_witness: witness dimension != dim_in");
  return m == Measure::kHatTrace ? renormalized_distance(psi, phi, rho)
                                 : output_distance(psi, phi, rho);
}

DistanceEstimate d_tr_D(const Channel& psi, const Channel& phi, const OptimizerConfig& cfg) {
  return optimize(Measure::kOperationalTrace, psi, phi, cfg);
}

DistanceEstimate d_tr(const Channel& psi, const Channel& phi, const OptimizerConfig& cfg) {
  return optimize(Measure::kTrace, psi, phi, cfg);
}

DistanceEstimate d_diamond(const Channel& psi, const Channel& phi,
                           const OptimizerConfig& cfg) {
  return optimize(Measure::kDiamond, psi, phi, cfg);
}

DistanceEstimate hat_d_tr(const Channel& psi, const Channel& phi,
                          const OptimizerConfig& cfg) {
  return optimize(Measure::kHatTrace, psi, phi, cfg);
}

DistanceEstimate hat_d_diamond(const Channel& psi, const Channel& phi,
                               const OptimizerConfig& cfg) {
  return optimize(Measure::kHatDiamond, psi, phi, cfg);
}

DistanceEstimate distance(Measure m, const Channel& psi, const Channel& phi,
                          const OptimizerConfig& cfg) {
  return optimize(m, psi, phi, cfg);
}

double diamond_norm_channel(const Channel& psi) {
  validate(psi, false);
  const double n = operator_norm(stinespring(psi).a);
  return n * n;
}

DistanceEstimate channel_norm_estimate(Measure m, const Channel& psi,
                                       const OptimizerConfig& cfg) {
  if (is_postselected(m)) {
    throw ParameterError("channel_norm_estimate: only linear measures induce a norm");
  }
  return optimize(m, psi, zero_channel(psi.dim_in(), psi.dim_out()), cfg);
}

DistanceEstimate output_diameter(const Channel& phi, const OptimizerConfig& cfg) {
  cfg.check();
  validate(phi, false);
  require_policy(Measure::kOperationalTrace, phi);
  const Image ip(phi);
  const auto n = static_cast<Eigen::Index>(phi.dim_in());
  const auto half = static_cast<std::size_t>(2 * n);
  ParameterLayout layout{{half, half}};
  const Objective objective = [ip, n, half](std::span<const double> x) {
    const ComplexMatrix u = decode(x.subspan(0, half), n);
    const ComplexMatrix v = decode(x.subspan(half, half), n);
    const ComplexMatrix wu = ip.factor(u);
    const ComplexMatrix wv = ip.factor(v);
    const ComplexMatrix diff =
        wu * wu.adjoint() / u.squaredNorm() - wv * wv.adjoint() / v.squaredNorm();
    return fast_trace_norm_hermitian(diff);
  };
  const MultiStartResult res = multi_start_maximize(objective, layout, cfg);
  const auto pair = std::get<RankOnePair>(witness_from(Measure::kTrace, res.x, phi.dim_in()));
  DistanceEstimate est;
  est.value = trace_norm(postdist::apply(phi, pair.left.projector()) - postdist::apply(phi, pair.right.projector()));
  est.witness = pair;
  est.restarts_used = res.restarts_used;
  est.converged = res.converged;
  est.measure = Measure::kOperationalTrace;
  return est;
}

double dense_oracle(Measure m, const Channel& psi, const Channel& phi,
                    std::size_t samples, std::uint64_t seed) {
  validate_pair(m, psi, phi);
  const std::size_t d = psi.dim_in();
  if (d > kMaxOracleDim || psi.dim_out() > kMaxOracleDim) {
    throw CapacityError("dense_oracle: dimensions above " + std::to_string(kMaxOracleDim) +
                        " are not supported");
  }
  const Problem problem = make_problem(m, psi, phi);
  const std::size_t n = is_stabilized(m) ? d * d : d;
  Rng rng(seed);
  std::vector<double> x;
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    if (m == Measure::kHatTrace) {
      // Factor ranks cycle through 1..d so that pure and low-rank states are
      // sampled as often as full-rank ones.
      const std::size_t k = 1 + s % d;
      ComplexMatrix t = ComplexMatrix::Zero(static_cast<Eigen::Index>(d),
                                            static_cast<Eigen::Index>(d));
      t.leftCols(static_cast<Eigen::Index>(k)) = ginibre(d, k, rng);
      x.assign(2 * d * d, 0.0);
      for (std::size_t i = 0; i < d * d; ++i) {
        x[2 * i] = t.data()[i].real();
        x[2 * i + 1] = t.data()[i].imag();
      }
    } else {
      const std::size_t blocks = m == Measure::kTrace ? 2 : 1;
      x.clear();
      for (std::size_t b = 0; b < blocks; ++b) {
        const ComplexVector v = random_unit_vector(n, rng);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
          x.push_back(v[i].real());
          x.push_back(v[i].imag());
        }
      }
    }
    best = std::max(best, problem.objective(x));
  }
  return best;
}

}  // namespace postdist

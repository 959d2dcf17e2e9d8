// Copyright 2026 The qdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdeg/degradability.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "qdeg/errors.hpp"

namespace qdeg {
namespace {

ComplexMatrix psd_projection(const ComplexMatrix& r, const Tolerance& tol) {
  const auto eig = hermitian_eigs(r, tol);
  const RealVector clipped = eig.values.cwiseMax(0.0);
  return eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
}

/// ||Tr_B R - I||_F for the Choi matrix of x.
double tp_deviation(const SuperOp& x) {
  return (trace_out_output(superop_to_choi(x)) -
          ComplexMatrix::Identity(x.d_in(), x.d_in()))
      .norm();
}

/// Stacked linear constraints on row_flatten(X): known * X = target and
/// X * row_flatten(I_out)^T = row_flatten(I_in)^T (trace preservation).
struct AffineConstraints {
  ComplexMatrix c;
  ComplexVector b;
};

AffineConstraints channel_constraints(const Problem& problem, int d_in, int d_out) {
  const ComplexMatrix& m = problem.known.matrix();
  const Eigen::Index rows = Eigen::Index(d_in) * d_in;
  const Eigen::Index cols = Eigen::Index(d_out) * d_out;
  AffineConstraints a;
  a.c = ComplexMatrix::Zero(m.rows() * cols + rows, rows * cols);
  a.b = ComplexVector::Zero(a.c.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index r = 0; r < rows; ++r)
      if (m(i, r) != Complex(0.0))
        for (Eigen::Index j = 0; j < cols; ++j) a.c(i * cols + j, r * cols + j) = m(i, r);
  a.b.head(m.rows() * cols) = col_flatten(problem.target.matrix());
  const Eigen::Index off = m.rows() * cols;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (int l = 0; l < d_out; ++l) a.c(off + r, r * cols + l * d_out + l) = 1.0;
    a.b(off + r) = (r / d_in == r % d_in) ? 1.0 : 0.0;
  }
  return a;
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kDegradable: return "degradable";
    case Mode::kAntidegradable: return "antidegradable";
    case Mode::kConjDegradable: return "conj-degradable";
    case Mode::kConjAntidegradable: return "conj-antidegradable";
  }
  return "unknown";
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kYes: return "YES";
    case Status::kNo: return "NO";
    case Status::kInconclusive: return "INCONCLUSIVE";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::kDegradable, Mode::kAntidegradable, Mode::kConjDegradable,
                 Mode::kConjAntidegradable}) {
    if (text == to_string(m)) return m;
  }
  throw ParseError("unknown mode '" + std::string(text) + "'");
}

SuperOp swap_superop(int d) {
  if (d < 1) throw DimensionMismatch("dimension must be positive");
  ComplexMatrix c = ComplexMatrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int mu = 0; mu < d; ++mu) c(k * d + mu, mu * d + k) = 1.0;
  return SuperOp(d, d, std::move(c));
}

Problem build_problem(const Channel& channel, const Channel& complement, Mode mode) {
  if (channel.d_in() != complement.d_in()) {
    throw DimensionMismatch("channel and complement must share the input space");
  }
  switch (mode) {
    case Mode::kDegradable:
      return {channel.superop(), complement.superop()};
    case Mode::kAntidegradable:
      return {complement.superop(), channel.superop()};
    case Mode::kConjDegradable:
      return {channel.superop(),
              compose(complement.superop(), swap_superop(complement.d_out()))};
    case Mode::kConjAntidegradable:
      return {complement.superop(),
              compose(channel.superop(), swap_superop(channel.d_out()))};
  }
  throw Error("unhandled mode");
}

CandidateMap candidate_map(const SuperOp& known, const SuperOp& target,
                           const Tolerance& tol) {
  if (known.d_in() != target.d_in()) {
    throw DimensionMismatch("known and target maps must share the input space");
  }
  SuperOp x(known.d_out(), target.d_out(),
            pseudoinverse(known.matrix(), tol) * target.matrix());
  const double residual = (known.matrix() * x.matrix() - target.matrix()).norm();
  return {std::move(x), residual <= tol.residual_tol, residual};
}

bool uniqueness(int d_a, int d_b, std::size_t rank_m) {
  const auto full = static_cast<std::size_t>(std::min(d_a * d_a, d_b * d_b));
  return rank_m == full && d_b <= d_a;
}

SuperOp KernelFamily::member(const ComplexVector& coefficients) const {
  if (coefficients.size() != basis.cols()) {
    throw DimensionMismatch("coefficient count does not match kernel dimension");
  }
  const ComplexVector x = col_flatten(base.matrix()) + basis * coefficients;
  return SuperOp(base.d_in(), base.d_out(),
                 unflatten(x, base.matrix().rows(), base.matrix().cols()));
}

KernelFamily kernel_family(const SuperOp& known, const SuperOp& target,
                           const Tolerance& tol) {
  CandidateMap cand = candidate_map(known, target, tol);
  if (!cand.consistent) {
    throw InconsistentSystem("known * X = target has no solution (residual " +
                             std::to_string(cand.residual) + ")");
  }
  // ker(known (x) I) = ker(known) (x) C^{cols}, flattened row-major.
  const ComplexMatrix k = kernel_basis(known.matrix(), tol);
  const Eigen::Index cols = target.matrix().cols();
  ComplexMatrix basis = ComplexMatrix::Zero(k.rows() * cols, k.cols() * cols);
  for (Eigen::Index v = 0; v < k.cols(); ++v) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (Eigen::Index i = 0; i < k.rows(); ++i) {
        basis(i * cols + j, v * cols + j) = k(i, v);
      }
    }
  }
  return {std::move(cand.map), std::move(basis)};
}

CertificateCheck verify_certificate(const SuperOp& known, const SuperOp& target,
                                    const SuperOp& certificate,
                                    const Tolerance& tol) {
  if (known.d_out() != certificate.d_in() || target.d_out() != certificate.d_out() ||
      known.d_in() != target.d_in()) {
    throw DimensionMismatch("certificate dimensions do not fit the problem");
  }
  CertificateCheck check;
  check.residual = (known.matrix() * certificate.matrix() - target.matrix()).norm();
  const ComplexMatrix r = superop_to_choi(certificate).matrix();
  check.min_eigenvalue = hermitian_eigs(r, tol).values(0);
  check.psd_floor = psd_floor(r, tol);
  check.tp_deviation = tp_deviation(certificate);
  check.valid = check.residual <= tol.residual_tol &&
                check.tp_deviation <= tol.residual_tol &&
                check.min_eigenvalue >= check.psd_floor;
  return check;
}

SearchOutcome kernel_search(const Problem& problem, const KernelFamily& family,
                            const SearchConfig& cfg) {
  const Tolerance& tol = cfg.tol;
  const int d_in = family.base.d_in();
  const int d_out = family.base.d_out();
  const auto k = static_cast<Eigen::Index>(family.dim());
  const AffineConstraints affine = channel_constraints(problem, d_in, d_out);
  const ComplexMatrix pinv = pseudoinverse(affine.c, tol);
  // Orthogonal projection onto the trace-preserving solutions.
  auto project = [&](const ComplexMatrix& x) {
    const ComplexVector v = col_flatten(x);
    return unflatten(v - pinv * (affine.c * v - affine.b), x.rows(), x.cols());
  };

  SearchOutcome outcome;
  outcome.best_min_eigenvalue = -std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    ComplexVector alpha = ComplexVector::Zero(k);
    if (restart > 0) {
      if (k == 0) break;
      std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(restart));
      std::normal_distribution<double> normal(0.0, cfg.step);
      for (Eigen::Index i = 0; i < k; ++i) alpha(i) = Complex(normal(rng), normal(rng));
    }
    ComplexMatrix x = family.member(alpha).matrix();
    for (int it = 0; it < cfg.max_iters; ++it) {
      SuperOp current(d_in, d_out, project(x));
      const ComplexMatrix r = hermitian_part(superop_to_choi(current).matrix());
      const double lambda = hermitian_eigs(r, tol).values(0);
      outcome.best_min_eigenvalue = std::max(outcome.best_min_eigenvalue, lambda);
      if (lambda >= psd_floor(r, tol) &&
          verify_certificate(problem.known, problem.target, current, tol).valid) {
        outcome.certificate = std::move(current);
        outcome.restart = restart;
        outcome.iterations = it;
        return outcome;
      }
      x = choi_to_superop(ChoiMatrix(d_in, d_out, psd_projection(r, tol))).matrix();
    }
  }
  return outcome;
}

double complementarity_defect(const Channel& c, const Channel& env, int samples,
                              std::uint64_t seed) {
  if (c.d_in() != env.d_in()) {
    throw DimensionMismatch("channel and environment must share the input space");
  }
  const int d = c.d_in();
  const int d_e = env.d_out();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    ComplexMatrix psi(d, d);  // psi(a, i): reference a, input i
    for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = Complex(normal(rng), normal(rng));
    psi /= psi.norm();
    ComplexMatrix joint = ComplexMatrix::Zero(d * d_e, d * d_e);
    for (const auto& k : env.kraus().operators()) {
      const ComplexVector w = col_flatten(psi * k.transpose());
      joint += w * w.adjoint();
    }
    const ComplexMatrix rho = psi.transpose() * psi.conjugate();
    const RealVector a = hermitian_eigs(joint).values.reverse();
    const RealVector b = hermitian_eigs(c(rho)).values.reverse();
    const Eigen::Index n = std::max(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = i < a.size() ? a(i) : 0.0;
      const double y = i < b.size() ? b(i) : 0.0;
      worst = std::max(worst, std::abs(x - y));
    }
  }
  return worst;
}

Verdict decide(const Query& query, const SearchConfig& cfg) {
  const Tolerance& tol = cfg.tol;
  tol.validate();
  const Channel& channel = query.channel;
  if (!channel.kraus().is_trace_preserving(tol)) {
    throw NotTP("decide requires a trace-preserving channel");
  }
  if (!is_cp(channel.choi(), tol).cp) {
    throw NotCP("decide requires a completely positive channel");
  }
  if (query.complement &&
      complementarity_defect(channel, *query.complement) > tol.residual_tol) {
    throw NotComplementary("supplied complement is not complementary to the channel");
  }
  const Channel comp = query.complement ? *query.complement : complement(channel, tol);
  const Problem problem = build_problem(channel, comp, query.mode);

  CandidateMap cand = candidate_map(problem.known, problem.target, tol);
  const std::size_t rank_m = numeric_rank(problem.known.matrix(), tol);
  const int d_a = problem.known.d_in();
  const int d_b = problem.known.d_out();
  const auto target_cols = static_cast<std::size_t>(problem.target.matrix().cols());
  const ComplexMatrix cand_choi = superop_to_choi(cand.map).matrix();

  Verdict v{
      .status = Status::kInconclusive,
      .mode = query.mode,
      .candidate = cand.map,
      .candidate_choi_eigs = hermitian_eigs(cand_choi, tol).values,
      .unique = uniqueness(d_a, d_b, rank_m),
      .kernel_dim = target_cols * (static_cast<std::size_t>(d_b * d_b) - rank_m),
      .certificate = std::nullopt,
      .residual = cand.residual,
      .consistent = cand.consistent,
      .reason = {},
  };

  if (!v.consistent) {
    v.status = Status::kNo;
    v.reason = "inconsistent";
    return v;
  }
  if (verify_certificate(problem.known, problem.target, cand.map, tol).valid) {
    v.status = Status::kYes;
    v.certificate = cand.map;
    v.reason = "candidate is a channel";
    return v;
  }
  if (v.unique) {
    v.status = Status::kNo;
    v.reason = "unique candidate is not completely positive";
    return v;
  }
  v.reason = "candidate is not a channel and the solution is not unique";
  if (cfg.enabled) {
    const KernelFamily family = kernel_family(problem.known, problem.target, tol);
    SearchOutcome found = kernel_search(problem, family, cfg);
    if (found.certificate) {
      v.status = Status::kYes;
      v.certificate = std::move(found.certificate);
      v.reason = "kernel search found a channel solution (restart " +
                 std::to_string(found.restart) + ")";
    } else {
      v.reason += "; kernel search found no certificate";
    }
  }
  return v;
}

ScreenReport ecd_screen(const Channel& channel, const Tolerance& tol) {
  if (!channel.kraus().is_trace_preserving(tol)) {
    throw NotTP("screen requires a trace-preserving channel");
  }
  // Minimal dilation, so d_e is the Choi rank.
  const Channel minimal = Channel::from_choi(channel.choi(), tol);
  const Channel comp = complement(minimal, tol);

  ScreenReport rep;
  rep.d_a = channel.d_in();
  rep.d_b = channel.d_out();
  rep.d_e = comp.d_out();
  rep.complement_choi_rank = choi_rank(comp, tol);
  rep.complement_ppt = is_ppt(comp.choi(), tol);
  if (rep.d_b <= rep.d_a) {
    rep.reasons.emplace_back("d_B <= d_A: conjugate degrading maps are unique");
  }
  if (rep.complement_choi_rank <= static_cast<std::size_t>(std::max(rep.d_a, rep.d_e))) {
    rep.reasons.emplace_back(
        "complement Choi rank <= max(d_A, d_E): PPT implies separable");
  }
  if (rep.d_a == 2 && rep.d_e == 2) {
    rep.reasons.emplace_back("d_A = d_E = 2: no bound entangled Choi matrix");
  }
  rep.hopeless = !rep.reasons.empty();
  return rep;
}

}  // namespace qdeg

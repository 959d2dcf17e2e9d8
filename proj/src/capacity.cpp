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

#include "qdeg/capacity.hpp"

#include <cmath>
#include <random>

#include "qdeg/errors.hpp"
#include "qdeg/zoo.hpp"

namespace qdeg {
namespace {

constexpr double kLogFloor = 1e-15;

double xlogx(double x, double base) {
  return x > 0.0 ? x * std::log(x) / std::log(base) : 0.0;
}

// Hermitian operator f(h) = V diag(-log max(lambda, floor)) V^dagger.
ComplexMatrix minus_log(const ComplexMatrix& h, const Tolerance& tol) {
  const auto eig = hermitian_eigs(h, tol);
  RealVector l(eig.values.size());
  for (Eigen::Index i = 0; i < l.size(); ++i) {
    l(i) = -std::log(std::max(eig.values(i), kLogFloor));
  }
  return eig.vectors * l.asDiagonal() * eig.vectors.adjoint();
}

// sum_i K_i^dagger X K_i.
ComplexMatrix adjoint_apply(const KrausSet& kraus, const ComplexMatrix& x) {
  ComplexMatrix out = ComplexMatrix::Zero(kraus.d_in(), kraus.d_in());
  for (const auto& k : kraus.operators()) out += k.adjoint() * x * k;
  return out;
}

ComplexMatrix gram_state(const ComplexMatrix& a) {
  const ComplexMatrix g = a * a.adjoint();
  return g / g.trace().real();
}

struct Objective {
  const Channel& channel;
  const Channel& env;
  double base;
  const Tolerance& tol;

  double value(const ComplexMatrix& rho) const {
    return von_neumann_entropy(channel(rho), base, tol) -
           von_neumann_entropy(env(rho), base, tol);
  }

  // dI = tr(G drho), up to a multiple of the identity.
  ComplexMatrix gradient(const ComplexMatrix& rho) const {
    const ComplexMatrix g = adjoint_apply(channel.kraus(), minus_log(channel(rho), tol)) -
                            adjoint_apply(env.kraus(), minus_log(env(rho), tol));
    return hermitian_part(g) / std::log(base);
  }
};

}  // namespace

std::string_view to_string(CapacityMethod method) {
  switch (method) {
    case CapacityMethod::kCovariantClosedForm: return "COVARIANT_CLOSED_FORM";
    case CapacityMethod::kCovariantMixedInput: return "COVARIANT_MIXED_INPUT";
    case CapacityMethod::kOptimized: return "OPTIMIZED";
  }
  return "unknown";
}

std::string_view to_string(CapacityStatus status) {
  switch (status) {
    case CapacityStatus::kProven: return "PROVEN";
    case CapacityStatus::kNumericalEvidence: return "NUMERICAL_EVIDENCE";
    case CapacityStatus::kOneShot: return "ONE_SHOT";
  }
  return "unknown";
}

double von_neumann_entropy(const ComplexMatrix& rho, double base, const Tolerance& tol) {
  if (!(base > 1.0)) throw OutOfRange("entropy base must exceed 1");
  const auto eig = hermitian_eigs(rho, tol);
  const double floor = -psd_floor(rho, tol);
  double h = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double l = eig.values(i);
    if (l > floor) h -= xlogx(l, base);
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho, double base, const Tolerance& tol) {
  return von_neumann_entropy(rho.matrix(), base, tol);
}

double coherent_information(const Channel& c, const DensityMatrix& rho, double base,
                            const Tolerance& tol) {
  if (rho.dim() != c.d_in()) {
    throw DimensionMismatch("state dimension does not match the channel input");
  }
  const Channel env = complement(c, tol);
  return von_neumann_entropy(c(rho.matrix()), base, tol) -
         von_neumann_entropy(env(rho.matrix()), base, tol);
}

CapacityResult covariant_capacity(const Channel& c, double base, const Tolerance& tol) {
  auto rho = DensityMatrix::maximally_mixed(c.d_in());
  const double v = coherent_information(c, rho, base, tol);
  return {v, std::move(rho), CapacityMethod::kCovariantMixedInput, CapacityStatus::kOneShot};
}

CapacityResult td_complement_capacity(int d, double t) {
  if (d != 2 && d != 3) throw Unsupported("closed-form capacity exists for d = 2, 3 only");
  const TDParams params(d, t);  // validates the CP interval
  double v = 0.0;
  if (d == 2) {
    const double a = (1.0 + t) / 4.0;
    const double b = (1.0 - 3.0 * t) / 4.0;
    v = -3.0 * xlogx(a, 2.0) - xlogx(b, 2.0) - 1.0;
  } else {
    const double a = (1.0 + 2.0 * t) / 9.0;
    const double b = (1.0 - 4.0 * t) / 9.0;
    v = -6.0 * xlogx(a, 3.0) - 3.0 * xlogx(b, 3.0) - 1.0;
  }
  const KnownRange range = known_antidegradable_range(d);
  CapacityStatus status = CapacityStatus::kOneShot;
  if (range.contains(t)) {
    status = range.status == EvidenceStatus::kProven ? CapacityStatus::kProven
                                                     : CapacityStatus::kNumericalEvidence;
  }
  return {v, DensityMatrix::maximally_mixed(d), CapacityMethod::kCovariantClosedForm, status};
}

CapacityResult one_shot_optimize(const Channel& c, const OptimizerConfig& cfg, double base,
                                 const Tolerance& tol) {
  if (cfg.restarts < 1 || cfg.max_iters < 0) {
    throw OutOfRange("optimizer needs at least one restart");
  }
  const Channel env = complement(c, tol);
  const Objective f{c, env, base, tol};
  const int d = c.d_in();

  ComplexMatrix best_rho = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  double best = f.value(best_rho);

  for (int r = 0; r < cfg.restarts; ++r) {
    ComplexMatrix a = ComplexMatrix::Identity(d, d);
    if (r > 0) {
      std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(r));
      std::normal_distribution<double> normal;
      for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = Complex(normal(rng), normal(rng));
    }
    a /= a.norm();
    ComplexMatrix rho = gram_state(a);
    double val = f.value(rho);
    double step = 1.0;
    for (int it = 0; it < cfg.max_iters && step > 1e-12; ++it) {
      // With rho = A A^dagger / |A|^2 the ascent direction in A is
      // (G - tr(G rho)) A.
      const ComplexMatrix g = f.gradient(rho);
      const Complex shift = (g * rho).trace();
      const ComplexMatrix dir =
          (g - shift * ComplexMatrix::Identity(d, d)) * a;
      if (dir.norm() < 1e-13) break;
      bool improved = false;
      while (step > 1e-12) {
        ComplexMatrix trial = a + step * dir;
        trial /= trial.norm();
        const ComplexMatrix trial_rho = gram_state(trial);
        const double tv = f.value(trial_rho);
        if (tv > val) {
          a = std::move(trial);
          rho = trial_rho;
          const bool tiny = tv - val < 1e-15;
          val = tv;
          step *= 2.0;
          improved = !tiny;
          break;
        }
        step *= 0.5;
      }
      if (!improved) break;
    }
    if (val > best) {
      best = val;
      best_rho = rho;
    }
  }
  return {best, DensityMatrix::from_matrix(hermitian_part(best_rho), tol),
          CapacityMethod::kOptimized, CapacityStatus::kOneShot};
}

}  // namespace qdeg

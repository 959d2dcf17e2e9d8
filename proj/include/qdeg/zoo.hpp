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

#pragma once

#include <utility>

#include "qdeg/channel.hpp"

namespace qdeg {

/// Qudit transpose-depolarizing parameters: rho -> t rho^T + (1 - t) I / d.
/// Construction enforces -1/(d-1) <= t <= 1/(d+1); throws OutOfCPRange.
struct TDParams {
  TDParams(int d, double t);
  int d;
  double t;
};

/// Qudit depolarizing parameters: rho -> s rho + (1 - s) I / d,
/// -1/(d^2-1) <= s <= 1.
struct DepolParams {
  DepolParams(int d, double s);
  int d;
  double s;
};

/// Optimal asymmetric 1 -> 1+1 qubit cloner parametrization.
struct ClonerParams {
  double p = 0.0;
  double alpha = 0.0;  // sqrt(p^2 / (2 (1 - p + p^2)))
  double beta = 0.0;   // sqrt((1 - p)^2 / (2 (1 - p + p^2)))
  double t = 0.0;      // 2 alpha beta = p (1 - p) / (1 - p + p^2)

  /// (sqrt2 alpha, sqrt2 beta): the point on alpha^2 + alpha beta + beta^2 = 1
  /// for which mixed_symmetry_map is trace preserving.
  std::pair<double, double> on_unit_ellipse() const;
};

ClonerParams cloner_params(double p);

Channel td_channel(const TDParams& params);

/// The transpose-depolarizing channel with a fixed d^2-dimensional
/// environment: one Kraus operator per symmetric / antisymmetric basis
/// vector, zero operators included. Its complement always has d_out = d^2.
Channel td_channel_fixed_environment(const TDParams& params);

Channel depolarizing(const DepolParams& params);

/// The literal 4x4 complementary output of the qubit TD channel; constant
/// entries are scaled by Tr rho so the map is linear on all 2x2 inputs.
ComplexMatrix td_complement_qubit_output(double t, const ComplexMatrix& rho);

/// Channel C^2 -> C^4 whose action is td_complement_qubit_output.
Channel td_complement_qubit(double t, const Tolerance& tol = {});

/// (1/d) W (I (x) rho) W^dagger with W = (alpha+beta) P_sym + (alpha-beta) P_alt.
ComplexMatrix mixed_symmetry_map(double alpha, double beta, int d,
                                 const ComplexMatrix& rho);

enum class EvidenceStatus { kProven, kNumericalEvidence };

struct KnownRange {
  double lo = 0.0;
  double hi = 0.0;
  EvidenceStatus status = EvidenceStatus::kProven;

  bool contains(double t, double slack = 1e-12) const {
    return t >= lo - slack && t <= hi + slack;
  }
};

/// Antidegradability interval of the TD channel for d = 2 (proven) and
/// d = 3 (numerical evidence). Throws Unsupported otherwise.
KnownRange known_antidegradable_range(int d);

/// exp(i pi/2 sigma_Y): conjugating the qubit depolarizing channel at
/// s = -t by this unitary gives the qubit TD channel at t.
ComplexMatrix depolarizing_to_td_rotation();

}  // namespace qdeg

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

#include <cstdint>
#include <string_view>

#include "qdeg/channel.hpp"

namespace qdeg {

enum class CapacityMethod { kCovariantClosedForm, kCovariantMixedInput, kOptimized };

/// kProven and kNumericalEvidence mark values that are believed to be the
/// quantum capacity; kOneShot marks a plain coherent-information value
/// (a lower bound, possibly negative).
enum class CapacityStatus { kProven, kNumericalEvidence, kOneShot };

std::string_view to_string(CapacityMethod method);
std::string_view to_string(CapacityStatus status);

struct CapacityResult {
  double value = 0.0;
  DensityMatrix input_state = DensityMatrix::maximally_mixed(1);
  CapacityMethod method = CapacityMethod::kCovariantMixedInput;
  CapacityStatus status = CapacityStatus::kOneShot;
};

struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 400;
  std::uint64_t seed = 0;
};

/// -sum lambda log_base lambda. Eigenvalues below the PSD floor are
/// clipped to zero; the spectrum is not renormalized.
double von_neumann_entropy(const DensityMatrix& rho, double base = 2.0,
                           const Tolerance& tol = {});
/// Same for an arbitrary Hermitian operator (channel outputs).
double von_neumann_entropy(const ComplexMatrix& rho, double base = 2.0,
                           const Tolerance& tol = {});

/// H(c(rho)) - H(c^(rho)).
double coherent_information(const Channel& c, const DensityMatrix& rho,
                            double base = 2.0, const Tolerance& tol = {});

/// Coherent information at I/d_in. Covariance is the caller's claim.
CapacityResult covariant_capacity(const Channel& c, double base = 2.0,
                                  const Tolerance& tol = {});

/// Closed-form capacity of the TD complement: base 2 for d = 2, base 3 for
/// d = 3. Throws OutOfCPRange outside the CP interval of the TD channel and
/// Unsupported for other d.
CapacityResult td_complement_capacity(int d, double t);

/// Best coherent information over Gram-parametrized inputs, starting from
/// I/d and from seeded random states, refined by gradient ascent.
CapacityResult one_shot_optimize(const Channel& c, const OptimizerConfig& cfg,
                                 double base = 2.0, const Tolerance& tol = {});

}  // namespace qdeg

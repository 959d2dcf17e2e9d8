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

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace qdeg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using ComplexRowVector = Eigen::RowVectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every module.
///
/// rank_tol is a singular-value cutoff relative to the largest singular
/// value, psd_tol an eigenvalue floor relative to the trace and
/// residual_tol an absolute Frobenius-norm bound on equation residuals.
struct Tolerance {
  double rank_tol = 1e-10;
  double psd_tol = 1e-9;
  double residual_tol = 1e-9;

  /// Throws OutOfRange unless all three thresholds are strictly positive.
  void validate() const;

  /// Named profiles: "default", "strict", "loose".
  static Tolerance from_profile(std::string_view name);

  /// Profile named by QDEG_TOLERANCE_PROFILE, or the default one.
  static Tolerance from_env();
};

/// Eigenvalue floor -psd_tol * |trace| used by every PSD test.
double psd_floor(const ComplexMatrix& m, const Tolerance& tol);

bool all_finite(const ComplexMatrix& m);

/// Row-major flattening: component k * cols + mu holds A(k, mu).
ComplexRowVector row_flatten(const ComplexMatrix& a);

/// Same components as row_flatten, as a column.
ComplexVector col_flatten(const ComplexMatrix& a);

/// Inverse of row/col flattening. Throws DimensionMismatch on bad sizes.
ComplexMatrix unflatten(const ComplexVector& v, Eigen::Index rows,
                        Eigen::Index cols);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Moore-Penrose inverse through an SVD truncated at rank_tol.
ComplexMatrix pseudoinverse(const ComplexMatrix& a, const Tolerance& tol = {});

/// Number of singular values above rank_tol * sigma_max.
std::size_t numeric_rank(const ComplexMatrix& a, const Tolerance& tol = {});

/// Orthonormal null-space basis, one vector per column.
ComplexMatrix kernel_basis(const ComplexMatrix& a, const Tolerance& tol = {});

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // column i pairs with values(i)
};

enum class HermitianCheck { kSymmetrize, kStrict };

/// Eigen-decomposition of a Hermitian matrix. The input is replaced by
/// (H + H^dagger) / 2 first; in strict mode a Frobenius asymmetry above
/// residual_tol raises NotHermitian instead.
HermitianEigen hermitian_eigs(const ComplexMatrix& h, const Tolerance& tol = {},
                              HermitianCheck check = HermitianCheck::kSymmetrize);

/// (H + H^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& h);

}  // namespace qdeg

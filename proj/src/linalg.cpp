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

#include "qdeg/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qdeg/errors.hpp"

namespace qdeg {
namespace {

using Svd = Eigen::BDCSVD<ComplexMatrix>;

Svd full_svd(const ComplexMatrix& a) {
  return Svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

std::size_t count_above_cutoff(const RealVector& sv, double rank_tol) {
  if (sv.size() == 0) return 0;
  const double cutoff = rank_tol * sv(0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) ++r;
  }
  return r;
}

}  // namespace

void Tolerance::validate() const {
  if (!(rank_tol > 0.0) || !(psd_tol > 0.0) || !(residual_tol > 0.0)) {
    throw OutOfRange("tolerances must be strictly positive");
  }
}

Tolerance Tolerance::from_profile(std::string_view name) {
  if (name.empty() || name == "default") return Tolerance{};
  if (name == "strict") return Tolerance{1e-12, 1e-11, 1e-11};
  if (name == "loose") return Tolerance{1e-8, 1e-7, 1e-7};
  throw ParseError("unknown tolerance profile '" + std::string(name) + "'");
}

Tolerance Tolerance::from_env() {
  const char* profile = std::getenv("QDEG_TOLERANCE_PROFILE");
  return from_profile(profile == nullptr ? std::string_view{} : profile);
}

double psd_floor(const ComplexMatrix& m, const Tolerance& tol) {
  const double tr = std::abs(m.trace());
  return -tol.psd_tol * (tr > 0.0 ? tr : 1.0);
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

ComplexRowVector row_flatten(const ComplexMatrix& a) {
  ComplexRowVector out(a.size());
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    for (Eigen::Index mu = 0; mu < a.cols(); ++mu) {
      out(k * a.cols() + mu) = a(k, mu);
    }
  }
  return out;
}

ComplexVector col_flatten(const ComplexMatrix& a) {
  return row_flatten(a).transpose();
}

ComplexMatrix unflatten(const ComplexVector& v, Eigen::Index rows,
                        Eigen::Index cols) {
  if (rows <= 0 || cols <= 0 || v.size() != rows * cols) {
    throw DimensionMismatch("cannot unflatten vector of length " +
                            std::to_string(v.size()) + " into " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index k = 0; k < rows; ++k) {
    for (Eigen::Index mu = 0; mu < cols; ++mu) out(k, mu) = v(k * cols + mu);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix pseudoinverse(const ComplexMatrix& a, const Tolerance& tol) {
  ComplexMatrix out = ComplexMatrix::Zero(a.cols(), a.rows());
  if (a.size() == 0) return out;
  const Svd svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const std::size_t r = count_above_cutoff(sv, tol.rank_tol);
  for (std::size_t i = 0; i < r; ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    out += (svd.matrixV().col(idx) / sv(idx)) *
           svd.matrixU().col(idx).adjoint();
  }
  return out;
}

std::size_t numeric_rank(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  const Svd svd(a);
  return count_above_cutoff(svd.singularValues(), tol.rank_tol);
}

ComplexMatrix kernel_basis(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.cols() == 0) return ComplexMatrix(0, 0);
  if (a.rows() == 0) return ComplexMatrix::Identity(a.cols(), a.cols());
  const Svd svd = full_svd(a);
  const auto r =
      static_cast<Eigen::Index>(count_above_cutoff(svd.singularValues(), tol.rank_tol));
  return svd.matrixV().rightCols(a.cols() - r);
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  return (h + h.adjoint()) / 2.0;
}

HermitianEigen hermitian_eigs(const ComplexMatrix& h, const Tolerance& tol,
                              HermitianCheck check) {
  if (h.rows() != h.cols()) {
    throw DimensionMismatch("hermitian_eigs needs a square matrix");
  }
  if (check == HermitianCheck::kStrict &&
      (h - h.adjoint()).norm() > tol.residual_tol) {
    throw NotHermitian("matrix is not Hermitian within residual_tol");
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(h));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace qdeg

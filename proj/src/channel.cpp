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

#include "qdeg/channel.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qdeg/errors.hpp"

namespace qdeg {
namespace {

std::string dims(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) throw Error(std::string(what) + " has non-finite entries");
}

void require_square_of(const ComplexMatrix& rho, int dim, const char* what) {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw DimensionMismatch(std::string(what) + ": expected " + dims(dim, dim) +
                            " input, got " + dims(rho.rows(), rho.cols()));
  }
}

// Phase a vector so that its first non-negligible component is real positive.
void fix_phase(ComplexVector& v) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-8 * scale) {
      v *= std::conj(v(i)) / std::abs(v(i));
      return;
    }
  }
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m,
                                         const Tolerance& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionMismatch("density matrix must be square and non-empty");
  }
  require_finite(m, "density matrix");
  if ((m - m.adjoint()).norm() > tol.residual_tol) {
    throw NotHermitian("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0)) > tol.residual_tol) {
    throw Error("density matrix trace differs from 1");
  }
  const ComplexMatrix h = hermitian_part(m);
  if (hermitian_eigs(h, tol).values(0) < psd_floor(h, tol)) {
    throw Error("density matrix is not positive semidefinite");
  }
  return DensityMatrix(h);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) throw DimensionMismatch("dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / double(dim));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.squaredNorm();
  if (psi.size() == 0 || !(n > 0.0)) throw Error("pure state needs a nonzero vector");
  return DensityMatrix(psi * psi.adjoint() / n);
}

ComplexMatrix maximally_entangled(int dim) {
  ComplexVector phi = ComplexVector::Zero(dim * dim);
  for (int i = 0; i < dim; ++i) phi(i * dim + i) = 1.0;
  return phi * phi.adjoint();
}

KrausSet::KrausSet(int d_in, int d_out, std::vector<ComplexMatrix> operators)
    : d_in_(d_in), d_out_(d_out), operators_(std::move(operators)) {
  if (d_in_ <= 0 || d_out_ <= 0) throw DimensionMismatch("dimensions must be positive");
  if (operators_.empty()) throw Error("Kraus set must not be empty");
  for (const auto& k : operators_) {
    if (k.rows() != d_out_ || k.cols() != d_in_) {
      throw DimensionMismatch("Kraus operator is " + dims(k.rows(), k.cols()) +
                              ", expected " + dims(d_out_, d_in_));
    }
    require_finite(k, "Kraus operator");
  }
}

KrausSet::KrausSet(std::vector<ComplexMatrix> operators)
    : d_in_(operators.empty() ? 1 : static_cast<int>(operators.front().cols())),
      d_out_(operators.empty() ? 1 : static_cast<int>(operators.front().rows())) {
  *this = KrausSet(d_in_, d_out_, std::move(operators));
}

ComplexMatrix KrausSet::completeness_defect() const {
  ComplexMatrix sum = -ComplexMatrix::Identity(d_in_, d_in_);
  for (const auto& k : operators_) sum += k.adjoint() * k;
  return sum;
}

bool KrausSet::is_trace_preserving(const Tolerance& tol) const {
  return completeness_defect().norm() <= tol.residual_tol;
}

ChoiMatrix::ChoiMatrix(int d_in, int d_out, ComplexMatrix matrix)
    : d_in_(d_in), d_out_(d_out), matrix_(std::move(matrix)) {
  const int n = d_in_ * d_out_;
  if (d_in_ <= 0 || d_out_ <= 0 || matrix_.rows() != n || matrix_.cols() != n) {
    throw DimensionMismatch("Choi matrix must be " + dims(n, n) + ", got " +
                            dims(matrix_.rows(), matrix_.cols()));
  }
  require_finite(matrix_, "Choi matrix");
}

SuperOp::SuperOp(int d_in, int d_out, ComplexMatrix matrix)
    : d_in_(d_in), d_out_(d_out), matrix_(std::move(matrix)) {
  if (d_in_ <= 0 || d_out_ <= 0 || matrix_.rows() != d_in_ * d_in_ ||
      matrix_.cols() != d_out_ * d_out_) {
    throw DimensionMismatch("superoperator must be " +
                            dims(d_in_ * d_in_, d_out_ * d_out_) + ", got " +
                            dims(matrix_.rows(), matrix_.cols()));
  }
  require_finite(matrix_, "superoperator");
}

Channel::Channel(KrausSet kraus, std::string label)
    : kraus_(std::move(kraus)),
      choi_(kraus_to_choi(kraus_)),
      superop_(choi_to_superop(choi_)),
      label_(std::move(label)) {}

Channel Channel::from_choi(const ChoiMatrix& choi, const Tolerance& tol,
                           std::string label) {
  return Channel(choi_to_kraus(choi, tol), std::move(label));
}

ComplexMatrix Channel::operator()(const ComplexMatrix& rho) const {
  return apply(superop_, rho);
}

ChoiMatrix kraus_to_choi(const KrausSet& kraus) {
  const int n = kraus.d_in() * kraus.d_out();
  ComplexMatrix r = ComplexMatrix::Zero(n, n);
  for (const auto& k : kraus.operators()) {
    const ComplexVector v = col_flatten(k.transpose());
    r += v * v.adjoint();
  }
  return ChoiMatrix(kraus.d_in(), kraus.d_out(), std::move(r));
}

KrausSet choi_to_kraus(const ChoiMatrix& choi, const Tolerance& tol) {
  const auto eig = hermitian_eigs(choi.matrix(), tol);
  const double floor = psd_floor(choi.matrix(), tol);
  if (eig.values(0) < floor) {
    throw NotCP("Choi matrix has eigenvalue " + std::to_string(eig.values(0)));
  }
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index i = eig.values.size() - 1; i >= 0; --i) {
    const double lambda = eig.values(i);
    if (lambda <= -floor) break;
    ComplexVector v = eig.vectors.col(i);
    fix_phase(v);
    ops.push_back(std::sqrt(lambda) *
                  unflatten(v, choi.d_in(), choi.d_out()).transpose());
  }
  if (ops.empty()) {
    ops.push_back(ComplexMatrix::Zero(choi.d_out(), choi.d_in()));
  }
  return KrausSet(choi.d_in(), choi.d_out(), std::move(ops));
}

SuperOp choi_to_superop(const ChoiMatrix& choi) {
  const int a = choi.d_in();
  const int b = choi.d_out();
  ComplexMatrix m(a * a, b * b);
  const ComplexMatrix& r = choi.matrix();
  for (int k = 0; k < a; ++k)
    for (int mu = 0; mu < a; ++mu)
      for (int l = 0; l < b; ++l)
        for (int nu = 0; nu < b; ++nu)
          m(k * a + mu, l * b + nu) = r(k * b + l, mu * b + nu);
  return SuperOp(a, b, std::move(m));
}

ChoiMatrix superop_to_choi(const SuperOp& superop) {
  const int a = superop.d_in();
  const int b = superop.d_out();
  ComplexMatrix r(a * b, a * b);
  const ComplexMatrix& m = superop.matrix();
  for (int k = 0; k < a; ++k)
    for (int mu = 0; mu < a; ++mu)
      for (int l = 0; l < b; ++l)
        for (int nu = 0; nu < b; ++nu)
          r(k * b + l, mu * b + nu) = m(k * a + mu, l * b + nu);
  return ChoiMatrix(a, b, std::move(r));
}

SuperOp identity_superop(int dim) {
  return SuperOp(dim, dim, ComplexMatrix::Identity(dim * dim, dim * dim));
}

ComplexMatrix apply(const SuperOp& m, const ComplexMatrix& rho) {
  require_square_of(rho, m.d_in(), "apply");
  const ComplexRowVector out = row_flatten(rho) * m.matrix();
  return unflatten(out.transpose(), m.d_out(), m.d_out());
}

ComplexMatrix apply(const SuperOp& m, const DensityMatrix& rho) {
  return apply(m, rho.matrix());
}

ComplexMatrix apply_choi(const ChoiMatrix& r, const ComplexMatrix& rho) {
  require_square_of(rho, r.d_in(), "apply_choi");
  const int a = r.d_in();
  const int b = r.d_out();
  ComplexMatrix sigma = ComplexMatrix::Zero(b, b);
  for (int k = 0; k < a; ++k)
    for (int mu = 0; mu < a; ++mu)
      sigma += rho(k, mu) * r.matrix().block(k * b, mu * b, b, b);
  return sigma;
}

ComplexMatrix apply_choi(const ChoiMatrix& r, const DensityMatrix& rho) {
  return apply_choi(r, rho.matrix());
}

SuperOp compose(const SuperOp& first, const SuperOp& second) {
  if (first.d_out() != second.d_in()) {
    throw DimensionMismatch("compose: output dimension " +
                            std::to_string(first.d_out()) +
                            " does not match input dimension " +
                            std::to_string(second.d_in()));
  }
  return SuperOp(first.d_in(), second.d_out(), first.matrix() * second.matrix());
}

Channel complement(const KrausSet& kraus, const Tolerance& tol) {
  if (!kraus.is_trace_preserving(tol)) {
    throw NotTP("complement requires a trace-preserving Kraus set");
  }
  const int env = static_cast<int>(kraus.size());
  std::vector<ComplexMatrix> ops;
  ops.reserve(kraus.d_out());
  for (int j = 0; j < kraus.d_out(); ++j) {
    ComplexMatrix kj(env, kraus.d_in());
    for (int e = 0; e < env; ++e) kj.row(e) = kraus[e].row(j);
    ops.push_back(std::move(kj));
  }
  return Channel(KrausSet(kraus.d_in(), env, std::move(ops)), "complement");
}

Channel complement(const Channel& channel, const Tolerance& tol) {
  Channel c = complement(channel.kraus(), tol);
  if (channel.label().empty()) return c;
  return Channel(c.kraus(), "complement of " + channel.label());
}

CpReport is_cp(const ChoiMatrix& r, const Tolerance& tol) {
  const double lambda = hermitian_eigs(r.matrix(), tol).values(0);
  return {lambda >= psd_floor(r.matrix(), tol), lambda};
}

ComplexMatrix trace_out_output(const ChoiMatrix& r) {
  const int a = r.d_in();
  const int b = r.d_out();
  ComplexMatrix out(a, a);
  for (int k = 0; k < a; ++k)
    for (int mu = 0; mu < a; ++mu)
      out(k, mu) = r.matrix().block(k * b, mu * b, b, b).trace();
  return out;
}

TpReport is_tp(const ChoiMatrix& r, const Tolerance& tol) {
  const double dev =
      (trace_out_output(r) - ComplexMatrix::Identity(r.d_in(), r.d_in())).norm();
  return {dev <= tol.residual_tol, dev};
}

bool is_unital(const Channel& c, const Tolerance& tol) {
  const ComplexMatrix out = c(DensityMatrix::maximally_mixed(c.d_in()).matrix());
  return (out - DensityMatrix::maximally_mixed(c.d_out()).matrix()).norm() <=
         tol.residual_tol;
}

std::size_t choi_rank(const Channel& c, const Tolerance& tol) {
  return numeric_rank(c.choi().matrix(), tol);
}

ComplexMatrix partial_transpose(const ChoiMatrix& r, Subsystem which) {
  const int a = r.d_in();
  const int b = r.d_out();
  ComplexMatrix out(a * b, a * b);
  for (int k = 0; k < a; ++k)
    for (int mu = 0; mu < a; ++mu)
      for (int l = 0; l < b; ++l)
        for (int nu = 0; nu < b; ++nu)
          out(k * b + l, mu * b + nu) =
              which == Subsystem::kA ? r.matrix()(mu * b + l, k * b + nu)
                                     : r.matrix()(k * b + nu, mu * b + l);
  return out;
}

bool is_ppt(const ChoiMatrix& r, const Tolerance& tol) {
  const ComplexMatrix pt = partial_transpose(r, Subsystem::kB);
  return hermitian_eigs(pt, tol).values(0) >= psd_floor(pt, tol);
}

}  // namespace qdeg

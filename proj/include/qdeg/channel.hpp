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

#include <cstddef>
#include <string>
#include <vector>

#include "qdeg/linalg.hpp"

namespace qdeg {

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity, the PSD floor and unit trace. Throws Error.
  static DensityMatrix from_matrix(const ComplexMatrix& m,
                                   const Tolerance& tol = {});
  static DensityMatrix maximally_mixed(int dim);
  /// |psi><psi| for a (not necessarily normalized) vector.
  static DensityMatrix pure(const ComplexVector& psi);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// The unnormalized maximally entangled projector sum_ij |ii><jj| (trace d).
ComplexMatrix maximally_entangled(int dim);

/// Ordered Kraus operators, each d_out x d_in.
class KrausSet {
 public:
  KrausSet(int d_in, int d_out, std::vector<ComplexMatrix> operators);
  /// Infers dimensions from the first operator.
  explicit KrausSet(std::vector<ComplexMatrix> operators);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  std::size_t size() const { return operators_.size(); }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  const ComplexMatrix& operator[](std::size_t i) const { return operators_[i]; }

  /// sum_i K_i^dagger K_i - I, whose Frobenius norm measures TP violation.
  ComplexMatrix completeness_defect() const;
  bool is_trace_preserving(const Tolerance& tol = {}) const;

 private:
  int d_in_;
  int d_out_;
  std::vector<ComplexMatrix> operators_;
};

/// Choi matrix in the basis |k><mu|_A (x) |l><nu|_B; row index k * d_out + l.
/// Unnormalized: a trace-preserving channel has trace d_in.
class ChoiMatrix {
 public:
  ChoiMatrix(int d_in, int d_out, ComplexMatrix matrix);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  int d_in_;
  int d_out_;
  ComplexMatrix matrix_;
};

/// d_in^2 x d_out^2 matrix acting from the right on row-flattened inputs.
/// Row index k * d_in + mu, column index l * d_out + nu.
class SuperOp {
 public:
  SuperOp(int d_in, int d_out, ComplexMatrix matrix);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  int d_in_;
  int d_out_;
  ComplexMatrix matrix_;
};

/// Immutable channel holding all three representations.
class Channel {
 public:
  explicit Channel(KrausSet kraus, std::string label = {});

  /// Builds the eigen-Kraus representative (see choi_to_kraus).
  static Channel from_choi(const ChoiMatrix& choi, const Tolerance& tol = {},
                           std::string label = {});

  int d_in() const { return kraus_.d_in(); }
  int d_out() const { return kraus_.d_out(); }
  const KrausSet& kraus() const { return kraus_; }
  const ChoiMatrix& choi() const { return choi_; }
  const SuperOp& superop() const { return superop_; }
  const std::string& label() const { return label_; }

  /// Channel output for an arbitrary d_in x d_in operator.
  ComplexMatrix operator()(const ComplexMatrix& rho) const;

 private:
  KrausSet kraus_;
  ChoiMatrix choi_;
  SuperOp superop_;
  std::string label_;
};

ChoiMatrix kraus_to_choi(const KrausSet& kraus);

/// Eigen-Kraus extraction: K_i = sqrt(lambda_i) unvec(v_i) for eigenvalues
/// above psd_tol * trace, sorted descending, each eigenvector phased so
/// that its first non-negligible component is real positive. Throws NotCP
/// when an eigenvalue falls below the PSD floor.
KrausSet choi_to_kraus(const ChoiMatrix& choi, const Tolerance& tol = {});

SuperOp choi_to_superop(const ChoiMatrix& choi);
ChoiMatrix superop_to_choi(const SuperOp& superop);

SuperOp identity_superop(int dim);

ComplexMatrix apply(const SuperOp& m, const ComplexMatrix& rho);
ComplexMatrix apply(const SuperOp& m, const DensityMatrix& rho);

/// Tr_A[(rho^T (x) I_B) R].
ComplexMatrix apply_choi(const ChoiMatrix& r, const ComplexMatrix& rho);
ComplexMatrix apply_choi(const ChoiMatrix& r, const DensityMatrix& rho);

/// first then second: result matrix is first.matrix() * second.matrix().
SuperOp compose(const SuperOp& first, const SuperOp& second);

/// Complementary channel with (K^_j)_{e,i} = (K_e)_{j,i}; d_out = |kraus|.
/// Throws NotTP if the Kraus set is not trace preserving.
Channel complement(const KrausSet& kraus, const Tolerance& tol = {});
Channel complement(const Channel& channel, const Tolerance& tol = {});

struct CpReport {
  bool cp = false;
  double min_eigenvalue = 0.0;
};

struct TpReport {
  bool tp = false;
  double deviation = 0.0;  // ||Tr_B R - I_A||_F
};

CpReport is_cp(const ChoiMatrix& r, const Tolerance& tol = {});
TpReport is_tp(const ChoiMatrix& r, const Tolerance& tol = {});
bool is_unital(const Channel& c, const Tolerance& tol = {});

/// Tr_B R, a d_in x d_in matrix.
ComplexMatrix trace_out_output(const ChoiMatrix& r);

std::size_t choi_rank(const Channel& c, const Tolerance& tol = {});

enum class Subsystem { kA, kB };

ComplexMatrix partial_transpose(const ChoiMatrix& r, Subsystem which);
bool is_ppt(const ChoiMatrix& r, const Tolerance& tol = {});

}  // namespace qdeg

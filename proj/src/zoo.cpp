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

#include "qdeg/zoo.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <string>
#include <vector>

#include "qdeg/errors.hpp"

namespace qdeg {
namespace {

constexpr double kSlack = 1e-12;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ComplexMatrix swap_matrix(int d) {
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
  return s;
}

ComplexMatrix td_choi(int d, double t) {
  return t * swap_matrix(d) +
         ((1.0 - t) / d) * ComplexMatrix::Identity(d * d, d * d);
}

}  // namespace

TDParams::TDParams(int d_, double t_) : d(d_), t(t_) {
  if (d < 2) throw OutOfRange("TD channel needs d >= 2");
  const double lo = -1.0 / (d - 1);
  const double hi = 1.0 / (d + 1);
  if (!(t >= lo - kSlack && t <= hi + kSlack)) {
    throw OutOfCPRange("t=" + num(t) + " outside CP range [" + num(lo) + ", " +
                       num(hi) + "] for d=" + std::to_string(d));
  }
}

DepolParams::DepolParams(int d_, double s_) : d(d_), s(s_) {
  if (d < 2) throw OutOfRange("depolarizing channel needs d >= 2");
  const double lo = -1.0 / (d * d - 1);
  if (!(s >= lo - kSlack && s <= 1.0 + kSlack)) {
    throw OutOfCPRange("s=" + num(s) + " outside CP range [" + num(lo) +
                       ", 1] for d=" + std::to_string(d));
  }
}

std::pair<double, double> ClonerParams::on_unit_ellipse() const {
  return {std::sqrt(2.0) * alpha, std::sqrt(2.0) * beta};
}

ClonerParams cloner_params(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw OutOfRange("cloner asymmetry p must lie in [0, 1]");
  const double den = 1.0 - p + p * p;
  ClonerParams c;
  c.p = p;
  c.alpha = std::sqrt(p * p / (2.0 * den));
  c.beta = std::sqrt((1.0 - p) * (1.0 - p) / (2.0 * den));
  c.t = p * (1.0 - p) / den;
  return c;
}

Channel td_channel(const TDParams& params) {
  const int d = params.d;
  return Channel::from_choi(ChoiMatrix(d, d, td_choi(d, params.t)), Tolerance{},
                            "td:d=" + std::to_string(d) + ",t=" + num(params.t));
}

Channel td_channel_fixed_environment(const TDParams& params) {
  const int d = params.d;
  const double t = params.t;
  const double lambda_sym = std::sqrt(std::max(0.0, t + (1.0 - t) / d));
  const double lambda_alt = std::sqrt(std::max(0.0, -t + (1.0 - t) / d));
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> ops;
  auto push = [&](double weight, int i, int j, double sign) {
    // Kraus operator from the Choi eigenvector (|ij> + sign |ji>) / norm.
    ComplexMatrix k = ComplexMatrix::Zero(d, d);
    if (i == j) {
      k(j, i) = weight;
    } else {
      k(j, i) = weight * h;
      k(i, j) = weight * h * sign;
    }
    ops.push_back(std::move(k));
  };
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) push(lambda_sym, i, j, 1.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) push(lambda_alt, i, j, -1.0);
  return Channel(KrausSet(d, d, std::move(ops)),
                 "td:d=" + std::to_string(d) + ",t=" + num(t));
}

Channel depolarizing(const DepolParams& params) {
  const int d = params.d;
  const double s = params.s;
  const ComplexMatrix r = s * maximally_entangled(d) +
                          ((1.0 - s) / d) * ComplexMatrix::Identity(d * d, d * d);
  return Channel::from_choi(ChoiMatrix(d, d, r), Tolerance{},
                            "depol:d=" + std::to_string(d) + ",s=" + num(s));
}

ComplexMatrix td_complement_qubit_output(double t, const ComplexMatrix& rho) {
  if (!(t >= -1.0 - kSlack && t <= 1.0 / 3.0 + kSlack)) {
    throw OutOfCPRange("qubit TD complement needs -1 <= t <= 1/3");
  }
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw DimensionMismatch("qubit TD complement acts on 2x2 inputs");
  }
  const Complex r00 = rho(0, 0), r01 = rho(0, 1), r10 = rho(1, 0), r11 = rho(1, 1);
  const Complex tr = r00 + r11;
  const double s = std::sqrt(std::max(0.0, 1.0 - 3.0 * t)) *
                   std::sqrt(std::max(0.0, 1.0 + t));
  const double c = (1.0 + t) / (2.0 * std::sqrt(2.0));
  const double e = s / (2.0 * std::sqrt(2.0));
  ComplexMatrix out(4, 4);
  out << (1.0 + t) / 2.0 * r11, c * r10, 0.0, e * r10,
         c * r01, (1.0 + t) / 4.0 * tr, c * r10, s / 4.0 * (r00 - r11),
         0.0, c * r01, (1.0 + t) / 2.0 * r00, -e * r01,
         e * r01, s / 4.0 * (r00 - r11), -e * r10, (1.0 - 3.0 * t) / 4.0 * tr;
  return out;
}

Channel td_complement_qubit(double t, const Tolerance& tol) {
  ComplexMatrix m(4, 16);
  for (int k = 0; k < 2; ++k) {
    for (int mu = 0; mu < 2; ++mu) {
      ComplexMatrix unit = ComplexMatrix::Zero(2, 2);
      unit(k, mu) = 1.0;
      m.row(k * 2 + mu) = row_flatten(td_complement_qubit_output(t, unit));
    }
  }
  return Channel::from_choi(superop_to_choi(SuperOp(2, 4, std::move(m))), tol,
                            "td-comp:t=" + num(t));
}

ComplexMatrix mixed_symmetry_map(double alpha, double beta, int d,
                                 const ComplexMatrix& rho) {
  if (d < 2) throw OutOfRange("mixed symmetry map needs d >= 2");
  if (rho.rows() != d || rho.cols() != d) {
    throw DimensionMismatch("mixed symmetry map input must be d x d");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(d * d, d * d);
  const ComplexMatrix sw = swap_matrix(d);
  const ComplexMatrix w = (alpha + beta) * (id + sw) / 2.0 +
                          (alpha - beta) * (id - sw) / 2.0;
  return w * kron(ComplexMatrix::Identity(d, d), rho) * w.adjoint() / double(d);
}

KnownRange known_antidegradable_range(int d) {
  if (d == 2) return {-2.0 / 3.0, 1.0 / 3.0, EvidenceStatus::kProven};
  if (d == 3) return {-0.5, 0.25, EvidenceStatus::kNumericalEvidence};
  throw Unsupported("no antidegradability range known for d=" + std::to_string(d));
}

ComplexMatrix depolarizing_to_td_rotation() {
  ComplexMatrix u(2, 2);
  u << 0.0, 1.0, -1.0, 0.0;
  return u;
}

}  // namespace qdeg

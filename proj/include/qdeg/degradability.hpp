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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdeg/channel.hpp"

namespace qdeg {

/// Which composition relation is asked about. With M the channel and M^ its
/// complement, the unknown map X must satisfy
///   kDegradable:          X o M = M^
///   kAntidegradable:      X o M^ = M
///   kConjDegradable:      X o M = C o M^
///   kConjAntidegradable:  X o M^ = C o M
/// where C is complex conjugation.
enum class Mode { kDegradable, kAntidegradable, kConjDegradable, kConjAntidegradable };

enum class Status { kYes, kNo, kInconclusive };

std::string_view to_string(Mode mode);
std::string_view to_string(Status status);
/// Accepts "degradable", "antidegradable", "conj-degradable",
/// "conj-antidegradable". Throws ParseError.
Mode parse_mode(std::string_view text);

struct Query {
  Channel channel;
  Mode mode = Mode::kDegradable;
  /// Complement representative to use instead of complement(channel).
  std::optional<Channel> complement;
};

struct SearchConfig {
  bool enabled = true;
  int restarts = 32;
  int max_iters = 2000;
  /// Scale of the random kernel coefficients drawn for restarts > 0.
  double step = 1.0;
  std::uint64_t seed = 0;
  Tolerance tol;
};

/// The linear system known * X = target in superoperator form.
struct Problem {
  SuperOp known;
  SuperOp target;
};

Problem build_problem(const Channel& channel, const Channel& complement, Mode mode);

struct Verdict {
  Status status = Status::kInconclusive;
  Mode mode = Mode::kDegradable;
  SuperOp candidate;
  RealVector candidate_choi_eigs;  // ascending
  bool unique = false;
  std::size_t kernel_dim = 0;
  std::optional<SuperOp> certificate;
  double residual = 0.0;
  bool consistent = true;
  std::string reason;
};

/// Permutation superoperator of complex conjugation on Hermitian d x d
/// matrices (transposition on general ones). Involutive.
SuperOp swap_superop(int d);

struct CandidateMap {
  SuperOp map;
  bool consistent = false;
  double residual = 0.0;
};

/// X = pinv(known) * target, with consistency judged by the residual
/// ||known * X - target||_F against residual_tol.
CandidateMap candidate_map(const SuperOp& known, const SuperOp& target,
                           const Tolerance& tol = {});

/// True iff rank_m == min(d_a^2, d_b^2) and d_b <= d_a, where the known
/// superoperator maps d_a x d_a inputs to d_b x d_b outputs.
bool uniqueness(int d_a, int d_b, std::size_t rank_m);

/// Affine family base + span(basis) of all solutions of known * X = target.
/// basis columns are an orthonormal basis of ker(known (x) I) acting on the
/// row-major flattening of X.
struct KernelFamily {
  SuperOp base;
  ComplexMatrix basis;

  std::size_t dim() const { return static_cast<std::size_t>(basis.cols()); }
  SuperOp member(const ComplexVector& coefficients) const;
};

/// Throws InconsistentSystem when no solution exists.
KernelFamily kernel_family(const SuperOp& known, const SuperOp& target,
                           const Tolerance& tol = {});

struct CertificateCheck {
  bool valid = false;
  double residual = 0.0;
  double min_eigenvalue = 0.0;
  double psd_floor = 0.0;
  double tp_deviation = 0.0;  // ||Tr_B R - I||_F
};

/// Composition residual, trace preservation and Choi PSD test for a
/// proposed solution; valid means the solution is itself a channel.
CertificateCheck verify_certificate(const SuperOp& known, const SuperOp& target,
                                    const SuperOp& certificate,
                                    const Tolerance& tol = {});

struct SearchOutcome {
  std::optional<SuperOp> certificate;
  int restart = -1;     // index of the successful restart
  int iterations = 0;   // iterations used by that restart
  double best_min_eigenvalue = 0.0;
};

/// Looks for a channel in the family by alternating projections between the
/// trace-preserving solutions and the PSD cone of Choi matrices.
/// Restart 0 starts from the base solution, restart r > 0 from a random
/// member drawn with seed + r. A returned certificate always passes
/// verify_certificate; no certificate is not evidence of non-existence.
SearchOutcome kernel_search(const Problem& problem, const KernelFamily& family,
                            const SearchConfig& cfg);

/// Largest spectral mismatch between (id (x) env)(psi) and c(Tr_ref psi)
/// over seeded random pure states psi on ref (x) A. Zero (up to rounding)
/// iff env is complementary to c on the sampled states.
double complementarity_defect(const Channel& c, const Channel& env, int samples = 8,
                              std::uint64_t seed = 0);

/// Throws NotTP / NotCP when the channel is not a valid channel and
/// NotComplementary when a supplied complement fails complementarity_defect.
Verdict decide(const Query& query, const SearchConfig& cfg);

struct ScreenReport {
  bool hopeless = false;
  std::vector<std::string> reasons;
  bool complement_ppt = false;
  std::size_t complement_choi_rank = 0;
  int d_a = 0;
  int d_b = 0;
  int d_e = 0;
};

/// Rules out exclusively conjugate degradable behaviour where it cannot
/// occur: d_b <= d_a, complement Choi rank <= max(d_a, d_e) (PPT equals
/// separable there) or d_a = d_e = 2.
ScreenReport ecd_screen(const Channel& channel, const Tolerance& tol = {});

}  // namespace qdeg

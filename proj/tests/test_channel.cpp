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

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qdeg/channel.hpp"
#include "qdeg/errors.hpp"
#include "qdeg/zoo.hpp"

namespace qdeg {
namespace {

Channel random_channel(std::mt19937_64& rng, int d_in, int d_out, int n) {
  return Channel(KrausSet(oracle::random_kraus(rng, d_in, d_out, n)));
}

Channel identity(int d) { return Channel(KrausSet({ComplexMatrix::Identity(d, d)})); }

RealVector sorted_spectrum(const ComplexMatrix& h, Eigen::Index pad) {
  RealVector v = RealVector::Zero(pad);
  const RealVector e = oracle::eigs(h);
  std::vector<double> s(e.data(), e.data() + e.size());
  std::sort(s.rbegin(), s.rend());
  for (std::size_t i = 0; i < s.size() && static_cast<Eigen::Index>(i) < pad; ++i) {
    v(static_cast<Eigen::Index>(i)) = s[i];
  }
  return v;
}

TEST(DensityMatrix, Validation) {
  EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix::Identity(2, 2)), Error);
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix::from_matrix(neg), Error);
  EXPECT_NO_THROW(DensityMatrix::from_matrix(ComplexMatrix::Identity(2, 2) / 2.0));
  ComplexVector psi(2);
  psi << 1.0, Complex(0, 1);
  EXPECT_NEAR(DensityMatrix::pure(psi).matrix().trace().real(), 1.0, 1e-15);
}

TEST(KrausSet, Validation) {
  EXPECT_THROW(KrausSet(std::vector<ComplexMatrix>{}), Error);
  EXPECT_THROW(KrausSet({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}),
               DimensionMismatch);
  EXPECT_TRUE(KrausSet({ComplexMatrix::Identity(2, 2)}).is_trace_preserving());
  EXPECT_FALSE(KrausSet({ComplexMatrix::Identity(2, 2) * 2.0}).is_trace_preserving());
}

TEST(KrausToChoi, KnownChannels) {
  const ComplexMatrix phi = kraus_to_choi(identity(2).kraus()).matrix();
  EXPECT_LT((phi - maximally_entangled(2)).norm(), 1e-15);
  EXPECT_EQ(numeric_rank(phi), 1u);
  EXPECT_NEAR(phi.trace().real(), 2.0, 1e-15);

  for (double t : {-1.0, -0.3, 0.0, 0.2, 1.0 / 3}) {
    const ComplexMatrix r = td_channel(TDParams(2, t)).choi().matrix();
    const RealVector e = oracle::eigs(r);
    // Antisymmetric eigenvalue once, symmetric one three times (ascending order).
    std::vector<double> want = {-t + (1 - t) / 2, t + (1 - t) / 2, t + (1 - t) / 2,
                                t + (1 - t) / 2};
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(e(i), want[i], 1e-12);
  }
  const ComplexMatrix dep = td_channel(TDParams(2, 0.0)).choi().matrix();
  EXPECT_LT((dep - ComplexMatrix::Identity(4, 4) / 2.0).norm(), 1e-12);
}

TEST(KrausToChoi, MatchesOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const int d_in = 1 + i % 3;
    const int d_out = 1 + (i / 3) % 3;
    const auto ks = oracle::random_kraus(rng, d_in, d_out, d_in);
    const Channel c{KrausSet(ks)};
    EXPECT_LT((c.choi().matrix() - oracle::choi_of(oracle::kraus_fn(ks), d_in, d_out)).norm(),
              1e-12);
    EXPECT_LT((c.superop().matrix() - oracle::superop_of(oracle::kraus_fn(ks), d_in, d_out))
                  .norm(),
              1e-12);
    EXPECT_NEAR(c.choi().matrix().trace().real(), d_in, 1e-12);
    EXPECT_TRUE(is_cp(c.choi()).cp);
  }
}

TEST(ChoiToKraus, RoundTripAndErrors) {
  const KrausSet id = choi_to_kraus(ChoiMatrix(2, 2, maximally_entangled(2)));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_LT((id[0] - ComplexMatrix::Identity(2, 2)).norm(), 1e-12);

  const KrausSet dep = choi_to_kraus(ChoiMatrix(2, 2, ComplexMatrix::Identity(4, 4) / 2.0));
  EXPECT_EQ(dep.size(), 4u);
  EXPECT_LT((kraus_to_choi(dep).matrix() - ComplexMatrix::Identity(4, 4) / 2.0).norm(), 1e-12);

  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    const ComplexMatrix g = oracle::gaussian(rng, 6, 3);
    const ComplexMatrix r = g * g.adjoint();
    const KrausSet k = choi_to_kraus(ChoiMatrix(2, 3, r));
    EXPECT_EQ(k.size(), 3u);
    EXPECT_LT((kraus_to_choi(k).matrix() - r).norm(), 1e-9);
  }
  ComplexMatrix bad = ComplexMatrix::Identity(4, 4);
  bad(0, 0) = -1.0;
  EXPECT_THROW(choi_to_kraus(ChoiMatrix(2, 2, bad)), NotCP);
}

TEST(Reshuffle, PermutationRoundTrip) {
  EXPECT_LT((choi_to_superop(ChoiMatrix(2, 2, maximally_entangled(2))).matrix() -
             ComplexMatrix::Identity(4, 4))
                .norm(),
            1e-15);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    const ComplexMatrix r = oracle::gaussian(rng, 6, 6);
    EXPECT_EQ(superop_to_choi(choi_to_superop(ChoiMatrix(2, 3, r))).matrix(), r);
    const ComplexMatrix m = oracle::gaussian(rng, 9, 4);
    EXPECT_EQ(choi_to_superop(superop_to_choi(SuperOp(3, 2, m))).matrix(), m);
  }
  const Channel td = td_channel(TDParams(2, 1.0 / 3));
  const SuperOp m = choi_to_superop(td.choi());
  for (int i = 0; i < 10; ++i) {
    const ComplexMatrix rho = oracle::random_state(rng, 2);
    EXPECT_LT((qdeg::apply(m, rho) - oracle::td_fn(2, 1.0 / 3)(rho)).norm(), 1e-12);
  }
}

TEST(Apply, AgreesWithChoiFormAndOracle) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const int d_in = 1 + i % 3;
    const int d_out = 1 + (i / 3) % 3;
    const auto ks = oracle::random_kraus(rng, d_in, d_out, 1 + i % 4);
    const Channel c{KrausSet(ks)};
    const ComplexMatrix rho = oracle::random_state(rng, d_in);
    const ComplexMatrix expected = oracle::kraus_fn(ks)(rho);
    EXPECT_LT((qdeg::apply(c.superop(), rho) - expected).norm(), 1e-9);
    EXPECT_LT((apply_choi(c.choi(), rho) - expected).norm(), 1e-9);
    EXPECT_LT((c(rho) - expected).norm(), 1e-9);
  }
  const ComplexMatrix rho = oracle::random_state(rng, 2);
  EXPECT_LT((qdeg::apply(identity_superop(2), rho) - rho).norm(), 1e-15);
  EXPECT_LT((apply_choi(ChoiMatrix(2, 2, maximally_entangled(2)), rho) - rho).norm(), 1e-15);
  EXPECT_LT((apply_choi(ChoiMatrix(2, 2, ComplexMatrix::Identity(4, 4) / 2.0), rho) -
             ComplexMatrix::Identity(2, 2) / 2.0)
                .norm(),
            1e-15);
  const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
  EXPECT_LT((qdeg::apply(td_channel(TDParams(2, -0.4)).superop(), half) - half).norm(), 1e-12);
}

TEST(Compose, RightActionOrder) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 50; ++i) {
    const Channel m = random_channel(rng, 2, 3, 2);
    const Channel n = random_channel(rng, 3, 2, 3);
    const ComplexMatrix rho = oracle::random_state(rng, 2);
    EXPECT_LT((qdeg::apply(compose(m.superop(), n.superop()), rho) - n(m(rho))).norm(), 1e-9);
    EXPECT_LT((compose(m.superop(), identity_superop(3)).matrix() - m.superop().matrix()).norm(),
              1e-15);
  }
  const Channel dep = td_channel(TDParams(2, 0.0));
  const Channel n = random_channel(rng, 2, 2, 2);
  const SuperOp both = compose(dep.superop(), n.superop());
  const ComplexMatrix fixed = n(ComplexMatrix::Identity(2, 2) / 2.0);
  for (int i = 0; i < 5; ++i) {
    EXPECT_LT((qdeg::apply(both, oracle::random_state(rng, 2)) - fixed).norm(), 1e-12);
  }
  EXPECT_THROW(compose(dep.superop(), random_channel(rng, 3, 3, 1).superop()), DimensionMismatch);
}

TEST(Complement, MatchesOracleAndIsTP) {
  const Channel env = complement(identity(2));
  EXPECT_EQ(env.d_out(), 1);
  std::mt19937_64 rng(16);
  EXPECT_NEAR(std::abs(env(oracle::random_state(rng, 2))(0, 0) - 1.0), 0.0, 1e-12);

  for (int i = 0; i < 30; ++i) {
    const auto ks = oracle::random_kraus(rng, 2, 3, 1 + i % 4);
    const Channel c = complement(KrausSet(ks));
    EXPECT_EQ(c.d_out(), static_cast<int>(ks.size()));
    EXPECT_TRUE(c.kraus().is_trace_preserving());
    const ComplexMatrix rho = oracle::random_state(rng, 2);
    EXPECT_LT((c(rho) - oracle::complement_fn(ks)(rho)).norm(), 1e-9);
    // The complement of the complement returns the channel output.
    EXPECT_LT((complement(c)(rho) - oracle::kraus_fn(ks)(rho)).norm(), 1e-9);
  }
  EXPECT_THROW(complement(KrausSet({ComplexMatrix::Identity(2, 2) * 2.0})), NotTP);
}

TEST(Complement, QubitTDSpectraMatchLiteralComplement) {
  std::mt19937_64 rng(17);
  for (double t : {-0.9, -2.0 / 3, -0.25, 0.1, 0.3}) {
    const Channel env = complement(td_channel(TDParams(2, t)));
    for (int i = 0; i < 5; ++i) {
      const ComplexMatrix rho = oracle::random_state(rng, 2);
      EXPECT_LT((sorted_spectrum(env(rho), 4) -
                 sorted_spectrum(oracle::td_complement_qubit(t, rho), 4))
                    .norm(),
                1e-9);
    }
    const RealVector half = sorted_spectrum(env(ComplexMatrix::Identity(2, 2) / 2.0), 4);
    RealVector want(4);
    want << (1 + t) / 4, (1 + t) / 4, (1 + t) / 4, (1 - 3 * t) / 4;
    std::sort(want.data(), want.data() + 4, std::greater<>());
    EXPECT_LT((half - want).norm(), 1e-9);
  }
}

TEST(Structure, CpTpUnital) {
  for (double t : {-1.0, 0.0, 1.0 / 3}) {
    EXPECT_TRUE(is_cp(ChoiMatrix(2, 2, oracle::choi_of(oracle::td_fn(2, t), 2, 2))).cp);
  }
  for (double t : {-1.01, 0.34}) {
    EXPECT_FALSE(is_cp(ChoiMatrix(2, 2, oracle::choi_of(oracle::td_fn(2, t), 2, 2))).cp);
  }
  for (int d : {2, 3, 4}) {
    const double lo = -1.0 / (d - 1);
    const double hi = 1.0 / (d + 1);
    EXPECT_TRUE(is_cp(ChoiMatrix(d, d, oracle::choi_of(oracle::td_fn(d, lo), d, d))).cp);
    EXPECT_TRUE(is_cp(ChoiMatrix(d, d, oracle::choi_of(oracle::td_fn(d, hi), d, d))).cp);
    EXPECT_FALSE(
        is_cp(ChoiMatrix(d, d, oracle::choi_of(oracle::td_fn(d, hi + 1e-3), d, d))).cp);
    EXPECT_FALSE(
        is_cp(ChoiMatrix(d, d, oracle::choi_of(oracle::td_fn(d, lo - 1e-3), d, d))).cp);
  }
  const TpReport tp = is_tp(ChoiMatrix(2, 2, 2.0 * maximally_entangled(2)));
  EXPECT_FALSE(tp.tp);
  EXPECT_NEAR(tp.deviation, std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(is_tp(td_channel(TDParams(3, 0.1)).choi()).tp);

  EXPECT_TRUE(is_unital(td_channel(TDParams(2, -0.5))));
  EXPECT_TRUE(is_unital(depolarizing(DepolParams(3, 0.5))));
  for (double t : {-0.5, 0.2}) EXPECT_FALSE(is_unital(td_complement_qubit(t)));
  EXPECT_TRUE(is_unital(td_complement_qubit(0.0)));
}

TEST(Structure, TraceOutOutputAndRank) {
  std::mt19937_64 rng(18);
  const Channel c = random_channel(rng, 3, 2, 4);
  EXPECT_LT((trace_out_output(c.choi()) - ComplexMatrix::Identity(3, 3)).norm(), 1e-9);
  EXPECT_EQ(choi_rank(identity(3)), 1u);
  EXPECT_EQ(choi_rank(td_channel(TDParams(2, -0.3))), 4u);
  EXPECT_EQ(choi_rank(td_channel(TDParams(3, 0.1))), 9u);
}

TEST(PartialTranspose, PptAndRank) {
  EXPECT_TRUE(is_ppt(ChoiMatrix(2, 2, ComplexMatrix::Identity(4, 4) / 2.0)));
  const ChoiMatrix phi(2, 2, maximally_entangled(2));
  EXPECT_FALSE(is_ppt(phi));
  for (Subsystem s : {Subsystem::kA, Subsystem::kB}) {
    const ComplexMatrix pt = partial_transpose(phi, s);
    EXPECT_EQ(numeric_rank(pt), 4u);
    EXPECT_NEAR(oracle::eigs(pt)(0), -1.0, 1e-12);
  }
  std::mt19937_64 rng(19);
  const ComplexMatrix r = oracle::gaussian(rng, 6, 6);
  const ChoiMatrix rc(2, 3, r);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 3; ++n) {
          EXPECT_EQ(partial_transpose(rc, Subsystem::kA)(k * 3 + l, m * 3 + n), r(m * 3 + l, k * 3 + n));
          EXPECT_EQ(partial_transpose(rc, Subsystem::kB)(k * 3 + l, m * 3 + n), r(k * 3 + n, m * 3 + l));
        }
}

}  // namespace
}  // namespace qdeg

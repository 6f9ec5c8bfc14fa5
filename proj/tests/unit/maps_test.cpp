// Copyright 2026 The posmap Authors
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

#include <cmath>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "posmap/errors.hpp"
#include "posmap/maps.hpp"
#include "posmap/random.hpp"

namespace posmap {
namespace {

ComplexMatrix random_operator(std::size_t d, Rng& rng) {
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = cplx(rng.normal(), rng.normal());
  return m;
}

std::vector<ComplexMatrix> random_kraus(std::size_t d_in, std::size_t count, Rng& rng) {
  std::vector<ComplexMatrix> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_operator(d_in, rng));
  return out;
}

TEST(Choi, FromActionMatchesFromKraus) {
  Rng rng(1);
  const auto kraus = random_kraus(3, 2, rng);
  const auto a = choi_from_kraus(kraus);
  const auto b = choi_from_action(
      [&](const ComplexMatrix& x) {
        ComplexMatrix y(3);
        for (const auto& k : kraus) y += k * x * k.adjoint();
        return y;
      },
      3);
  EXPECT_LT(distance(a.matrix(), b.matrix()), 1e-12);
}

TEST(Choi, ApplyRecoversAction) {
  Rng rng(2);
  const auto kraus = random_kraus(2, 3, rng);
  const auto choi = choi_from_kraus(kraus);
  const auto x = random_operator(2, rng);
  ComplexMatrix expect(2);
  for (const auto& k : kraus) expect += k * x * k.adjoint();
  EXPECT_LT(distance(apply_map(choi, x), expect), 1e-12);
}

TEST(Choi, IdentityIsUnnormalizedMaximallyEntangled) {
  const auto c = identity_map(3).matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(c(i * 3 + i, j * 3 + j), cplx(1.0));
  EXPECT_NEAR(c.trace().real(), 3.0, 1e-15);
}

TEST(Choi, TransposeIsSwap) {
  const auto c = transpose_map(2).matrix();
  ComplexMatrix swap(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) swap(i * 2 + k, k * 2 + i) = 1.0;
  EXPECT_EQ(c, swap);
}

TEST(Choi, CatalogActions) {
  Rng rng(3);
  const auto x = random_operator(3, rng);
  const auto id3 = ComplexMatrix::identity(3);
  EXPECT_LT(distance(apply_map(reduction_map(3), x), id3 * x.trace() - x), 1e-12);
  EXPECT_LT(distance(apply_map(depolarizing_map(3, 0.3), x),
                     x * 0.3 + id3 * (x.trace() * (0.7 / 3.0))),
            1e-12);
  EXPECT_LT(distance(apply_map(werner_holevo_map(3), x), (id3 * x.trace() - x.transpose()) * 0.5),
            1e-12);
  const auto phi = apply_map(choi_map(), x);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_LT(std::abs(phi(k, k) - x(k, k) - x((k + 1) % 3, (k + 1) % 3)), 1e-12);
  EXPECT_LT(std::abs(phi(0, 2) + x(0, 2)), 1e-12);
  EXPECT_THROW(catalog("frobnicate"), InvalidArgument);
}

TEST(Dual, SatisfiesHilbertSchmidtAdjointness) {
  Rng rng(4);
  // make the map non-square: compose with an isometry into C^3
  ComplexMatrix v(3);
  v(0, 0) = 1.0;
  v(2, 1) = 1.0;
  const auto rect = choi_from_action(
      [&](const ComplexMatrix& x) {
        ComplexMatrix pad(3);
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) pad(i, j) = x(i, j);
        return v * pad * v.adjoint();
      },
      2);
  const auto dual = dual_map(rect);
  EXPECT_EQ(dual.d_in(), rect.d_out());
  EXPECT_EQ(dual.d_out(), rect.d_in());
  for (int t = 0; t < 5; ++t) {
    const auto x = random_operator(2, rng), y = random_operator(3, rng);
    const cplx lhs = trace_product(y.adjoint(), apply_map(rect, x));
    const cplx rhs = trace_product(apply_map(dual, y).adjoint(), x);
    EXPECT_LT(std::abs(lhs - rhs), 1e-10);
  }
}

TEST(Dual, IsInvolution) {
  Rng rng(5);
  const auto c = choi_from_kraus(random_kraus(3, 2, rng));
  EXPECT_LT(distance(dual_map(dual_map(c)).matrix(), c.matrix()), 1e-15);
}

TEST(TensorWithIdentity, ActsOnFirstLeg) {
  Rng rng(6);
  const auto kraus = random_kraus(2, 2, rng);
  const auto lifted = tensor_with_identity(choi_from_kraus(kraus), 3);
  const auto x = random_operator(6, rng);
  ComplexMatrix expect(6);
  for (const auto& k : kraus) {
    const auto kk = kron(k, ComplexMatrix::identity(3));
    expect += kk * x * kk.adjoint();
  }
  EXPECT_LT(distance(apply_map(lifted, x), expect), 1e-11);
}

TEST(TensorWithIdentity, TransposeGivesPartialTranspose) {
  Rng rng(7);
  const auto x = random_hermitian(6, rng);
  const auto out = apply_map(tensor_with_identity(transpose_map(2), 3), x);
  const auto expect = partial_transpose(x, {2, 3}, Leg::first);
  EXPECT_LT(distance(out, expect), 1e-13);
}

TEST(Positivity, CpAndCoCpAgreeWithEigenOracle) {
  Rng rng(8);
  const auto c = choi_from_kraus(random_kraus(2, 2, rng));
  const auto cp = is_cp(c);
  EXPECT_TRUE(cp.holds);
  EXPECT_NEAR(cp.min_eigenvalue, oracle::min_eigenvalue(c.matrix()), 1e-10);
  const auto co = is_co_cp(c);
  EXPECT_NEAR(co.min_eigenvalue,
              oracle::min_eigenvalue(oracle::partial_transpose_2(c.matrix(), 2, 2)), 1e-10);
}

TEST(Positivity, NonHermitianChoiThrows) {
  Rng rng(9);
  const ChoiMatrix c(random_operator(4, rng), 2, 2);
  EXPECT_FALSE(c.hermiticity_preserving());
  EXPECT_THROW(is_cp(c), NotHermitianError);
  EXPECT_THROW(is_block_positive(c), NotHermitianError);
  EXPECT_THROW(is_decomposable(c), NotHermitianError);
}

TEST(BlockPositivity, CertifiesNonPositiveMap) {
  // X -> -X has <x (x) y| C |x (x) y> = -|<x*|y>|^2 with minimum -1
  const ChoiMatrix neg(identity_map(2).matrix() * -1.0, 2, 2);
  const auto r = is_block_positive(neg);
  ASSERT_FALSE(r.positive);
  const auto xy = kron(r.x, r.y);
  const double value = inner(xy, neg.matrix() * std::span<const cplx>(xy)).real();
  EXPECT_NEAR(value, r.minimum, 1e-12);
  EXPECT_LT(r.minimum, -1e-9);
}

TEST(BlockPositivity, DeterministicForSeed) {
  BlockPositivityOptions o;
  o.seed = 3;
  o.restarts = 10;
  const auto a = is_block_positive(choi_map(), o);
  const auto b = is_block_positive(choi_map(), o);
  EXPECT_EQ(a.minimum, b.minimum);
  EXPECT_EQ(a.x, b.x);
}

TEST(Decomposable, TrivialCasesShortCircuit) {
  const auto id = is_decomposable(identity_map(3));
  EXPECT_EQ(id.verdict, Decomposability::decomposable);
  EXPECT_EQ(id.iterations, 0);
  const auto tr = is_decomposable(transpose_map(3));
  EXPECT_EQ(tr.verdict, Decomposability::decomposable);
  EXPECT_LT(distance(tr.co_cp_part, transpose_map(3).matrix()), 1e-15);
}

TEST(Decomposable, SplitReproducesChoi) {
  Rng rng(10);
  const auto v = random_unit_vector(9, rng), w = random_unit_vector(9, rng);
  const auto a = ComplexMatrix::outer(v, v) + ComplexMatrix::identity(9) * 0.05;
  const auto b = partial_transpose(ComplexMatrix::outer(w, w) + ComplexMatrix::identity(9) * 0.05,
                                   {3, 3}, Leg::second);
  const ChoiMatrix c(a + b, 3, 3);
  ASSERT_FALSE(is_cp(c).holds);
  ASSERT_FALSE(is_co_cp(c).holds);
  const auto r = is_decomposable(c);
  ASSERT_EQ(r.verdict, Decomposability::decomposable);
  EXPECT_LT(distance(r.cp_part + r.co_cp_part, c.matrix()), 1e-12);
  EXPECT_GT(oracle::min_eigenvalue(r.cp_part), -1e-5);
  EXPECT_GT(oracle::min_eigenvalue(partial_transpose(r.co_cp_part, {3, 3}, Leg::second)), -1e-5);
}

TEST(Decomposable, ChoiMapIsNot) {
  const auto r = is_decomposable(choi_map());
  EXPECT_EQ(r.verdict, Decomposability::not_decomposable);
  EXPECT_GE(r.residual, 1e-3);
}

}  // namespace
}  // namespace posmap

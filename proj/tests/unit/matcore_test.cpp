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
#include "posmap/matrix.hpp"
#include "posmap/random.hpp"

namespace posmap {
namespace {

ComplexMatrix reconstruct(const EigenSystem& es) {
  const std::size_t n = es.values.size();
  ComplexMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = es.vector(k);
    m += ComplexMatrix::outer(v, v) * es.values[k];
  }
  return m;
}

TEST(Kron, MatchesBlockDefinition) {
  Rng rng(1);
  const auto a = random_hermitian(2, rng);
  const auto b = random_hermitian(3, rng);
  const auto k = kron(a, b);
  ASSERT_EQ(k.dim(), 6u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q)
          EXPECT_EQ(k(i * 3 + p, j * 3 + q), a(i, j) * b(p, q));
}

TEST(Kron, VectorSlowIndexFirst) {
  const ComplexVector a{1.0, 2.0}, b{3.0, cplx(0, 1), 5.0};
  const auto v = kron(a, b);
  EXPECT_EQ(v[0], cplx(3.0));
  EXPECT_EQ(v[4], cplx(0, 2));
  EXPECT_EQ(v[5], cplx(10.0));
}

TEST(PartialTrace, OfProductReturnsFactor) {
  Rng rng(2);
  ComplexMatrix a = random_hermitian(2, rng), b = random_hermitian(3, rng);
  const auto m = kron(a, b);
  const auto r1 = partial_trace(m, {2, 3}, Leg::first);
  const auto r2 = partial_trace(m, {2, 3}, Leg::second);
  EXPECT_LT(distance(r1, a * b.trace()), 1e-12);
  EXPECT_LT(distance(r2, b * a.trace()), 1e-12);
}

TEST(PartialTranspose, MatchesIndexOracle) {
  Rng rng(3);
  const auto m = random_hermitian(6, rng);
  EXPECT_LT(distance(partial_transpose(m, {2, 3}, Leg::second),
                     oracle::partial_transpose_2(m, 2, 3)),
            1e-15);
}

TEST(PartialTranspose, BothLegsGiveFullTranspose) {
  Rng rng(4);
  const auto m = random_hermitian(6, rng);
  const auto both = partial_transpose(partial_transpose(m, {3, 2}, Leg::first), {3, 2}, Leg::second);
  EXPECT_LT(distance(both, m.transpose()), 1e-15);
}

TEST(PartialTranspose, BellSpectrum) {
  // |Phi+><Phi+| partially transposed is SWAP / 2
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector phi{s, 0.0, 0.0, s};
  const auto pt = partial_transpose(ComplexMatrix::outer(phi, phi), {2, 2}, Leg::second);
  const auto ev = hermitian_eigenvalues(pt);
  EXPECT_NEAR(ev[0], -0.5, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev[k], 0.5, 1e-12);
}

TEST(Eig, ReconstructsAndMatchesEigen) {
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u}) {
    Rng rng(100 + n);
    const auto h = random_hermitian(n, rng);
    const auto es = hermitian_eig(h);
    EXPECT_LT(distance(reconstruct(es), h), 1e-10 * std::max(1.0, h.frobenius_norm()));
    const auto ref = oracle::eigenvalues(h);
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(es.values[k], ref[k], 1e-10);
    EXPECT_LT(distance(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(n)), 1e-10);
  }
}

TEST(Eig, DiagonalAndDegenerate) {
  const std::vector<double> d{3.0, -1.0, 3.0, 0.0};
  const auto es = hermitian_eig(ComplexMatrix::diagonal(d));
  EXPECT_EQ(es.values, (std::vector<double>{-1.0, 0.0, 3.0, 3.0}));
  const auto id = hermitian_eig(ComplexMatrix::identity(5));
  for (double v : id.values) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(Eig, RejectsNonHermitian) {
  ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_THROW(hermitian_eig(m), NotHermitianError);
}

TEST(RequireHermitian, SymmetrizesWithinTolerance) {
  ComplexMatrix m{{1.0, cplx(0.5, 1e-12)}, {0.5, 2.0}};
  const auto h = require_hermitian(m);
  EXPECT_EQ(h.hermiticity_error(), 0.0);
}

TEST(PsdProject, ClipsNegativeEigenvalues) {
  const std::vector<double> d{1.0, -1.0};
  const auto p = psd_project(ComplexMatrix::diagonal(d));
  EXPECT_LT(distance(p, ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}), 1e-15);
}

TEST(PsdProject, IsNearestPsd) {
  // Frobenius distance to the projection equals the norm of the negative part
  Rng rng(5);
  const auto h = random_hermitian(5, rng);
  double neg = 0.0;
  for (double x : oracle::eigenvalues(h))
    if (x < 0) neg += x * x;
  EXPECT_NEAR(distance(h, psd_project(h)), std::sqrt(neg), 1e-10);
}

TEST(SpectralApply, SquareRootSquares) {
  Rng rng(6);
  const auto g = random_hermitian(4, rng);
  const auto psd = g * g;
  const auto root = spectral_apply(psd, [](double x) { return std::sqrt(std::max(x, 0.0)); });
  EXPECT_LT(distance(root * root, psd), 1e-10);
}

TEST(Dimension, MismatchedOperandsThrow) {
  EXPECT_THROW(ComplexMatrix(2) + ComplexMatrix(3), DimensionError);
  EXPECT_THROW(partial_trace(ComplexMatrix(5), {2, 2}, Leg::first), DimensionError);
}

TEST(Random, DeriveSeedIsDeterministicAndSpreads) {
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
  EXPECT_NE(derive_seed(42, 3), derive_seed(42, 4));
  EXPECT_NE(derive_seed(42, 3), derive_seed(43, 3));
}

TEST(Random, UnitaryIsUnitary) {
  Rng rng(7);
  const auto u = random_unitary(9, rng);
  EXPECT_LT(distance(u.adjoint() * u, ComplexMatrix::identity(9)), 1e-12);
}

TEST(Random, SameSeedSameStream) {
  Rng a(11), b(11);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.normal(), b.normal());
}

}  // namespace
}  // namespace posmap

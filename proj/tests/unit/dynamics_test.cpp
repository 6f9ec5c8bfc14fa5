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
#include "posmap/dynamics.hpp"
#include "posmap/errors.hpp"

namespace posmap {
namespace {

TEST(Families, StartAtIdentity) {
  FamilyParams fp;
  fp.hamiltonian = ising_hamiltonian(2, 1.0, 0.5);
  for (const char* name : {"identity", "depolarizing_flow", "transpose_mix"}) {
    const auto f = family_catalog(name, fp);
    EXPECT_LT(distance(f.at(0.0).matrix(), identity_map(2).matrix()), 1e-15) << name;
  }
  const auto g = family_catalog("glauber_flip", fp);
  EXPECT_LT(distance(g.at(0.0).matrix(), identity_map(4).matrix()), 1e-15);
  EXPECT_THROW(family_catalog("nope", fp), InvalidArgument);
  EXPECT_THROW(g.at(-1.0), InvalidArgument);
}

TEST(Families, UnitalInHeisenbergPicture) {
  FamilyParams fp;
  fp.hamiltonian = xxz_hamiltonian(3, 1.0, 0.4);
  fp.rate = 0.7;
  for (const char* name : {"depolarizing_flow", "transpose_mix", "glauber_flip"}) {
    const auto f = family_catalog(name, fp);
    const auto c = f.at(0.8);
    const auto id = ComplexMatrix::identity(c.d_in());
    EXPECT_LT(distance(apply_map(c, id), id), 1e-12) << name;
  }
}

TEST(Families, CpFlagsMatchChoi) {
  FamilyParams fp;
  fp.hamiltonian = ising_hamiltonian(2, 1.0, 0.5);
  for (const char* name : {"depolarizing_flow", "transpose_mix", "glauber_flip"}) {
    const auto f = family_catalog(name, fp);
    EXPECT_EQ(is_cp(f.at(0.5)).holds, f.completely_positive) << name;
  }
}

TEST(Glauber, GibbsDiagonalIsStationary) {
  // Metropolis weights satisfy detailed balance for the Gibbs diagonal.
  const auto h = ising_hamiltonian(3, 1.0, 0.0);
  const double beta = 0.8;
  const auto f = glauber_flip(h, beta, 1.3);
  const auto gibbs = gibbs_state(h, beta).matrix();
  ComplexMatrix diag(8);
  for (std::size_t s = 0; s < 8; ++s) diag(s, s) = gibbs(s, s);
  const auto schrodinger = dual_map(f.at(2.0));
  EXPECT_LT(distance(apply_map(schrodinger, diag), diag), 1e-12);
}

TEST(Glauber, RejectsNonQubitDimension) {
  EXPECT_THROW(glauber_flip(ComplexMatrix::identity(3), 1.0, 1.0), InvalidArgument);
}

TEST(Evolve, DepolarizingOnBellFollowsClosedForm) {
  const auto grid = uniform_grid(3.0, 30);
  const auto rec = evolve_track(bell_state(1), depolarizing_flow(2, 1.0), grid);
  ASSERT_EQ(rec.points.size(), 31u);
  for (const auto& p : rec.points) {
    const double lambda = std::exp(-p.t);
    ASSERT_TRUE(p.negativity.has_value());
    EXPECT_NEAR(*p.negativity, std::max(0.0, (3.0 * lambda - 1.0) / 4.0), 1e-12);
    EXPECT_NEAR(p.trace, 1.0, 1e-12);
  }
  EXPECT_FALSE(rec.first_negative_time.has_value());
}

TEST(Evolve, TransposeMixOnBellGoesNegative) {
  const auto grid = uniform_grid(1.0, 8);
  const auto rec = evolve_track(bell_state(1), transpose_mix(2, 1.0), grid);
  for (const auto& p : rec.points) {
    // (1 - m) Phi+ + m SWAP/2 has the singlet eigenvalue -m/2
    EXPECT_NEAR(p.min_eigenvalue, -std::min(1.0, p.t) / 2.0, 1e-12);
    EXPECT_EQ(p.negativity.has_value(), p.t == 0.0);
  }
  ASSERT_TRUE(rec.first_negative_time.has_value());
  EXPECT_DOUBLE_EQ(*rec.first_negative_time, grid[1]);
}

TEST(Evolve, IdentityIsConstant) {
  const auto rho = random_density({2, 3}, 3, 2);
  const auto rec = evolve_track(rho, identity_family(2), uniform_grid(1.0, 4));
  for (const auto& p : rec.points) {
    EXPECT_EQ(p.min_eigenvalue, rec.points.front().min_eigenvalue);
    EXPECT_EQ(p.negativity, rec.points.front().negativity);
  }
}

TEST(Evolve, OptionalMeasuresArePopulated) {
  TrackOptions o;
  o.eof = true;
  o.dcoef_sup = true;
  o.search.restarts = 2;
  const auto rec = evolve_track(bell_state(1), depolarizing_flow(2, 1.0), uniform_grid(1.0, 2), o);
  EXPECT_NEAR(*rec.points.front().eof_upper, 1.0, 1e-12);
  EXPECT_NEAR(*rec.points.front().dcoef_sup, 1.0, 1e-12);
  EXPECT_TRUE(rec.points.back().eof_upper.has_value());
}

TEST(Evolve, RejectsMismatchAndBadGrid) {
  EXPECT_THROW(evolve_track(bell_state(1), identity_family(3), uniform_grid(1.0, 2)),
               DimensionError);
  const std::vector<double> backwards{1.0, 0.5};
  EXPECT_THROW(evolve_track(bell_state(1), identity_family(2), backwards), InvalidArgument);
  EXPECT_THROW(uniform_grid(1.0, 0), InvalidArgument);
}

}  // namespace
}  // namespace posmap

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

// Local search over finite ensembles of a fixed state.
//
// Write rho = sum_k p_k |e_k><e_k| (rank r). Every pure ensemble of size K is
// {phi_i = sum_k U_ik sqrt(p_k) e_k} for a K x r isometry U, and every K x K
// unitary acting on the member list maps ensembles of rho to ensembles of
// rho. The search therefore keeps the unnormalized members phi_i and moves
// with two-member Givens rotations
//
//   phi_i <- c phi_i - s e^{i chi} phi_j,   phi_j <- s e^{-i chi} phi_i + c phi_j,
//
// which generate U(K) and keep sum_i |phi_i><phi_i| = rho exactly (up to
// rounding). Mixed components are formed by assigning members to groups.

#pragma once

#include <cstdint>
#include <vector>

#include "posmap/random.hpp"
#include "posmap/states.hpp"

namespace posmap::detail {

/// Eigenvalues below this are dropped from the purification.
inline constexpr double kSupportFloor = 1e-12;

struct Purification {
  Split split;
  /// sqrt(p_k) e_k for the retained eigenpairs.
  std::vector<ComplexVector> columns;
  std::size_t rank() const { return columns.size(); }
};

Purification purify(const DensityMatrix& state);

/// Members of a Haar-random ensemble of size k.
std::vector<ComplexVector> random_ensemble(const Purification& pur, std::size_t k,
                                           Rng& rng);

struct LocalResult {
  double value = 0.0;
  bool converged = false;
  std::vector<ComplexVector> members;
  /// Group label per member (all distinct for pure ensembles).
  std::vector<std::size_t> groups;
};

/// Average marginal entropy (bits) of a pure ensemble. Runs a smooth
/// linear-entropy phase first, then polishes the von Neumann objective.
LocalResult minimize_marginal_entropy(const Purification& pur,
                                      std::vector<ComplexVector> start, int iters,
                                      double tol);

/// |target - sum_g W_g <a1>_g <a2>_g| over groupings of a pure ensemble.
LocalResult minimize_correlation_gap(const Purification& pur,
                                     std::vector<ComplexVector> start,
                                     const ComplexMatrix& a1, const ComplexMatrix& a2,
                                     double target, int iters, double tol);

/// Average marginal entropy of the given members, evaluated directly.
double marginal_entropy_of(std::span<const ComplexVector> members, Split split);

/// Builds the ensemble; members of weight below 1e-14 are dropped and the
/// weights renormalized.
Ensemble to_ensemble(const std::vector<ComplexVector>& members,
                     const std::vector<std::size_t>& groups, Split split);

}  // namespace posmap::detail

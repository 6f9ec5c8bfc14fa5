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

// Separability probes and entanglement quantifiers.
//
// ppt_test and map_witness certify entanglement one-sidedly: a negative
// eigenvalue is a proof, a non-negative spectrum proves nothing (except PPT
// in 2x2 and 2x3). eof_upper and dcoef minimize over finite ensembles of
// the state and therefore return upper bounds of the infima they estimate.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "posmap/maps.hpp"
#include "posmap/states.hpp"

namespace posmap {

/// Below this a partial-transpose or witness eigenvalue certifies entanglement.
inline constexpr double kCertifyTol = 1e-10;

struct PptResult {
  double min_eigenvalue = 0.0;
  /// Certified entangled.
  bool npt = false;
  /// PPT implies separable for this split (2x2, 2x3, 3x2).
  bool conclusive = false;
  ComplexVector eigenvector;
};

/// Spectrum of rho^Gamma (transpose on leg 2).
PptResult ppt_test(const DensityMatrix& state);

/// Sum of |negative eigenvalues| of rho^Gamma.
double negativity(const DensityMatrix& state);

struct WitnessResult {
  double min_eigenvalue = 0.0;
  bool entangled = false;
  /// (tau (x) id)^d rho; not a state when entangled.
  ComplexMatrix image;
  ComplexVector eigenvector;
};

/// Applies the dual of tau (x) id to rho. tau acts on leg 1, so its output
/// dimension must equal d1. Sound only if tau is a positive map.
WitnessResult map_witness(const DensityMatrix& state, const ChoiMatrix& choi);

struct SearchOptions {
  /// Ensemble size K; 0 means rank(rho)^2.
  std::size_t ensemble_size = 0;
  int restarts = 32;
  /// Sweep budget per local search.
  int iters = 300;
  /// A restart ends once the value is at or below tol; remaining restarts
  /// are skipped.
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

using Certificate = std::variant<std::monostate, Ensemble, ComplexVector>;

struct MeasureReport {
  double value = 0.0;
  Certificate certificate;
  bool converged = true;
  int restarts_used = 0;
  /// The value minimizes over finitely many ensembles only.
  bool upper_bound = true;
  /// dcoef_sup: indices into the Gell-Mann bases of the maximizing pair.
  std::optional<std::pair<std::size_t, std::size_t>> argmax;
};

/// Entanglement of formation (bits), minimized over pure ensembles of size K.
/// Rank-one states return the marginal entropy exactly. Throws
/// InvalidArgument if K < rank(rho).
MeasureReport eof_upper(const DensityMatrix& state, const SearchOptions& options = {});

/// Coefficient of quantum correlations for the observable pair (a1, a2):
/// inf over ensembles {(l_i, rho_i)} of
///   | Tr[rho (a1 (x) a2)] - sum_i l_i Tr[r1(rho_i) a1] Tr[r2(rho_i) a2] |.
/// Components may be mixed; they are formed by grouping a pure ensemble.
MeasureReport dcoef(const DensityMatrix& state, const ComplexMatrix& a1,
                    const ComplexMatrix& a2, const SearchOptions& options = {});

/// Maximum of dcoef over pairs of traceless generalized Gell-Mann matrices.
MeasureReport dcoef_sup(const DensityMatrix& state, const SearchOptions& options = {});

/// Traceless generalized Gell-Mann matrices of M_d (d^2 - 1 of them):
/// symmetric, antisymmetric, then diagonal. For d = 2: sx, sy, sz.
std::vector<ComplexMatrix> gell_mann_basis(std::size_t d);

}  // namespace posmap

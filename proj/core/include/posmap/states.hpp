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

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "posmap/matrix.hpp"

namespace posmap {

/// Smallest eigenvalue a density matrix may have.
inline constexpr double kStateEigTol = 1e-9;
/// Allowed deviation of Tr(rho) from 1.
inline constexpr double kStateTraceTol = 1e-9;
/// Eigenvalues within this of 0 or 1 contribute nothing to the entropy.
inline constexpr double kEntropyFloor = 1e-12;

/// Bipartite density matrix: hermitian, PSD within kStateEigTol, unit trace.
/// A single-system state uses the trivial split (d, 1).
class DensityMatrix {
 public:
  /// Throws DimensionError if dim != d1 * d2, NotHermitianError, or
  /// InvalidArgument on a negative eigenvalue or wrong trace.
  DensityMatrix(ComplexMatrix matrix, Split split);
  explicit DensityMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  Split split() const { return split_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
  Split split_;
};

/// |psi><psi| / <psi|psi>.
DensityMatrix pure_state(std::span<const cplx> psi, Split split);
DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

/// Finitely supported decomposition {(lambda_i, rho_i)} of a state.
class Ensemble {
 public:
  /// Weights must be positive and sum to 1 within 1e-12; all components
  /// share one split.
  Ensemble(std::vector<double> weights, std::vector<DensityMatrix> components);

  const std::vector<double>& weights() const { return weights_; }
  const std::vector<DensityMatrix>& components() const { return components_; }
  std::size_t size() const { return weights_.size(); }
  Split split() const { return components_.front().split(); }

  ComplexMatrix barycenter() const;

 private:
  std::vector<double> weights_;
  std::vector<DensityMatrix> components_;
};

/// Marginal on `leg` (partial trace over the other leg), split (d, 1).
DensityMatrix restrict_to(const DensityMatrix& state, Leg leg);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& state);
/// -sum x log2 x over entries in (kEntropyFloor, 1 - kEntropyFloor).
double entropy_of_spectrum(std::span<const double> spectrum);

/// Number of eigenvalues above `tol`.
std::size_t numerical_rank(const DensityMatrix& state, double tol = 1e-10);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Bell states 1..4: Phi+, Phi-, Psi+, Psi-.
DensityMatrix bell_state(int k);
/// p |Psi-><Psi-| + (1 - p) I/4.
DensityMatrix werner_state(double p);
/// f |Phi_d><Phi_d| + (1 - f) I/d^2 with Phi_d = sum_i |ii> / sqrt(d).
DensityMatrix isotropic_state(std::size_t d, double f);
DensityMatrix max_mixed_state(Split split);
/// W W^dagger / Tr with W a d x rank complex Gaussian matrix.
DensityMatrix random_density(Split split, std::size_t rank, std::uint64_t seed);

struct SeparableSample {
  DensityMatrix state;
  /// Pure product components |a_i><a_i| (x) |b_i><b_i| with barycenter state.
  Ensemble certificate;
};

/// sum_i lambda_i |a_i><a_i| (x) |b_i><b_i| with Haar-random local vectors
/// and Dirichlet(1) weights.
SeparableSample random_separable(Split split, std::size_t components,
                                 std::uint64_t seed);

struct NamedParams {
  int k = 1;
  double p = 0.0;
  double f = 0.0;
  std::size_t d = 2;
  Split split{2, 2};
  std::size_t components = 5;
  std::size_t rank = 1;
  std::uint64_t seed = 0;
  std::optional<DensityMatrix> first;
  std::optional<DensityMatrix> second;
};

/// Dispatch over bell, werner, isotropic, max_mixed, product,
/// random_separable, random_density. Unknown names and out-of-range
/// parameters throw InvalidArgument.
DensityMatrix make_named(std::string_view family, const NamedParams& params);

/// exp(-beta H) / Tr exp(-beta H), split (dim, 1).
DensityMatrix gibbs_state(const ComplexMatrix& h, double beta);

/// -J sum sz_i sz_{i+1} - h sum sx_i, open chain, 2 <= sites <= 6.
ComplexMatrix ising_hamiltonian(int sites, double j, double h);
/// -J sum (sx_i sx_{i+1} + sy_i sy_{i+1} + delta sz_i sz_{i+1}), open chain.
ComplexMatrix xxz_hamiltonian(int sites, double j, double delta);

}  // namespace posmap

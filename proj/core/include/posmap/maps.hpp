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

// Linear maps on matrix algebras in Choi form, and the positivity hierarchy
//
//   block-positive (positive map)  ⊇  decomposable (CP + co-CP)  ⊇  CP
//
// Convention: C(tau) = sum_ij E_ij (x) tau(E_ij), input leg first, so
// C[i * d_out + k, j * d_out + l] = tau(E_ij)[k, l].

#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "posmap/matrix.hpp"

namespace posmap {

class ChoiMatrix {
 public:
  ChoiMatrix(ComplexMatrix matrix, std::size_t d_in, std::size_t d_out);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t d_in() const { return d_in_; }
  std::size_t d_out() const { return d_out_; }
  Split split() const { return {d_in_, d_out_}; }
  /// tau(X^dagger) = tau(X)^dagger, equivalently C hermitian.
  bool hermiticity_preserving() const { return hermiticity_preserving_; }

 private:
  ComplexMatrix matrix_;
  std::size_t d_in_;
  std::size_t d_out_;
  bool hermiticity_preserving_;
};

/// Choi matrix of an arbitrary linear action, evaluated on the matrix units.
ChoiMatrix choi_from_action(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& action,
    std::size_t d_in);
/// Choi matrix of X -> sum_k K_k X K_k^dagger.
ChoiMatrix choi_from_kraus(std::span<const ComplexMatrix> kraus);

/// tau(X) = Tr_in[(X^T (x) I) C].
ComplexMatrix apply_map(const ChoiMatrix& choi, const ComplexMatrix& x);

/// Adjoint with respect to <A, B> = Tr[A^dagger B]: legs swapped and
/// entries conjugated.
ChoiMatrix dual_map(const ChoiMatrix& choi);

/// Choi of tau (x) id_{d2}. Inputs are split {d_in, d2}, outputs
/// {d_out, d2}.
ChoiMatrix tensor_with_identity(const ChoiMatrix& choi, std::size_t d2);

struct PositivityVerdict {
  bool holds = false;
  double min_eigenvalue = 0.0;
};

/// Choi matrix PSD within tol.
PositivityVerdict is_cp(const ChoiMatrix& choi, double tol = 1e-9);
/// Partial transpose of the Choi matrix on the output leg PSD within tol.
PositivityVerdict is_co_cp(const ChoiMatrix& choi, double tol = 1e-9);

struct BlockPositivityOptions {
  int restarts = 200;
  int iters = 500;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

struct BlockPositivityResult {
  /// false is certified by (x, y); true is evidence from `restarts_used`
  /// see-saw runs.
  bool positive = true;
  /// Smallest <x (x) y| C |x (x) y> found.
  double minimum = 0.0;
  ComplexVector x;
  ComplexVector y;
  int restarts_used = 0;
};

/// See-saw minimization of <x (x) y| C |x (x) y> over unit vectors.
BlockPositivityResult is_block_positive(const ChoiMatrix& choi,
                                        const BlockPositivityOptions& options = {});

enum class Decomposability { decomposable, not_decomposable, indeterminate };

struct DecompositionOptions {
  int max_iter = 5000;
  double tol = 1e-6;
};

struct DecompositionResult {
  Decomposability verdict = Decomposability::indeterminate;
  double residual = 0.0;
  int iterations = 0;
  /// On success C = cp_part + co_cp_part, cp_part PSD and co_cp_part^Gamma
  /// PSD up to the residual.
  ComplexMatrix cp_part;
  ComplexMatrix co_cp_part;
};

/// Dykstra alternating projections for C = A + B, A >= 0, B^Gamma >= 0.
/// After the budget, residual < tol is decomposable, residual >= 10 tol is
/// not decomposable, anything between is indeterminate.
DecompositionResult is_decomposable(const ChoiMatrix& choi,
                                    const DecompositionOptions& options = {});

ChoiMatrix identity_map(std::size_t d);
ChoiMatrix transpose_map(std::size_t d);
/// X -> lambda X + (1 - lambda) Tr(X) I/d.
ChoiMatrix depolarizing_map(std::size_t d, double lambda);
/// X -> Tr(X) I - X.
ChoiMatrix reduction_map(std::size_t d);
/// The map on M_3 with Phi(X)_kk = x_kk + x_{k+1,k+1} (indices mod 3) and
/// Phi(X)_ij = -x_ij off the diagonal.
ChoiMatrix choi_map();
/// X -> (Tr(X) I - X^T) / (d - 1).
ChoiMatrix werner_holevo_map(std::size_t d);

struct CatalogParams {
  std::size_t d = 2;
  double lambda = 1.0;
};

/// identity, transpose, depolarizing, reduction, choi_map, werner_holevo.
ChoiMatrix catalog(std::string_view name, const CatalogParams& params = {});

}  // namespace posmap

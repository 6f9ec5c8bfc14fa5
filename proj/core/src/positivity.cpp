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

// Block positivity by see-saw, decomposability by Dykstra projections.

#include <algorithm>
#include <cmath>
#include <limits>

#include "posmap/errors.hpp"
#include "posmap/maps.hpp"
#include "posmap/random.hpp"

namespace posmap {

namespace {

// <y| C_x |y> contraction with x fixed: M[k, l] = sum_ij conj(x_i) C[(i,k),(j,l)] x_j
ComplexMatrix contract_input(const ComplexMatrix& c, Split s, std::span<const cplx> x) {
  ComplexMatrix m(s.d2);
  for (std::size_t i = 0; i < s.d1; ++i)
    for (std::size_t j = 0; j < s.d1; ++j) {
      const cplx w = std::conj(x[i]) * x[j];
      if (w == cplx{}) continue;
      for (std::size_t k = 0; k < s.d2; ++k)
        for (std::size_t l = 0; l < s.d2; ++l) m(k, l) += w * c(i * s.d2 + k, j * s.d2 + l);
    }
  return m;
}

// M[i, j] = sum_kl conj(y_k) C[(i,k),(j,l)] y_l
ComplexMatrix contract_output(const ComplexMatrix& c, Split s, std::span<const cplx> y) {
  ComplexMatrix m(s.d1);
  for (std::size_t i = 0; i < s.d1; ++i)
    for (std::size_t j = 0; j < s.d1; ++j) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < s.d2; ++k)
        for (std::size_t l = 0; l < s.d2; ++l)
          acc += std::conj(y[k]) * c(i * s.d2 + k, j * s.d2 + l) * y[l];
      m(i, j) = acc;
    }
  return m;
}

}  // namespace

BlockPositivityResult is_block_positive(const ChoiMatrix& choi,
                                        const BlockPositivityOptions& options) {
  if (!choi.hermiticity_preserving())
    throw NotHermitianError("is_block_positive: Choi matrix is not hermitian");
  const ComplexMatrix& c = choi.matrix();
  const Split s = choi.split();

  BlockPositivityResult best;
  best.minimum = std::numeric_limits<double>::infinity();
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
    ComplexVector y = random_unit_vector(s.d2, rng);
    ComplexVector x;
    double value = std::numeric_limits<double>::infinity();
    for (int it = 0; it < options.iters; ++it) {
      const auto ex = hermitian_eig(contract_output(c, s, y));
      x = ex.vector(0);
      const auto ey = hermitian_eig(contract_input(c, s, x));
      y = ey.vector(0);
      const double next = ey.values[0];
      const bool settled = std::abs(value - next) < 1e-12;
      value = next;
      if (settled) break;
    }
    ++best.restarts_used;
    if (value < best.minimum) {
      best.minimum = value;
      best.x = x;
      best.y = y;
    }
    if (best.minimum < -options.tol) break;
  }
  best.positive = best.minimum >= -options.tol;
  return best;
}

DecompositionResult is_decomposable(const ChoiMatrix& choi,
                                    const DecompositionOptions& options) {
  if (!choi.hermiticity_preserving())
    throw NotHermitianError("is_decomposable: Choi matrix is not hermitian");
  const ComplexMatrix& c = choi.matrix();
  const Split s = choi.split();
  const auto gamma = [s](const ComplexMatrix& m) {
    return partial_transpose(m, s, Leg::second);
  };

  DecompositionResult result;
  // Trivial splits first: pure CP (B = 0) or pure co-CP (A = 0), allowing
  // for rounding in the eigensolver.
  const double floor = -1e-12 * std::max(1.0, c.frobenius_norm());
  if (min_eigenvalue(c) >= floor) {
    result.verdict = Decomposability::decomposable;
    result.cp_part = c;
    result.co_cp_part = ComplexMatrix(c.dim());
    return result;
  }
  if (min_eigenvalue(gamma(c)) >= floor) {
    result.verdict = Decomposability::decomposable;
    result.cp_part = ComplexMatrix(c.dim());
    result.co_cp_part = c;
    return result;
  }

  // K1 = PSD cone, K2 = {A : (C - A)^Gamma >= 0}. Gamma is a Frobenius
  // isometry, so P_K2(A) = C - psd_project((C - A)^Gamma)^Gamma.
  const auto project_k2 = [&](const ComplexMatrix& a) {
    return c - gamma(psd_project(gamma(c - a)));
  };

  ComplexMatrix x = c;
  ComplexMatrix p(c.dim()), q(c.dim());
  ComplexMatrix y;
  double residual = std::numeric_limits<double>::infinity();
  int it = 0;
  while (it < options.max_iter) {
    ++it;
    y = psd_project(x + p);
    p = x + p - y;
    const ComplexMatrix x_next = project_k2(y + q);
    q = y + q - x_next;
    residual = distance(x_next, y);
    x = x_next;
    if (residual < options.tol) break;
  }

  result.residual = residual;
  result.iterations = it;
  if (residual < options.tol) {
    result.verdict = Decomposability::decomposable;
    result.cp_part = y;
    result.co_cp_part = c - y;
  } else if (residual >= 10.0 * options.tol) {
    result.verdict = Decomposability::not_decomposable;
  } else {
    result.verdict = Decomposability::indeterminate;
  }
  return result;
}

}  // namespace posmap

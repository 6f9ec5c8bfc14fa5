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

// Independent reference computations for tests. Eigen supplies the
// eigensolver; everything else is written from the definitions with explicit
// index loops so it shares no code with the library.

#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "posmap/matrix.hpp"

namespace posmap::oracle {

using EMat = Eigen::MatrixXcd;

inline EMat to_eigen(const ComplexMatrix& m) {
  EMat e(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) e(i, j) = m(i, j);
  return e;
}

inline ComplexMatrix from_eigen(const EMat& e) {
  ComplexMatrix m(e.rows());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

/// Ascending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<EMat> solver(to_eigen(h), Eigen::EigenvaluesOnly);
  const auto& v = solver.eigenvalues();
  return std::vector<double>(v.data(), v.data() + v.size());
}

inline double min_eigenvalue(const ComplexMatrix& h) { return eigenvalues(h).front(); }

/// Transpose on leg 2 read off the definition <ik|X^G|jl> = <il|X|jk>.
inline ComplexMatrix partial_transpose_2(const ComplexMatrix& x, std::size_t d1,
                                         std::size_t d2) {
  ComplexMatrix out(d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t k = 0; k < d2; ++k)
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t l = 0; l < d2; ++l) out(i * d2 + k, j * d2 + l) = x(i * d2 + l, j * d2 + k);
  return out;
}

/// Shannon entropy of a spectrum in bits, skipping zeros.
inline double entropy_bits(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double x : spectrum)
    if (x > 1e-14) s -= x * std::log2(x);
  return s;
}

/// Binary entropy in bits.
inline double h2(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

/// Two-qubit entanglement of formation from the concurrence.
inline double eof_from_concurrence(double c) {
  return h2(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

/// Werner p Psi- + (1-p) I/4: min eigenvalue of the partial transpose.
inline double werner_pt_min(double p) { return (1.0 - 3.0 * p) / 4.0; }
inline double werner_concurrence(double p) { return std::max(0.0, (3.0 * p - 1.0) / 2.0); }

}  // namespace posmap::oracle

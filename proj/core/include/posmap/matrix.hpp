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

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace posmap {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// Absolute tolerance on max |M[i,j] - conj(M[j,i])|. Matrices inside it are
/// symmetrized silently wherever a hermitian input is required.
inline constexpr double kHermitianTol = 1e-10;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |a><b|
  static ComplexMatrix outer(std::span<const cplx> a, std::span<const cplx> b);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  std::span<const cplx> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  cplx trace() const;
  double frobenius_norm() const;
  /// max |M[i,j] - conj(M[j,i])|
  double hermiticity_error() const;
  bool is_hermitian(double tol = kHermitianTol) const {
    return hermiticity_error() <= tol;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

ComplexVector operator*(const ComplexMatrix& m, std::span<const cplx> v);

/// <a|b>, antilinear in the first argument.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm(std::span<const cplx> v);
/// Tr[A B] without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);
/// Frobenius norm of A - B.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexVector kron(std::span<const cplx> a, std::span<const cplx> b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Dimension split of a bipartite space. Composite index is i * d2 + k, with
/// subsystem 1 the slow index, everywhere in the library.
struct Split {
  std::size_t d1 = 1;
  std::size_t d2 = 1;
  std::size_t total() const { return d1 * d2; }
  friend bool operator==(const Split&, const Split&) = default;
};

enum class Leg { first = 1, second = 2 };

/// Partial trace keeping `keep`; the other leg is traced out.
ComplexMatrix partial_trace(const ComplexMatrix& m, Split split, Leg keep);
/// Transposition on `leg`, identity on the other.
ComplexMatrix partial_transpose(const ComplexMatrix& m, Split split, Leg leg);

/// Returns (M + M^dagger) / 2, or throws NotHermitianError if M deviates from
/// hermitian by more than kHermitianTol.
ComplexMatrix require_hermitian(const ComplexMatrix& m);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // orthonormal columns, column k <-> values[k]
  ComplexVector vector(std::size_t k) const;
};

/// Cyclic Jacobi diagonalization of a hermitian matrix.
EigenSystem hermitian_eig(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
double min_eigenvalue(const ComplexMatrix& h);

/// V f(Lambda) V^dagger for hermitian H.
ComplexMatrix spectral_apply(const ComplexMatrix& h,
                             const std::function<double(double)>& f);

/// Frobenius-nearest PSD matrix: V max(Lambda, 0) V^dagger.
ComplexMatrix psd_project(const ComplexMatrix& h);

}  // namespace posmap

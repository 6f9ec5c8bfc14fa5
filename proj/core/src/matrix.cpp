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

#include "posmap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "posmap/errors.hpp"

namespace posmap {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim)
    throw DimensionError("matrix of dim " + std::to_string(dim) + " needs " +
                         std::to_string(dim * dim) + " entries, got " +
                         std::to_string(data_.size()));
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionError("matrix rows must be square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> a,
                                   std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("outer: length mismatch");
  ComplexMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(*this);
  for (auto& x : m.data_) x = std::conj(x);
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_error() const {
  double err = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return err;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix sum: dim mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix difference: dim mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("matrix product: dim mismatch");
  const std::size_t n = a.dim_;
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexVector operator*(const ComplexMatrix& m, std::span<const cplx> v) {
  if (v.size() != m.dim()) throw DimensionError("matrix-vector: dim mismatch");
  ComplexVector out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw DimensionError("inner: length mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_product: dim mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, i);
  return s;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

ComplexVector kron(std::span<const cplx> a, std::span<const cplx> b) {
  ComplexVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

namespace {

void check_split(const ComplexMatrix& m, Split split, const char* what) {
  if (split.d1 == 0 || split.d2 == 0 || m.dim() != split.total())
    throw DimensionError(std::string(what) + ": matrix dim " +
                         std::to_string(m.dim()) + " does not match split " +
                         std::to_string(split.d1) + "x" +
                         std::to_string(split.d2));
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, Split split, Leg keep) {
  check_split(m, split, "partial_trace");
  const auto [d1, d2] = split;
  if (keep == Leg::first) {
    ComplexMatrix out(d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < d2; ++k) s += m(i * d2 + k, j * d2 + k);
        out(i, j) = s;
      }
    return out;
  }
  ComplexMatrix out(d2);
  for (std::size_t k = 0; k < d2; ++k)
    for (std::size_t l = 0; l < d2; ++l) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < d1; ++i) s += m(i * d2 + k, i * d2 + l);
      out(k, l) = s;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, Split split, Leg leg) {
  check_split(m, split, "partial_transpose");
  const auto [d1, d2] = split;
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t k = 0; k < d2; ++k)
        for (std::size_t l = 0; l < d2; ++l) {
          const cplx v = leg == Leg::second ? m(i * d2 + l, j * d2 + k)
                                            : m(j * d2 + k, i * d2 + l);
          out(i * d2 + k, j * d2 + l) = v;
        }
  return out;
}

ComplexMatrix require_hermitian(const ComplexMatrix& m) {
  const double err = m.hermiticity_error();
  if (err > kHermitianTol)
    throw NotHermitianError("matrix is not hermitian (deviation " +
                            std::to_string(err) + ")");
  ComplexMatrix h(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

ComplexVector EigenSystem::vector(std::size_t k) const {
  ComplexVector v(vectors.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, k);
  return v;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eig(h).values;
}

double min_eigenvalue(const ComplexMatrix& h) {
  const auto values = hermitian_eigenvalues(h);
  return values.empty() ? 0.0 : values.front();
}

ComplexMatrix spectral_apply(const ComplexMatrix& h,
                             const std::function<double(double)>& f) {
  const auto eig = hermitian_eig(h);
  const std::size_t n = h.dim();
  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k) fv[k] = f(eig.values[k]);
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        if (fv[k] != 0.0)
          s += fv[k] * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
  for (std::size_t i = 0; i < n; ++i) out(i, i) = out(i, i).real();
  return out;
}

ComplexMatrix psd_project(const ComplexMatrix& h) {
  return spectral_apply(h, [](double x) { return x > 0.0 ? x : 0.0; });
}

}  // namespace posmap

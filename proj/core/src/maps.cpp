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

#include "posmap/maps.hpp"

#include <cmath>
#include <string>

#include "posmap/errors.hpp"

namespace posmap {

ChoiMatrix::ChoiMatrix(ComplexMatrix matrix, std::size_t d_in, std::size_t d_out)
    : matrix_(std::move(matrix)), d_in_(d_in), d_out_(d_out) {
  if (d_in == 0 || d_out == 0 || matrix_.dim() != d_in * d_out)
    throw DimensionError("Choi matrix dim " + std::to_string(matrix_.dim()) +
                         " does not match d_in * d_out = " +
                         std::to_string(d_in) + " * " + std::to_string(d_out));
  hermiticity_preserving_ = matrix_.is_hermitian();
  if (hermiticity_preserving_) matrix_ = require_hermitian(matrix_);
}

ChoiMatrix choi_from_action(
    const std::function<ComplexMatrix(const ComplexMatrix&)>& action,
    std::size_t d_in) {
  std::size_t d_out = 0;
  ComplexMatrix c;
  for (std::size_t i = 0; i < d_in; ++i)
    for (std::size_t j = 0; j < d_in; ++j) {
      ComplexMatrix unit(d_in);
      unit(i, j) = 1.0;
      const ComplexMatrix image = action(unit);
      if (d_out == 0) {
        d_out = image.dim();
        c = ComplexMatrix(d_in * d_out);
      } else if (image.dim() != d_out) {
        throw DimensionError("choi_from_action: inconsistent output dims");
      }
      for (std::size_t k = 0; k < d_out; ++k)
        for (std::size_t l = 0; l < d_out; ++l)
          c(i * d_out + k, j * d_out + l) = image(k, l);
    }
  return ChoiMatrix(std::move(c), d_in, d_out);
}

ChoiMatrix choi_from_kraus(std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) throw InvalidArgument("choi_from_kraus: no operators");
  const std::size_t d = kraus.front().dim();
  // C = sum_k |v_k><v_k| with v_k[i * d + r] = K_k[r, i].
  ComplexMatrix c(d * d);
  for (const auto& k : kraus) {
    if (k.dim() != d) throw DimensionError("choi_from_kraus: dim mismatch");
    ComplexVector v(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < d; ++r) v[i * d + r] = k(r, i);
    c += ComplexMatrix::outer(v, v);
  }
  return ChoiMatrix(std::move(c), d, d);
}

ComplexMatrix apply_map(const ChoiMatrix& choi, const ComplexMatrix& x) {
  const std::size_t din = choi.d_in(), dout = choi.d_out();
  if (x.dim() != din)
    throw DimensionError("apply_map: input dim " + std::to_string(x.dim()) +
                         " != d_in " + std::to_string(din));
  const ComplexMatrix& c = choi.matrix();
  ComplexMatrix out(dout);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j) {
      const cplx xij = x(i, j);
      if (xij == cplx{}) continue;
      for (std::size_t k = 0; k < dout; ++k)
        for (std::size_t l = 0; l < dout; ++l)
          out(k, l) += xij * c(i * dout + k, j * dout + l);
    }
  return out;
}

ChoiMatrix dual_map(const ChoiMatrix& choi) {
  const std::size_t din = choi.d_in(), dout = choi.d_out();
  const ComplexMatrix& c = choi.matrix();
  ComplexMatrix d(din * dout);
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j)
      for (std::size_t k = 0; k < dout; ++k)
        for (std::size_t l = 0; l < dout; ++l)
          d(k * din + i, l * din + j) = std::conj(c(i * dout + k, j * dout + l));
  return ChoiMatrix(std::move(d), dout, din);
}

ChoiMatrix tensor_with_identity(const ChoiMatrix& choi, std::size_t d2) {
  if (d2 == 0) throw DimensionError("tensor_with_identity: d2 must be positive");
  const std::size_t din = choi.d_in(), dout = choi.d_out();
  const std::size_t nin = din * d2, nout = dout * d2;
  const ComplexMatrix& c = choi.matrix();
  ComplexMatrix out(nin * nout);
  // (tau (x) id)(E_ij (x) E_ab) = tau(E_ij) (x) E_ab
  for (std::size_t i = 0; i < din; ++i)
    for (std::size_t j = 0; j < din; ++j)
      for (std::size_t a = 0; a < d2; ++a)
        for (std::size_t b = 0; b < d2; ++b) {
          const std::size_t row_in = i * d2 + a, col_in = j * d2 + b;
          for (std::size_t k = 0; k < dout; ++k)
            for (std::size_t l = 0; l < dout; ++l)
              out(row_in * nout + k * d2 + a, col_in * nout + l * d2 + b) =
                  c(i * dout + k, j * dout + l);
        }
  return ChoiMatrix(std::move(out), nin, nout);
}

namespace {

void require_hermitian_choi(const ChoiMatrix& choi, const char* what) {
  if (!choi.hermiticity_preserving())
    throw NotHermitianError(std::string(what) +
                            ": map is not hermiticity-preserving");
}

}  // namespace

PositivityVerdict is_cp(const ChoiMatrix& choi, double tol) {
  require_hermitian_choi(choi, "is_cp");
  const double lmin = min_eigenvalue(choi.matrix());
  return {lmin >= -tol, lmin};
}

PositivityVerdict is_co_cp(const ChoiMatrix& choi, double tol) {
  require_hermitian_choi(choi, "is_co_cp");
  const double lmin =
      min_eigenvalue(partial_transpose(choi.matrix(), choi.split(), Leg::second));
  return {lmin >= -tol, lmin};
}

ChoiMatrix identity_map(std::size_t d) {
  return choi_from_action([](const ComplexMatrix& x) { return x; }, d);
}

ChoiMatrix transpose_map(std::size_t d) {
  return choi_from_action([](const ComplexMatrix& x) { return x.transpose(); }, d);
}

ChoiMatrix depolarizing_map(std::size_t d, double lambda) {
  if (!std::isfinite(lambda)) throw InvalidArgument("depolarizing lambda must be finite");
  return choi_from_action(
      [d, lambda](const ComplexMatrix& x) {
        return x * lambda +
               ComplexMatrix::identity(d) * ((1.0 - lambda) * x.trace() / double(d));
      },
      d);
}

ChoiMatrix reduction_map(std::size_t d) {
  return choi_from_action(
      [d](const ComplexMatrix& x) { return ComplexMatrix::identity(d) * x.trace() - x; },
      d);
}

ChoiMatrix choi_map() {
  return choi_from_action(
      [](const ComplexMatrix& x) {
        ComplexMatrix y = -x;
        for (std::size_t k = 0; k < 3; ++k) y(k, k) = x(k, k) + x((k + 1) % 3, (k + 1) % 3);
        return y;
      },
      3);
}

ChoiMatrix werner_holevo_map(std::size_t d) {
  return choi_from_action(
      [d](const ComplexMatrix& x) {
        return (ComplexMatrix::identity(d) * x.trace() - x.transpose()) *
               (1.0 / double(d - 1));
      },
      d);
}

ChoiMatrix catalog(std::string_view name, const CatalogParams& params) {
  const std::size_t d = params.d;
  if (d < 1 || d > 16) throw InvalidArgument("catalog dimension must be in 1..16");
  if (name == "identity") return identity_map(d);
  if (name == "transpose") return transpose_map(d);
  if (name == "depolarizing") return depolarizing_map(d, params.lambda);
  if (name == "reduction") return reduction_map(d);
  if (name == "choi_map") return choi_map();
  if (name == "werner_holevo") {
    if (d < 2) throw InvalidArgument("werner_holevo needs d >= 2");
    return werner_holevo_map(d);
  }
  throw InvalidArgument("unknown map '" + std::string(name) + "'");
}

}  // namespace posmap

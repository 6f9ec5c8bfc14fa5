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

#include "posmap/random.hpp"

#include <array>
#include <cmath>

namespace posmap {

namespace {

std::uint32_t lo(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t hi(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

Rng::Rng(std::uint64_t seed) {
  std::seed_seq seq{lo(seed), hi(seed)};
  engine_.seed(seq);
}

double Rng::uniform() { return uniform_(engine_); }

double Rng::normal() { return normal_(engine_); }

std::size_t Rng::index(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

ComplexVector random_unit_vector(std::size_t dim, Rng& rng) {
  ComplexVector v(dim);
  double nrm = 0.0;
  while (nrm < 1e-12) {
    for (auto& x : v) x = cplx(rng.normal(), rng.normal());
    nrm = norm(v);
  }
  for (auto& x : v) x /= nrm;
  return v;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  std::vector<ComplexVector> cols;
  cols.reserve(dim);
  while (cols.size() < dim) {
    ComplexVector v(dim);
    for (auto& x : v) x = cplx(rng.normal(), rng.normal());
    // two passes of modified Gram-Schmidt keep orthogonality at 1e-15
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : cols) {
        const cplx proj = inner(u, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * u[i];
      }
    const double nrm = norm(v);
    if (nrm < 1e-8) continue;
    for (auto& x : v) x /= nrm;
    cols.push_back(std::move(v));
  }
  ComplexMatrix u(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = cols[j][i];
  return u;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      h(i, j) = cplx(rng.normal(), rng.normal()) / std::sqrt(2.0);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

}  // namespace posmap

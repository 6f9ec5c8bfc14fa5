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

#include "posmap/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "posmap/errors.hpp"
#include "posmap/random.hpp"

namespace posmap {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Split split)
    : matrix_(require_hermitian(matrix)), split_(split) {
  if (split.d1 == 0 || split.d2 == 0 || matrix_.dim() != split.total())
    throw DimensionError("density matrix dim " + std::to_string(matrix_.dim()) +
                         " does not match split " + std::to_string(split.d1) +
                         "x" + std::to_string(split.d2));
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kStateTraceTol)
    throw InvalidArgument("density matrix trace is " + std::to_string(tr));
  const double lmin = min_eigenvalue(matrix_);
  if (lmin < -kStateEigTol)
    throw InvalidArgument("density matrix has negative eigenvalue " +
                          std::to_string(lmin));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : DensityMatrix(matrix, Split{matrix.dim(), 1}) {}

DensityMatrix pure_state(std::span<const cplx> psi, Split split) {
  const double n2 = std::pow(norm(psi), 2);
  if (n2 == 0.0) throw InvalidArgument("pure_state: zero vector");
  return DensityMatrix(ComplexMatrix::outer(psi, psi) * (1.0 / n2), split);
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()), Split{a.dim(), b.dim()});
}

Ensemble::Ensemble(std::vector<double> weights,
                   std::vector<DensityMatrix> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
  if (weights_.empty() || weights_.size() != components_.size())
    throw InvalidArgument("ensemble needs matching non-empty weights/components");
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw InvalidArgument("ensemble weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidArgument("ensemble weights sum to " + std::to_string(total));
  for (const auto& c : components_)
    if (c.split() != components_.front().split())
      throw DimensionError("ensemble components have different splits");
}

ComplexMatrix Ensemble::barycenter() const {
  ComplexMatrix sum(components_.front().dim());
  for (std::size_t i = 0; i < size(); ++i)
    sum += components_[i].matrix() * weights_[i];
  return sum;
}

DensityMatrix restrict_to(const DensityMatrix& state, Leg leg) {
  return DensityMatrix(partial_trace(state.matrix(), state.split(), leg));
}

double entropy_of_spectrum(std::span<const double> spectrum) {
  double s = 0.0;
  for (double x : spectrum)
    if (x > kEntropyFloor && x < 1.0 - kEntropyFloor) s -= x * std::log2(x);
  return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityMatrix& state) {
  const auto values = hermitian_eigenvalues(state.matrix());
  return std::min(entropy_of_spectrum(values),
                  std::log2(static_cast<double>(state.dim())));
}

std::size_t numerical_rank(const DensityMatrix& state, double tol) {
  const auto values = hermitian_eigenvalues(state.matrix());
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [&](double x) { return x > tol; }));
}

namespace pauli {
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

DensityMatrix bell_state(int k) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector psi(4);
  switch (k) {
    case 1: psi = {r, 0, 0, r}; break;
    case 2: psi = {r, 0, 0, -r}; break;
    case 3: psi = {0, r, r, 0}; break;
    case 4: psi = {0, r, -r, 0}; break;
    default:
      throw InvalidArgument("bell index must be in 1..4, got " + std::to_string(k));
  }
  return pure_state(psi, Split{2, 2});
}

namespace {

void check_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    throw InvalidArgument(std::string(name) + " must lie in [0, 1], got " +
                          std::to_string(x));
}

}  // namespace

DensityMatrix werner_state(double p) {
  check_unit_interval(p, "werner p");
  const ComplexMatrix singlet = bell_state(4).matrix();
  return DensityMatrix(singlet * p + ComplexMatrix::identity(4) * ((1.0 - p) / 4.0),
                       Split{2, 2});
}

DensityMatrix isotropic_state(std::size_t d, double f) {
  check_unit_interval(f, "isotropic f");
  if (d < 2) throw InvalidArgument("isotropic d must be at least 2");
  ComplexVector phi(d * d);
  for (std::size_t i = 0; i < d; ++i) phi[i * d + i] = 1.0 / std::sqrt(double(d));
  const double dd = static_cast<double>(d * d);
  return DensityMatrix(ComplexMatrix::outer(phi, phi) * f +
                           ComplexMatrix::identity(d * d) * ((1.0 - f) / dd),
                       Split{d, d});
}

DensityMatrix max_mixed_state(Split split) {
  const auto n = split.total();
  return DensityMatrix(ComplexMatrix::identity(n) * (1.0 / double(n)), split);
}

DensityMatrix random_density(Split split, std::size_t rank, std::uint64_t seed) {
  const std::size_t n = split.total();
  if (rank < 1 || rank > n)
    throw InvalidArgument("random_density rank must be in 1.." + std::to_string(n));
  Rng rng(seed);
  std::vector<ComplexVector> cols(rank, ComplexVector(n));
  for (auto& c : cols)
    for (auto& x : c) x = cplx(rng.normal(), rng.normal());
  ComplexMatrix m(n);
  for (const auto& c : cols) m += ComplexMatrix::outer(c, c);
  m *= 1.0 / m.trace().real();
  return DensityMatrix(m, split);
}

SeparableSample random_separable(Split split, std::size_t components,
                                 std::uint64_t seed) {
  if (components < 1) throw InvalidArgument("random_separable needs m >= 1");
  Rng rng(seed);
  std::vector<double> weights(components);
  double total = 0.0;
  for (auto& w : weights) {
    w = -std::log(1.0 - rng.uniform());
    total += w;
  }
  for (auto& w : weights) w /= total;

  std::vector<DensityMatrix> parts;
  parts.reserve(components);
  for (std::size_t i = 0; i < components; ++i) {
    const auto a = random_unit_vector(split.d1, rng);
    const auto b = random_unit_vector(split.d2, rng);
    parts.push_back(pure_state(kron(a, b), split));
  }
  Ensemble certificate(std::move(weights), std::move(parts));
  DensityMatrix state(certificate.barycenter(), split);
  return {std::move(state), std::move(certificate)};
}

DensityMatrix make_named(std::string_view family, const NamedParams& p) {
  if (family == "bell") return bell_state(p.k);
  if (family == "werner") return werner_state(p.p);
  if (family == "isotropic") return isotropic_state(p.d, p.f);
  if (family == "max_mixed") return max_mixed_state(p.split);
  if (family == "product") {
    if (!p.first || !p.second)
      throw InvalidArgument("product needs two factor states");
    return product_state(*p.first, *p.second);
  }
  if (family == "random_separable")
    return random_separable(p.split, p.components, p.seed).state;
  if (family == "random_density") return random_density(p.split, p.rank, p.seed);
  throw InvalidArgument("unknown state family '" + std::string(family) + "'");
}

DensityMatrix gibbs_state(const ComplexMatrix& h, double beta) {
  if (!(beta >= 0.0)) throw InvalidArgument("gibbs_state needs beta >= 0");
  const auto e0 = min_eigenvalue(h);
  ComplexMatrix rho =
      spectral_apply(h, [&](double e) { return std::exp(-beta * (e - e0)); });
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix(rho);
}

namespace {

// Operator `op` on `site` of an n-site qubit chain; site 0 is the slow index.
ComplexMatrix site_operator(const ComplexMatrix& op, int site, int sites) {
  ComplexMatrix out = site == 0 ? op : ComplexMatrix::identity(2);
  for (int s = 1; s < sites; ++s)
    out = kron(out, s == site ? op : ComplexMatrix::identity(2));
  return out;
}

void check_sites(int sites) {
  if (sites < 2 || sites > 6)
    throw InvalidArgument("chain length must be in 2..6, got " + std::to_string(sites));
}

}  // namespace

ComplexMatrix ising_hamiltonian(int sites, double j, double h) {
  check_sites(sites);
  const std::size_t n = std::size_t{1} << sites;
  ComplexMatrix hm(n);
  for (int s = 0; s + 1 < sites; ++s)
    hm -= site_operator(pauli::z(), s, sites) * site_operator(pauli::z(), s + 1, sites) * j;
  for (int s = 0; s < sites; ++s) hm -= site_operator(pauli::x(), s, sites) * h;
  return hm;
}

ComplexMatrix xxz_hamiltonian(int sites, double j, double delta) {
  check_sites(sites);
  const std::size_t n = std::size_t{1} << sites;
  ComplexMatrix hm(n);
  for (int s = 0; s + 1 < sites; ++s) {
    ComplexMatrix bond =
        site_operator(pauli::x(), s, sites) * site_operator(pauli::x(), s + 1, sites) +
        site_operator(pauli::y(), s, sites) * site_operator(pauli::y(), s + 1, sites) +
        site_operator(pauli::z(), s, sites) * site_operator(pauli::z(), s + 1, sites) * delta;
    hm -= bond * j;
  }
  return hm;
}

}  // namespace posmap

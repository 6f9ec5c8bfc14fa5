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

#include "posmap/measures.hpp"

#include <cmath>
#include <string>

#include "ensemble_search.hpp"
#include "posmap/errors.hpp"
#include "posmap/random.hpp"

namespace posmap {

PptResult ppt_test(const DensityMatrix& state) {
  const auto eig =
      hermitian_eig(partial_transpose(state.matrix(), state.split(), Leg::second));
  PptResult r;
  r.min_eigenvalue = eig.values.front();
  r.eigenvector = eig.vector(0);
  r.npt = r.min_eigenvalue < -kCertifyTol;
  const auto [d1, d2] = state.split();
  r.conclusive = std::min(d1, d2) == 1 || d1 * d2 <= 6;
  return r;
}

double negativity(const DensityMatrix& state) {
  double n = 0.0;
  for (double x :
       hermitian_eigenvalues(partial_transpose(state.matrix(), state.split(), Leg::second)))
    if (x < 0.0) n -= x;
  return n;
}

WitnessResult map_witness(const DensityMatrix& state, const ChoiMatrix& choi) {
  const auto [d1, d2] = state.split();
  if (choi.d_out() != d1)
    throw DimensionError("map_witness: map output dim " + std::to_string(choi.d_out()) +
                         " does not match leg-1 dim " + std::to_string(d1));
  const ChoiMatrix lifted = tensor_with_identity(dual_map(choi), d2);
  WitnessResult r;
  r.image = apply_map(lifted, state.matrix());
  const auto eig = hermitian_eig(r.image);
  r.min_eigenvalue = eig.values.front();
  r.eigenvector = eig.vector(0);
  r.entangled = r.min_eigenvalue < -kCertifyTol;
  return r;
}

namespace {

std::size_t resolve_size(const SearchOptions& options, std::size_t rank) {
  const std::size_t k = options.ensemble_size ? options.ensemble_size : rank * rank;
  if (k < rank)
    throw InvalidArgument("ensemble size " + std::to_string(k) +
                          " is below the state's rank " + std::to_string(rank));
  return k;
}

Ensemble singleton(const DensityMatrix& state) { return Ensemble({1.0}, {state}); }

}  // namespace

MeasureReport eof_upper(const DensityMatrix& state, const SearchOptions& options) {
  const auto pur = detail::purify(state);
  MeasureReport report;
  if (pur.rank() <= 1) {
    report.value = von_neumann_entropy(restrict_to(state, Leg::first));
    report.certificate = singleton(state);
    report.upper_bound = false;
    return report;
  }
  const std::size_t k = resolve_size(options, pur.rank());

  std::optional<detail::LocalResult> best;
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
    auto res = detail::minimize_marginal_entropy(
        pur, detail::random_ensemble(pur, k, rng), options.iters, options.tol);
    ++report.restarts_used;
    if (!best || res.value < best->value) best = std::move(res);
    if (best->value <= options.tol) break;
  }
  if (!best) throw InvalidArgument("eof_upper needs at least one restart");
  report.value = best->value;
  report.converged = best->converged;
  report.certificate = detail::to_ensemble(best->members, best->groups, state.split());
  return report;
}

MeasureReport dcoef(const DensityMatrix& state, const ComplexMatrix& a1,
                    const ComplexMatrix& a2, const SearchOptions& options) {
  const auto [d1, d2] = state.split();
  if (a1.dim() != d1 || a2.dim() != d2)
    throw DimensionError("dcoef: observables do not match the state's split");
  const ComplexMatrix h1 = require_hermitian(a1), h2 = require_hermitian(a2);
  const double target = trace_product(state.matrix(), kron(h1, h2)).real();

  const auto pur = detail::purify(state);
  MeasureReport report;
  if (pur.rank() <= 1) {
    const double m1 = trace_product(restrict_to(state, Leg::first).matrix(), h1).real();
    const double m2 = trace_product(restrict_to(state, Leg::second).matrix(), h2).real();
    report.value = std::abs(target - m1 * m2);
    report.certificate = singleton(state);
    report.upper_bound = false;
    return report;
  }
  const std::size_t k = resolve_size(options, pur.rank());

  std::optional<detail::LocalResult> best;
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
    auto res = detail::minimize_correlation_gap(pur, detail::random_ensemble(pur, k, rng),
                                                h1, h2, target, options.iters, options.tol);
    ++report.restarts_used;
    if (!best || res.value < best->value) best = std::move(res);
    if (best->value <= options.tol) break;
  }
  if (!best) throw InvalidArgument("dcoef needs at least one restart");
  report.value = best->value;
  report.converged = best->converged;
  report.certificate = detail::to_ensemble(best->members, best->groups, state.split());
  return report;
}

MeasureReport dcoef_sup(const DensityMatrix& state, const SearchOptions& options) {
  const auto [d1, d2] = state.split();
  const auto basis1 = gell_mann_basis(d1);
  const auto basis2 = gell_mann_basis(d2);

  MeasureReport best;
  best.value = -1.0;
  int restarts = 0;
  bool converged = true, upper = false;
  for (std::size_t p = 0; p < basis1.size(); ++p)
    for (std::size_t q = 0; q < basis2.size(); ++q) {
      SearchOptions sub = options;
      sub.seed = derive_seed(options.seed, p * basis2.size() + q);
      auto rep = dcoef(state, basis1[p], basis2[q], sub);
      restarts += rep.restarts_used;
      converged = converged && rep.converged;
      upper = upper || rep.upper_bound;
      if (rep.value > best.value) {
        best = std::move(rep);
        best.argmax = std::pair{p, q};
      }
    }
  if (best.value < 0.0) {
    // a leg of dimension 1 has no traceless observables
    best.value = 0.0;
    best.certificate = singleton(state);
  }
  best.restarts_used = restarts;
  best.converged = converged;
  best.upper_bound = upper;
  return best;
}

std::vector<ComplexMatrix> gell_mann_basis(std::size_t d) {
  std::vector<ComplexMatrix> basis;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix s(d);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      basis.push_back(std::move(s));
    }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix a(d);
      a(j, k) = cplx(0.0, -1.0);
      a(k, j) = cplx(0.0, 1.0);
      basis.push_back(std::move(a));
    }
  for (std::size_t l = 1; l < d; ++l) {
    ComplexMatrix m(d);
    const double norm = std::sqrt(2.0 / double(l * (l + 1)));
    for (std::size_t j = 0; j < l; ++j) m(j, j) = norm;
    m(l, l) = -double(l) * norm;
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace posmap

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

#include "posmap/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "posmap/errors.hpp"
#include "posmap/random.hpp"

namespace posmap {

ChoiMatrix ChannelFamily::at(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw InvalidArgument("channel family '" + name + "' needs finite t >= 0");
  return evaluator(t);
}

ChannelFamily identity_family(std::size_t d) {
  return {"identity", d, true, true, [d](double) { return identity_map(d); }};
}

ChannelFamily depolarizing_flow(std::size_t d, double rate) {
  if (!(rate >= 0.0)) throw InvalidArgument("depolarizing_flow needs rate >= 0");
  return {"depolarizing_flow", d, true, true,
          [d, rate](double t) { return depolarizing_map(d, std::exp(-rate * t)); }};
}

ChannelFamily transpose_mix(std::size_t d, double speed) {
  if (!(speed >= 0.0)) throw InvalidArgument("transpose_mix needs speed >= 0");
  return {"transpose_mix", d, true, false, [d, speed](double t) {
            const double m = std::min(1.0, speed * t);
            return ChoiMatrix(identity_map(d).matrix() * (1.0 - m) +
                                  transpose_map(d).matrix() * m,
                              d, d);
          }};
}

ChannelFamily glauber_flip(const ComplexMatrix& hamiltonian, double beta, double rate) {
  const std::size_t dim = hamiltonian.dim();
  int sites = 0;
  while ((std::size_t{1} << sites) < dim) ++sites;
  if (dim < 2 || (std::size_t{1} << sites) != dim)
    throw InvalidArgument("glauber_flip needs a 2^n-dimensional hamiltonian");
  if (!(rate >= 0.0)) throw InvalidArgument("glauber_flip needs rate >= 0");

  const ComplexMatrix gibbs = gibbs_state(hamiltonian, beta).matrix();
  std::vector<double> pi(dim);
  for (std::size_t s = 0; s < dim; ++s) pi[s] = gibbs(s, s).real();

  // acceptance[j][s] for flipping site j (site 0 is the most significant bit)
  std::vector<std::vector<double>> acceptance(sites, std::vector<double>(dim));
  for (int j = 0; j < sites; ++j) {
    const std::size_t mask = std::size_t{1} << (sites - 1 - j);
    for (std::size_t s = 0; s < dim; ++s)
      acceptance[j][s] = pi[s] > 0.0 ? std::min(1.0, pi[s ^ mask] / pi[s]) : 1.0;
  }

  auto evaluator = [=](double t) {
    const double scale = (1.0 - std::exp(-rate * t)) / double(sites);
    std::vector<ComplexMatrix> kraus;
    ComplexMatrix stay(dim);
    std::vector<double> leave(dim, 0.0);
    for (int j = 0; j < sites; ++j) {
      const std::size_t mask = std::size_t{1} << (sites - 1 - j);
      ComplexMatrix k(dim);
      for (std::size_t s = 0; s < dim; ++s) {
        const double p = scale * acceptance[j][s];
        k(s ^ mask, s) = std::sqrt(p);
        leave[s] += p;
      }
      kraus.push_back(std::move(k));
    }
    for (std::size_t s = 0; s < dim; ++s) stay(s, s) = std::sqrt(std::max(0.0, 1.0 - leave[s]));
    kraus.insert(kraus.begin(), std::move(stay));
    return dual_map(choi_from_kraus(kraus));
  };
  return {"glauber_flip", dim, true, true, std::move(evaluator)};
}

ChannelFamily family_catalog(std::string_view name, const FamilyParams& params) {
  if (name == "identity") return identity_family(params.d);
  if (name == "depolarizing_flow") return depolarizing_flow(params.d, params.rate);
  if (name == "transpose_mix") return transpose_mix(params.d, params.speed);
  if (name == "glauber_flip")
    return glauber_flip(params.hamiltonian, params.beta, params.rate);
  throw InvalidArgument("unknown channel family '" + std::string(name) + "'");
}

std::vector<double> uniform_grid(double t_max, int steps) {
  if (steps < 1 || !(t_max >= 0.0) || !std::isfinite(t_max))
    throw InvalidArgument("grid needs steps >= 1 and finite t_max >= 0");
  std::vector<double> grid(steps + 1);
  for (int i = 0; i <= steps; ++i) grid[i] = t_max * double(i) / double(steps);
  return grid;
}

TrackRecord evolve_track(const DensityMatrix& initial, const ChannelFamily& family,
                         std::span<const double> grid, const TrackOptions& options) {
  const Split split = initial.split();
  if (family.dim != split.d1)
    throw DimensionError("family '" + family.name + "' acts on dim " +
                         std::to_string(family.dim) + " but leg 1 has dim " +
                         std::to_string(split.d1));
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw InvalidArgument("time grid must be ascending");

  TrackRecord record;
  record.points.reserve(grid.size());
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const double t = grid[idx];
    const ChoiMatrix lifted = tensor_with_identity(dual_map(family.at(t)), split.d2);
    const ComplexMatrix out = apply_map(lifted, initial.matrix());

    TrackPoint point;
    point.t = t;
    point.trace = out.trace().real();
    point.min_eigenvalue = min_eigenvalue(out);
    if (point.min_eigenvalue < -kNegativeTimeTol && !record.first_negative_time)
      record.first_negative_time = t;

    std::optional<DensityMatrix> state;
    try {
      state.emplace(out, split);
    } catch (const InvalidArgument&) {
    }
    if (state) {
      point.negativity = negativity(*state);
      SearchOptions search = options.search;
      search.seed = derive_seed(options.search.seed, idx);
      if (options.eof) point.eof_upper = eof_upper(*state, search).value;
      if (options.dcoef_sup) point.dcoef_sup = dcoef_sup(*state, search).value;
    }
    record.points.push_back(point);
  }
  return record;
}

}  // namespace posmap

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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posmap/maps.hpp"
#include "posmap/measures.hpp"
#include "posmap/states.hpp"

namespace posmap {

/// Time-parametrized map t -> alpha_t on leg 1, in the Heisenberg picture.
/// States evolve under the dual, (alpha_t (x) id)^d. Every family satisfies
/// alpha_0 = id.
struct ChannelFamily {
  std::string name;
  std::size_t dim = 2;
  /// alpha_t(I) = I for all t, so the dual evolution preserves trace.
  bool unital = true;
  bool completely_positive = true;
  std::function<ChoiMatrix(double)> evaluator;

  /// Throws InvalidArgument for negative or non-finite t.
  ChoiMatrix at(double t) const;
};

ChannelFamily identity_family(std::size_t d);
/// alpha_t = depolarizing(lambda = exp(-rate t)).
ChannelFamily depolarizing_flow(std::size_t d, double rate);
/// alpha_t = (1 - m) id + m T with m = min(1, speed t). Positive for every
/// t, not CP once m > 0.
ChannelFamily transpose_mix(std::size_t d, double speed);
/// Illustrative single-site spin-flip channel on a 2^n chain. In the
/// Schroedinger picture the Kraus operators are
///   K_j = X_j diag(sqrt(p_j(s))),  K_0 = diag(sqrt(1 - sum_j p_j(s))),
/// with p_j(s) = (1 - exp(-rate t)) / n * min(1, pi(flip_j s) / pi(s)) and pi
/// the diagonal of the Gibbs state of H (Metropolis acceptance; equals
/// min(1, exp(-beta dE)) for diagonal H). The family is the dual of that
/// channel, so it is unital and CP.
ChannelFamily glauber_flip(const ComplexMatrix& hamiltonian, double beta, double rate);

struct FamilyParams {
  std::size_t d = 2;
  double rate = 1.0;
  double speed = 1.0;
  /// glauber_flip only.
  ComplexMatrix hamiltonian;
  double beta = 1.0;
};

/// identity, depolarizing_flow, transpose_mix, glauber_flip.
ChannelFamily family_catalog(std::string_view name, const FamilyParams& params);

/// steps + 1 evenly spaced times from 0 to t_max.
std::vector<double> uniform_grid(double t_max, int steps);

struct TrackOptions {
  bool eof = false;
  bool dcoef_sup = false;
  SearchOptions search;
};

struct TrackPoint {
  double t = 0.0;
  double min_eigenvalue = 0.0;
  /// Undefined when the evolved operator is not a valid state.
  std::optional<double> negativity;
  std::optional<double> eof_upper;
  std::optional<double> dcoef_sup;
  double trace = 1.0;
};

struct TrackRecord {
  std::vector<TrackPoint> points;
  /// First grid time with min_eigenvalue < -1e-9.
  std::optional<double> first_negative_time;
};

inline constexpr double kNegativeTimeTol = 1e-9;

/// Evaluates (alpha_t (x) id)^d rho0 on each grid time. Throws
/// DimensionError if the family dim differs from d1 and InvalidArgument for a
/// non-ascending grid.
TrackRecord evolve_track(const DensityMatrix& initial, const ChannelFamily& family,
                         std::span<const double> grid, const TrackOptions& options = {});

}  // namespace posmap

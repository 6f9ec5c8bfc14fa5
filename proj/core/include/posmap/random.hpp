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

#include <cstdint>
#include <random>

#include "posmap/matrix.hpp"

namespace posmap {

/// Seed splitting: stream k of seed s is seeded from
/// std::seed_seq{lo(s), hi(s), lo(k), hi(k)}. Restart j of an optimizer always
/// draws from derive_seed(seed, j), so runs with more restarts extend runs
/// with fewer.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source; mt19937_64 behind standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  double uniform();  // [0, 1)
  double normal();   // N(0, 1)
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Complex Gaussian vector normalized to unit length (Haar on the sphere).
ComplexVector random_unit_vector(std::size_t dim, Rng& rng);
/// Haar unitary via Gram-Schmidt on a complex Ginibre matrix; columns are
/// the orthonormal vectors.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
/// (G + G^dagger) / 2 for a complex Ginibre G.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

}  // namespace posmap

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

#include "ensemble_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace posmap::detail {

namespace {

constexpr double kInitialStep = 0.25;
constexpr double kMinStep = 1e-7;
constexpr double kMinWeight = 1e-300;

// Reduced matrix of |phi><phi| on the smaller leg.
ComplexMatrix reduce_small(std::span<const cplx> phi, Split s) {
  if (s.d1 <= s.d2) {
    ComplexMatrix r(s.d1);
    for (std::size_t a = 0; a < s.d1; ++a)
      for (std::size_t b = a; b < s.d1; ++b) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < s.d2; ++k)
          acc += phi[a * s.d2 + k] * std::conj(phi[b * s.d2 + k]);
        r(a, b) = acc;
        r(b, a) = std::conj(acc);
      }
    return r;
  }
  ComplexMatrix r(s.d2);
  for (std::size_t k = 0; k < s.d2; ++k)
    for (std::size_t l = k; l < s.d2; ++l) {
      cplx acc = 0.0;
      for (std::size_t a = 0; a < s.d1; ++a)
        acc += phi[a * s.d2 + k] * std::conj(phi[a * s.d2 + l]);
      r(k, l) = acc;
      r(l, k) = std::conj(acc);
    }
  return r;
}

// w * S(R / w) in bits for the unnormalized reduced matrix R of weight w.
double weighted_entropy(const ComplexMatrix& r) {
  const double w = r.trace().real();
  if (w < kMinWeight) return 0.0;
  double s = 0.0;
  const auto add = [&](double mu) {
    if (mu > kEntropyFloor * w) s -= mu * std::log2(mu / w);
  };
  if (r.dim() == 1) return 0.0;
  if (r.dim() == 2) {
    const double a = r(0, 0).real(), d = r(1, 1).real();
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(r(0, 1)));
    add(0.5 * (a + d) + disc);
    add(std::max(0.5 * (a + d) - disc, 0.0));
  } else {
    for (double mu : hermitian_eigenvalues(r)) add(mu);
  }
  return std::max(s, 0.0);
}

// w * (1 - Tr[(R / w)^2])
double weighted_linear_entropy(const ComplexMatrix& r) {
  const double w = r.trace().real();
  if (w < kMinWeight) return 0.0;
  double purity = 0.0;
  for (const auto& x : r.data()) purity += std::norm(x);
  return std::max(w - purity / w, 0.0);
}

void rotate_pair(const ComplexVector& pi, const ComplexVector& pj, double theta,
                 cplx phase, ComplexVector& out_i, ComplexVector& out_j) {
  const double c = std::cos(theta), s = std::sin(theta);
  const cplx sp = s * phase, sm = s * std::conj(phase);
  for (std::size_t k = 0; k < pi.size(); ++k) {
    out_i[k] = c * pi[k] - sp * pj[k];
    out_j[k] = sm * pi[k] + c * pj[k];
  }
}

// Objective interface used by the search driver:
//   reset(members)        recompute from scratch
//   value()               current objective
//   trial(i, j, pi, pj)   objective if members i, j were replaced
//   commit()              accept the last trial
//   extra_moves(members)  non-rotation moves, once per sweep

class EntropyObjective {
 public:
  EntropyObjective(Split split, bool linear) : split_(split), linear_(linear) {}

  void reset(const std::vector<ComplexVector>& members) {
    terms_.resize(members.size());
    total_ = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      terms_[i] = term(members[i]);
      total_ += terms_[i];
    }
  }
  double value() const { return total_; }
  double trial(std::size_t i, std::size_t j, const ComplexVector& pi,
               const ComplexVector& pj) {
    ti_ = term(pi);
    tj_ = term(pj);
    i_ = i;
    j_ = j;
    return total_ - terms_[i] - terms_[j] + ti_ + tj_;
  }
  void commit() {
    total_ += ti_ + tj_ - terms_[i_] - terms_[j_];
    terms_[i_] = ti_;
    terms_[j_] = tj_;
  }
  void extra_moves(std::vector<ComplexVector>&) {}

 private:
  double term(const ComplexVector& phi) const {
    const ComplexMatrix r = reduce_small(phi, split_);
    return linear_ ? weighted_linear_entropy(r) : weighted_entropy(r);
  }

  Split split_;
  bool linear_;
  std::vector<double> terms_;
  double total_ = 0.0;
  double ti_ = 0.0, tj_ = 0.0;
  std::size_t i_ = 0, j_ = 0;
};

class CorrelationObjective {
 public:
  CorrelationObjective(Split split, const ComplexMatrix& a1, const ComplexMatrix& a2,
                       double target, std::vector<std::size_t> groups)
      : split_(split), a1_(a1), a2_(a2), target_(target), groups_(std::move(groups)) {}

  void reset(const std::vector<ComplexVector>& members) {
    const std::size_t k = members.size();
    stats_.resize(k);
    sums_.assign(k, Stats{});
    for (std::size_t i = 0; i < k; ++i) {
      stats_[i] = stats(members[i]);
      sums_[groups_[i]] += stats_[i];
    }
    classical_ = 0.0;
    for (const auto& g : sums_) classical_ += g.term();
  }
  double value() const { return std::abs(target_ - classical_); }

  double trial(std::size_t i, std::size_t j, const ComplexVector& pi,
               const ComplexVector& pj) {
    si_ = stats(pi);
    sj_ = stats(pj);
    i_ = i;
    j_ = j;
    return std::abs(target_ - classical_after_replace());
  }
  void commit() {
    classical_ = classical_after_replace();
    sums_[groups_[i_]] += si_ - stats_[i_];
    sums_[groups_[j_]] += sj_ - stats_[j_];
    stats_[i_] = si_;
    stats_[j_] = sj_;
  }

  // Relocate single members between groups (coarse-graining and splitting).
  void extra_moves(std::vector<ComplexVector>&) {
    const std::size_t k = stats_.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t from = groups_[i];
      double best = value();
      std::size_t best_to = from;
      for (std::size_t to = 0; to < k; ++to) {
        if (to == from) continue;
        const double c = classical_ - sums_[from].term() - sums_[to].term() +
                         (sums_[from] - stats_[i]).term() + (sums_[to] + stats_[i]).term();
        const double v = std::abs(target_ - c);
        if (v < best - 1e-15) {
          best = v;
          best_to = to;
        }
      }
      if (best_to != from) {
        classical_ = classical_ - sums_[from].term() - sums_[best_to].term();
        sums_[from] -= stats_[i];
        sums_[best_to] += stats_[i];
        classical_ += sums_[from].term() + sums_[best_to].term();
        groups_[i] = best_to;
      }
    }
  }

  const std::vector<std::size_t>& groups() const { return groups_; }

 private:
  struct Stats {
    double w = 0.0, a = 0.0, b = 0.0;
    Stats& operator+=(const Stats& o) {
      w += o.w;
      a += o.a;
      b += o.b;
      return *this;
    }
    Stats& operator-=(const Stats& o) {
      w -= o.w;
      a -= o.a;
      b -= o.b;
      return *this;
    }
    friend Stats operator+(Stats x, const Stats& y) { return x += y; }
    friend Stats operator-(Stats x, const Stats& y) { return x -= y; }
    // W <a1> <a2> = A B / W
    double term() const { return w > kMinWeight ? a * b / w : 0.0; }
  };

  Stats stats(const ComplexVector& phi) const {
    const auto [d1, d2] = split_;
    Stats s;
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t k = 0; k < d2; ++k) {
        const cplx ca = std::conj(phi[a * d2 + k]);
        s.w += std::norm(phi[a * d2 + k]);
        cplx acc1 = 0.0, acc2 = 0.0;
        for (std::size_t b = 0; b < d1; ++b) acc1 += a1_(a, b) * phi[b * d2 + k];
        for (std::size_t l = 0; l < d2; ++l) acc2 += a2_(k, l) * phi[a * d2 + l];
        s.a += (ca * acc1).real();
        s.b += (ca * acc2).real();
      }
    return s;
  }

  double classical_after_replace() const {
    const std::size_t gi = groups_[i_], gj = groups_[j_];
    if (gi == gj) {
      const Stats g = sums_[gi] - stats_[i_] - stats_[j_] + si_ + sj_;
      return classical_ - sums_[gi].term() + g.term();
    }
    const Stats g1 = sums_[gi] - stats_[i_] + si_;
    const Stats g2 = sums_[gj] - stats_[j_] + sj_;
    return classical_ - sums_[gi].term() - sums_[gj].term() + g1.term() + g2.term();
  }

  Split split_;
  const ComplexMatrix& a1_;
  const ComplexMatrix& a2_;
  double target_;
  std::vector<std::size_t> groups_;
  std::vector<Stats> stats_;
  std::vector<Stats> sums_;
  double classical_ = 0.0;
  Stats si_, sj_;
  std::size_t i_ = 0, j_ = 0;
};

// Coordinate search over Givens angles with a three-point parabolic step.
// Returns true if the search converged (step below kMinStep or value at or
// below tol) rather than exhausting the sweep budget.
template <class Objective>
bool local_search(Objective& obj, std::vector<ComplexVector>& members, int iters,
                  double tol) {
  const std::size_t k = members.size();
  const std::size_t n = k ? members.front().size() : 0;
  ComplexVector pi(n), pj(n);
  const cplx phases[2] = {cplx(1.0, 0.0), cplx(0.0, 1.0)};
  double h = kInitialStep;

  obj.reset(members);
  for (int sweep = 0; sweep < iters; ++sweep) {
    if (obj.value() <= tol) return true;
    const double before = obj.value();
    for (std::size_t i = 0; i + 1 < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        for (const cplx phase : phases) {
          const auto eval = [&](double theta) {
            rotate_pair(members[i], members[j], theta, phase, pi, pj);
            return obj.trial(i, j, pi, pj);
          };
          const double f0 = obj.value();
          const double fp = eval(h);
          const double fm = eval(-h);
          double best = f0, best_theta = 0.0;
          if (fp < best) best = fp, best_theta = h;
          if (fm < best) best = fm, best_theta = -h;
          const double curvature = fp + fm - 2.0 * f0;
          if (curvature > 0.0) {
            const double t =
                std::clamp(h * (fm - fp) / (2.0 * curvature), -8.0 * h, 8.0 * h);
            if (t != h && t != -h && t != 0.0) {
              const double ft = eval(t);
              if (ft < best) best = ft, best_theta = t;
            }
          }
          if (best_theta != 0.0 && best < f0) {
            eval(best_theta);
            obj.commit();
            std::swap(members[i], pi);
            std::swap(members[j], pj);
          }
        }
    obj.extra_moves(members);
    obj.reset(members);
    if (before - obj.value() <= tol) {
      h *= 0.5;
      if (h < kMinStep) return true;
    }
  }
  return obj.value() <= tol;
}

}  // namespace

Purification purify(const DensityMatrix& state) {
  const auto eig = hermitian_eig(state.matrix());
  Purification pur{state.split(), {}};
  for (std::size_t k = eig.values.size(); k-- > 0;) {
    if (eig.values[k] <= kSupportFloor) continue;
    ComplexVector col = eig.vector(k);
    const double amp = std::sqrt(eig.values[k]);
    for (auto& x : col) x *= amp;
    pur.columns.push_back(std::move(col));
  }
  return pur;
}

std::vector<ComplexVector> random_ensemble(const Purification& pur, std::size_t k,
                                           Rng& rng) {
  const ComplexMatrix u = random_unitary(k, rng);
  const std::size_t n = pur.split.total();
  std::vector<ComplexVector> members(k, ComplexVector(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < pur.rank(); ++c) {
      const cplx uic = u(i, c);
      for (std::size_t x = 0; x < n; ++x) members[i][x] += uic * pur.columns[c][x];
    }
  return members;
}

double marginal_entropy_of(std::span<const ComplexVector> members, Split split) {
  double s = 0.0;
  for (const auto& m : members) s += weighted_entropy(reduce_small(m, split));
  return s;
}

LocalResult minimize_marginal_entropy(const Purification& pur,
                                      std::vector<ComplexVector> start, int iters,
                                      double tol) {
  EntropyObjective linear(pur.split, true);
  local_search(linear, start, iters, tol * tol);
  EntropyObjective entropy(pur.split, false);
  LocalResult result;
  result.converged = local_search(entropy, start, iters, tol);
  result.value = entropy.value();
  result.groups.resize(start.size());
  for (std::size_t i = 0; i < start.size(); ++i) result.groups[i] = i;
  result.members = std::move(start);
  return result;
}

LocalResult minimize_correlation_gap(const Purification& pur,
                                     std::vector<ComplexVector> start,
                                     const ComplexMatrix& a1, const ComplexMatrix& a2,
                                     double target, int iters, double tol) {
  std::vector<std::size_t> groups(start.size());
  for (std::size_t i = 0; i < groups.size(); ++i) groups[i] = i;
  CorrelationObjective obj(pur.split, a1, a2, target, std::move(groups));
  LocalResult result;
  result.converged = local_search(obj, start, iters, tol);
  result.value = obj.value();
  result.groups = obj.groups();
  result.members = std::move(start);
  return result;
}

Ensemble to_ensemble(const std::vector<ComplexVector>& members,
                     const std::vector<std::size_t>& groups, Split split) {
  const std::size_t n = split.total();
  std::vector<ComplexMatrix> sums(members.size(), ComplexMatrix(n));
  std::vector<double> weights(members.size(), 0.0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const double w = std::pow(norm(members[i]), 2);
    if (w < 1e-14) continue;
    sums[groups[i]] += ComplexMatrix::outer(members[i], members[i]);
    weights[groups[i]] += w;
  }
  double total = 0.0;
  for (double w : weights) total += w;
  std::vector<double> out_weights;
  std::vector<DensityMatrix> components;
  for (std::size_t g = 0; g < sums.size(); ++g) {
    if (weights[g] <= 0.0) continue;
    out_weights.push_back(weights[g] / total);
    components.emplace_back(sums[g] * (1.0 / weights[g]), split);
  }
  return Ensemble(std::move(out_weights), std::move(components));
}

}  // namespace posmap::detail

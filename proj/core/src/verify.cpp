// SPDX-License-Identifier: Apache-2.0
#include "bures/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "bures/hyperbolic.hpp"
#include "bures/measures.hpp"

namespace bures {

namespace {

constexpr double kNearBoundary = 1e-3;

}  // namespace

std::string_view to_string(RegimeFlag f) {
  switch (f) {
    case RegimeFlag::pure_u: return "pure_u";
    case RegimeFlag::pure_v: return "pure_v";
    case RegimeFlag::near_pure: return "near_pure";
    case RegimeFlag::near_mixed: return "near_mixed";
  }
  return "unknown";
}

std::vector<RegimeFlag> RegimeFlags::list() const {
  std::vector<RegimeFlag> out;
  for (RegimeFlag f : {RegimeFlag::pure_u, RegimeFlag::pure_v, RegimeFlag::near_pure,
                       RegimeFlag::near_mixed}) {
    if (contains(f)) out.push_back(f);
  }
  return out;
}

FidelityReport compare(const BlochVector& u, const BlochVector& v) {
  FidelityReport r;
  r.u = u;
  r.v = v;
  const DensityMatrix rho1 = density_from_bloch(u);
  const DensityMatrix rho2 = density_from_bloch(v);

  r.f_matrix = bures_fidelity_matrix(rho1, rho2);
  r.f_closed = bures_fidelity_closed(u, v);
  r.d_trace = trace_distance_matrix(rho1, rho2);

  if (u.is_pure()) r.regime_flags.set(RegimeFlag::pure_u);
  if (v.is_pure()) r.regime_flags.set(RegimeFlag::pure_v);
  for (const BlochVector* n : {&u, &v}) {
    if (!n->is_pure() && 1.0 - n->norm() <= kNearBoundary) r.regime_flags.set(RegimeFlag::near_pure);
    if (n->norm() <= kNearBoundary) r.regime_flags.set(RegimeFlag::near_mixed);
  }

  r.max_pairwise_diff = std::abs(r.f_matrix - r.f_closed);
  if (u.norm() <= kFiniteRapidityNorm && v.norm() <= kFiniteRapidityNorm) {
    const double fh = fidelity_hyperbolic(u, v);
    r.f_hyperbolic = fh;
    r.max_pairwise_diff =
        std::max({r.max_pairwise_diff, std::abs(fh - r.f_matrix), std::abs(fh - r.f_closed)});
  }
  return r;
}

std::pair<BlochVector, BlochVector> trial_pair(std::uint64_t seed, std::uint64_t index,
                                               Regime regime_u, Regime regime_v) {
  return {random_bloch(derive_key(seed, 2 * index), regime_u),
          random_bloch(derive_key(seed, 2 * index + 1), regime_v)};
}

double compensated_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : values) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

SweepSummary sweep(std::uint64_t seed, std::uint64_t trials, Regime regime_u, Regime regime_v,
                   unsigned workers) {
  if (trials == 0) throw std::invalid_argument("sweep needs at least one trial");
  const auto start = std::chrono::steady_clock::now();

  std::vector<double> diffs(trials);
  auto run_block = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto [u, v] = trial_pair(seed, i, regime_u, regime_v);
      diffs[i] = compare(u, v).max_pairwise_diff;
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t n_workers = std::min<std::uint64_t>(workers, trials);
  if (n_workers <= 1) {
    run_block(0, trials);
  } else {
    std::vector<std::exception_ptr> failures(n_workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(n_workers);
      const std::uint64_t block = (trials + n_workers - 1) / n_workers;
      for (std::uint64_t w = 0; w < n_workers; ++w) {
        const std::uint64_t begin = std::min(trials, w * block);
        const std::uint64_t end = std::min(trials, begin + block);
        pool.emplace_back([&, w, begin, end] {
          try {
            run_block(begin, end);
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  SweepSummary s;
  s.trials = trials;
  s.seed = seed;
  s.regime_pair = {regime_u, regime_v};
  // Strict comparison keeps the lowest index on ties.
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (i == 0 || diffs[i] > s.max_diff) {
      s.max_diff = diffs[i];
      s.worst_index = i;
    }
  }
  s.worst_pair = trial_pair(seed, s.worst_index, regime_u, regime_v);
  s.mean_diff = compensated_sum(diffs) / static_cast<double>(trials);

  // Nearest-rank 99th percentile.
  const std::uint64_t rank = (99 * trials + 99) / 100;
  const auto nth = diffs.begin() + static_cast<std::ptrdiff_t>(rank - 1);
  std::nth_element(diffs.begin(), nth, diffs.end());
  s.p99_diff = *nth;

  s.elapsed = std::chrono::steady_clock::now() - start;
  return s;
}

}  // namespace bures

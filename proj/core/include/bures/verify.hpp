// SPDX-License-Identifier: Apache-2.0
//
// Cross-route comparison and deterministic Monte Carlo sweeps.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bures/qubit.hpp"
#include "bures/random.hpp"

namespace bures {

enum class RegimeFlag : unsigned {
  pure_u = 1u << 0,
  pure_v = 1u << 1,
  near_pure = 1u << 2,   // a mixed input with 1 - |n| <= 1e-3
  near_mixed = 1u << 3,  // an input with |n| <= 1e-3
};

std::string_view to_string(RegimeFlag f);

class RegimeFlags {
 public:
  void set(RegimeFlag f) { bits_ |= static_cast<unsigned>(f); }
  bool contains(RegimeFlag f) const { return (bits_ & static_cast<unsigned>(f)) != 0; }
  bool any_pure() const { return contains(RegimeFlag::pure_u) || contains(RegimeFlag::pure_v); }
  /// Set flags in declaration order.
  std::vector<RegimeFlag> list() const;

 private:
  unsigned bits_ = 0;
};

struct FidelityReport {
  BlochVector u;
  BlochVector v;
  double f_matrix = 0.0;
  double f_closed = 0.0;
  /// Absent when either input lies beyond 1 - 1e-9 (pure states included).
  std::optional<double> f_hyperbolic;
  double d_trace = 0.0;
  double max_pairwise_diff = 0.0;
  RegimeFlags regime_flags;
};

/// Runs every route valid for the pair. Never throws for valid inputs.
FidelityReport compare(const BlochVector& u, const BlochVector& v);

struct SweepSummary {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::pair<Regime, Regime> regime_pair{Regime::uniform_ball, Regime::uniform_ball};
  double max_diff = 0.0;
  double mean_diff = 0.0;
  double p99_diff = 0.0;
  std::uint64_t worst_index = 0;
  std::pair<BlochVector, BlochVector> worst_pair;
  std::chrono::duration<double> elapsed{0.0};
};

/// The pair used for trial `index`; a pure function of its arguments.
std::pair<BlochVector, BlochVector> trial_pair(std::uint64_t seed, std::uint64_t index,
                                               Regime regime_u, Regime regime_v);

/// Per-trial diff is FidelityReport::max_pairwise_diff. `workers` == 0 picks
/// the hardware concurrency; the result does not depend on it. Ties for the
/// worst pair go to the lowest trial index.
SweepSummary sweep(std::uint64_t seed, std::uint64_t trials, Regime regime_u, Regime regime_v,
                   unsigned workers = 0);

/// Neumaier-compensated sum, accumulated in index order.
double compensated_sum(const std::vector<double>& values);

}  // namespace bures

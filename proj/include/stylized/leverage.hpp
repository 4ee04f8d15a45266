// Copyright 2026 The stylized-facts Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stylized/dependence.hpp"
#include "stylized/errors.hpp"

namespace stylized {

/// Return-volatility cross-correlation L(tau) = corr(x(t), |x(t+tau)|^2).
/// Positive lags correlate a return with subsequent squared returns; a
/// markedly negative L there is the leverage effect. Negative lags correlate
/// with past squared returns.
struct LeverageCorrelation {
  std::vector<int> lags;  // tau_min..tau_max
  std::vector<double> L;
};

struct LeverageLagRange {
  int tau_min = 0;  // <= 0
  int tau_max = 50;
};

LeverageCorrelation leverage_corr(std::span<const double> x, LeverageLagRange lag_range);

/// Running prefix sum of L over tau = 0..tau_max.
std::vector<double> cumulative_leverage(std::span<const double> L_from_zero);

enum class Tau0Reason {
  detected,
  lead_not_negative,  // no early lag below the detection threshold
  min_at_origin,      // cumulative leverage never drops after lag 0
  min_at_boundary,    // still decreasing at tau_max: scan range too short
};

const char* to_string(Tau0Reason reason);

struct Tau0Result {
  int tau0 = 0;  // 0 encodes "no leverage effect"
  bool present = false;
  Tau0Reason reason = Tau0Reason::lead_not_negative;
};

struct DetectionConfig {
  int lead_window = 3;              // some lag in 1..lead_window must dip below...
  double negative_threshold = 0.0;  // ...this (negative) level
};

/// The effect is declared present when some leading positive lag of L is
/// below the negative threshold and the cumulative leverage has an interior
/// minimum; tau0 is then that argmin (smallest index on ties). A minimum
/// sitting at the scan boundary is reported as not detected rather than
/// extrapolated. Lag 0 takes no part in the dip test: its sampling noise is
/// far wider than that of positive lags and a permutation null carries no
/// information about it.
Tau0Result estimate_tau0(std::span<const double> L_from_zero, const DetectionConfig& detection);

struct LeverageProfile {
  std::vector<int> lags;
  std::vector<double> L;
  std::vector<double> L_cum;  // aligned to lags 0..tau_max
  int tau0 = 0;
  bool present = false;
};

struct LeverageConfig {
  int tau_min = 0;
  int tau_max = 50;
  int lead_window = 3;
  int n_shuffles = 200;
  double band_percentile = 1.0;  // lower percentile of the shuffle ensemble
  std::uint64_t seed = 1;
};

struct LeverageDetection {
  LeverageProfile profile;
  Tau0Result tau0;
  double threshold_used = 0.0;
  int lead_window = 3;
};

/// Full pipeline: computes L over the configured lag range, calibrates the
/// detection threshold as the mean over lags 1..lead_window of the
/// `band_percentile` percentile of L under random permutations of x (lag 0 is
/// permutation-invariant and carries no null information), and runs
/// estimate_tau0 on the non-negative side.
LeverageDetection detect_leverage(std::span<const double> x, const LeverageConfig& config);

}  // namespace stylized

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
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "stylized/errors.hpp"

namespace stylized {

/// Autocorrelation values for lags 1..max_lag, optionally with a null band
/// from shuffled data and per-lag p-values. Empty vectors mean "not
/// computed".
///
/// Each lag is the exact sample correlation of the two overlapping slices
/// x[0..n-tau) and x[tau..n), each slice with its own mean and variance (not
/// the single-global-mean ACF estimator).
struct CorrelogramBundle {
  std::vector<int> lags;
  std::vector<double> values;
  std::vector<double> band_low;
  std::vector<double> band_high;
  std::vector<double> p_values;
  /// Power of |x| the series was transformed by, NaN for untransformed input.
  double alpha = std::numeric_limits<double>::quiet_NaN();
};

/// Sample Pearson correlation of two equal-length slices.
double pearson_corr(std::span<const double> a, std::span<const double> b);

CorrelogramBundle pearson_autocorr(std::span<const double> x, int max_lag);

/// Pearson correlation of the per-slice midrank transforms, with two-sided
/// p-values from the large-sample t approximation.
CorrelogramBundle spearman_autocorr(std::span<const double> x, int max_lag);

/// Autocorrelation of |x|^alpha; alpha=1 tracks absolute returns, alpha=2
/// squared returns (volatility clustering).
CorrelogramBundle abs_power_autocorr(std::span<const double> x, double alpha, int max_lag);

struct PermutationBands {
  std::vector<double> low;
  std::vector<double> high;
};

/// Percentile envelope of the per-lag autocorrelation over n_shuffles
/// uniform random permutations of x. Each realization draws from its own
/// substream of `seed`, so the result does not depend on evaluation order.
/// Percentiles are in [0, 100] and interpolated linearly.
PermutationBands permutation_bands(std::span<const double> x, int max_lag, int n_shuffles,
                                   std::pair<double, double> percentiles, std::uint64_t seed);

struct LagRange {
  int lo = 1;
  int hi = 100;
};

struct DecayFit {
  double beta = 0.0;
  double beta_std_err = 0.0;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  int tau_lo = 0;  // effective fitted range
  int tau_hi = 0;
  std::vector<int> excluded_lags;  // lags in the requested range left out
};

/// Least-squares fit of ln A(tau) = c - beta ln(tau) over the lags of
/// `correlogram` inside `fit_range`. With `truncate_at_first_nonpositive`
/// the range is cut just before the first non-positive correlation;
/// otherwise non-positive lags are skipped individually. Either way the
/// dropped lags are reported in `excluded_lags`. Fewer than 3 usable lags is
/// an insufficient_data error.
DecayFit fit_decay(const CorrelogramBundle& correlogram, LagRange fit_range,
                   bool truncate_at_first_nonpositive = true);

}  // namespace stylized

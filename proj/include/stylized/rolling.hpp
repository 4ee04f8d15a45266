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
#include <optional>
#include <string>
#include <vector>

#include "stylized/dependence.hpp"
#include "stylized/leverage.hpp"
#include "stylized/series.hpp"

namespace stylized {

struct WindowSpec {
  std::size_t window_len = 1600;
  std::size_t step = 200;
};

enum class BetaStatus {
  ok,
  insufficient_positive_lags,  // decay fit had fewer than 3 usable lags
  degenerate,                  // a correlation slice was constant
};

const char* to_string(BetaStatus status);

/// Per-window indicators: distribution moments, the decay exponents of the
/// absolute and squared return autocorrelations, and the leverage critical
/// time. The window's start instant is its timestamp.
struct WindowReport {
  std::size_t window_index = 0;
  std::size_t start_index = 0;     // offset into the return series
  std::int64_t start_time = 0;
  MomentSummary moments;
  std::optional<DecayFit> beta_alpha1;
  std::optional<DecayFit> beta_alpha2;
  BetaStatus beta1_status = BetaStatus::ok;
  BetaStatus beta2_status = BetaStatus::ok;
  Tau0Result tau0;
};

/// Windows are short (default 1600 points), so the decay fit and leverage
/// scan ranges are tighter than the whole-series defaults.
struct RollingConfig {
  WindowSpec window;
  int beta_max_lag = 30;
  LagRange fit_range{1, 30};
  int leverage_tau_max = 30;
  int lead_window = 3;
  int n_shuffles = 200;
  double band_percentile = 1.0;
  std::uint64_t seed = 1;
  KurtosisConvention kurtosis = KurtosisConvention::excess;
};

/// Detection seed for a given window, derived from the master seed so window
/// results do not depend on how many windows precede them or on processing
/// order.
std::uint64_t window_seed(std::uint64_t base_seed, std::size_t window_index);

/// One report per window position 0, step, 2*step, ... while a full window
/// fits; the trailing partial window is discarded. Each report delegates to
/// the single-series estimators (moments, abs_power_autocorr + fit_decay,
/// detect_leverage) on the window's data only.
std::vector<WindowReport> run_windows(const ReturnSeries& returns, const RollingConfig& config);

struct EventMarker {
  std::int64_t timestamp = 0;
  std::string label;
};

/// JSON report with the per-window indicator table plus, for each marker, the
/// nearest windows before/after it and the indicator deltas across it.
/// Markers outside the span of window start times are reported out-of-range.
std::string regime_summary_json(const std::vector<WindowReport>& reports,
                                const std::vector<EventMarker>& markers);

}  // namespace stylized

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

#include "stylized/rolling.hpp"

#include <algorithm>
#include <cmath>

#include "stylized/json_writer.hpp"
#include "stylized/rng.hpp"

namespace stylized {
namespace {

/// Decay fit with the failure modes a short noisy window is expected to hit
/// mapped onto a status instead of an exception.
std::optional<DecayFit> window_decay(std::span<const double> slice, double alpha,
                                     const RollingConfig& config, BetaStatus& status) {
  try {
    const CorrelogramBundle bundle = abs_power_autocorr(slice, alpha, config.beta_max_lag);
    DecayFit fit = fit_decay(bundle, config.fit_range);
    status = BetaStatus::ok;
    return fit;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::insufficient_data) {
      status = BetaStatus::insufficient_positive_lags;
      return std::nullopt;
    }
    if (e.kind() == ErrorKind::degenerate_series) {
      status = BetaStatus::degenerate;
      return std::nullopt;
    }
    throw;
  }
}

void write_decay(JsonWriter& w, const std::optional<DecayFit>& fit) {
  if (!fit.has_value()) {
    w.null();
    return;
  }
  w.begin_object();
  w.kv("beta", fit->beta);
  w.kv("beta_std_err", fit->beta_std_err);
  w.kv("tau_lo", fit->tau_lo);
  w.kv("tau_hi", fit->tau_hi);
  w.key("excluded_lags");
  w.begin_array();
  for (int tau : fit->excluded_lags) w.value(tau);
  w.end_array();
  w.end_object();
}

void write_window(JsonWriter& w, const WindowReport& report) {
  w.begin_object();
  w.kv("window_index", report.window_index);
  w.kv("start_index", report.start_index);
  w.kv("start_time", report.start_time);
  w.key("moments");
  w.begin_object();
  w.kv("count", report.moments.count);
  w.kv("mean", report.moments.mean);
  w.kv("std_dev", report.moments.std_dev);
  w.kv("skewness", report.moments.skewness);
  w.kv("kurtosis", report.moments.kurtosis);
  w.kv("kurtosis_convention",
       report.moments.convention == KurtosisConvention::excess ? "excess" : "raw");
  w.end_object();
  w.key("beta_alpha1");
  write_decay(w, report.beta_alpha1);
  w.kv("beta1_status", to_string(report.beta1_status));
  w.key("beta_alpha2");
  write_decay(w, report.beta_alpha2);
  w.kv("beta2_status", to_string(report.beta2_status));
  w.key("tau0");
  w.begin_object();
  w.kv("tau0", report.tau0.tau0);
  w.kv("present", report.tau0.present);
  w.kv("reason", to_string(report.tau0.reason));
  w.end_object();
  w.end_object();
}

}  // namespace

const char* to_string(BetaStatus status) {
  switch (status) {
    case BetaStatus::ok: return "ok";
    case BetaStatus::insufficient_positive_lags: return "insufficient-positive-lags";
    case BetaStatus::degenerate: return "degenerate";
  }
  return "unknown";
}

std::uint64_t window_seed(std::uint64_t base_seed, std::size_t window_index) {
  return mix_seed(base_seed, static_cast<std::uint64_t>(window_index));
}

std::vector<WindowReport> run_windows(const ReturnSeries& returns, const RollingConfig& config) {
  if (config.window.window_len == 0 || config.window.step == 0) {
    throw Error(ErrorKind::invalid_spec, "window length and step must be positive");
  }
  const std::size_t need =
      std::max({static_cast<std::size_t>(config.beta_max_lag) + 2,
                static_cast<std::size_t>(config.leverage_tau_max) + 2, std::size_t{4}});
  if (config.window.window_len < need) {
    throw Error(ErrorKind::invalid_spec, "window too short for the configured lag ranges");
  }

  std::vector<WindowReport> reports;
  const std::size_t n = returns.values.size();
  if (n < config.window.window_len) {
    throw Error(ErrorKind::insufficient_data, "series shorter than one window");
  }
  for (std::size_t w = 0; w * config.window.step + config.window.window_len <= n; ++w) {
    const std::size_t start = w * config.window.step;
    const std::span<const double> slice(returns.values.data() + start, config.window.window_len);

    WindowReport report;
    report.window_index = w;
    report.start_index = start;
    report.start_time = returns.start_time + static_cast<std::int64_t>(start) * returns.delta_t;
    report.moments = moments(slice, config.kurtosis);
    report.beta_alpha1 = window_decay(slice, 1.0, config, report.beta1_status);
    report.beta_alpha2 = window_decay(slice, 2.0, config, report.beta2_status);

    LeverageConfig leverage;
    leverage.tau_min = 0;
    leverage.tau_max = config.leverage_tau_max;
    leverage.lead_window = config.lead_window;
    leverage.n_shuffles = config.n_shuffles;
    leverage.band_percentile = config.band_percentile;
    leverage.seed = window_seed(config.seed, w);
    report.tau0 = detect_leverage(slice, leverage).tau0;

    reports.push_back(std::move(report));
  }
  return reports;
}

std::string regime_summary_json(const std::vector<WindowReport>& reports,
                                const std::vector<EventMarker>& markers) {
  JsonWriter w;
  w.begin_object();
  w.kv("n_windows", reports.size());
  w.key("windows");
  w.begin_array();
  for (const WindowReport& report : reports) write_window(w, report);
  w.end_array();

  w.key("markers");
  w.begin_array();
  for (const EventMarker& marker : markers) {
    w.begin_object();
    w.kv("timestamp", marker.timestamp);
    w.kv("label", marker.label);

    // Nearest window starting at or before the marker, and the first one
    // starting strictly after it.
    const WindowReport* before = nullptr;
    const WindowReport* after = nullptr;
    for (const WindowReport& report : reports) {
      if (report.start_time <= marker.timestamp) {
        before = &report;
      } else {
        after = &report;
        break;
      }
    }
    if (before == nullptr || after == nullptr) {
      w.kv("status", "out-of-range");
      w.end_object();
      continue;
    }
    w.kv("status", "ok");
    w.kv("window_before", before->window_index);
    w.kv("window_after", after->window_index);
    w.key("delta");
    w.begin_object();
    w.kv("std_dev", after->moments.std_dev - before->moments.std_dev);
    w.kv("kurtosis", after->moments.kurtosis - before->moments.kurtosis);
    w.key("beta_alpha1");
    if (before->beta_alpha1 && after->beta_alpha1) {
      w.value(after->beta_alpha1->beta - before->beta_alpha1->beta);
    } else {
      w.null();
    }
    w.key("beta_alpha2");
    if (before->beta_alpha2 && after->beta_alpha2) {
      w.value(after->beta_alpha2->beta - before->beta_alpha2->beta);
    } else {
      w.null();
    }
    w.kv("tau0", static_cast<std::int64_t>(after->tau0.tau0 - before->tau0.tau0));
    w.end_object();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace stylized

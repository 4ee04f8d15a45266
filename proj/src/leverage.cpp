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

#include "stylized/leverage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stylized/detail/stats_util.hpp"

namespace stylized {
namespace {

void check_lag_range(std::size_t n, LeverageLagRange lag_range) {
  if (lag_range.tau_min > 0) throw Error(ErrorKind::invalid_spec, "tau_min must be <= 0");
  if (lag_range.tau_max < 0) throw Error(ErrorKind::invalid_spec, "tau_max must be >= 0");
  const std::size_t reach =
      static_cast<std::size_t>(std::max(-lag_range.tau_min, lag_range.tau_max));
  if (n < reach + 2) {
    throw Error(ErrorKind::insufficient_data,
                "need at least max|tau| + 2 observations, got " + std::to_string(n));
  }
}

/// L(tau) = corr(x(t), x(t+tau)^2) for one lag; y is the squared series.
double lag_corr(std::span<const double> x, std::span<const double> y, int tau) {
  const std::size_t n = x.size();
  const std::size_t m = n - static_cast<std::size_t>(std::abs(tau));
  if (tau >= 0) return detail::slice_corr(x.data(), y.data() + tau, m);
  return detail::slice_corr(x.data() - tau, y.data(), m);
}

std::vector<double> squares(std::span<const double> x) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * x[i];
  return y;
}

}  // namespace

LeverageCorrelation leverage_corr(std::span<const double> x, LeverageLagRange lag_range) {
  check_lag_range(x.size(), lag_range);
  const std::vector<double> y = squares(x);
  LeverageCorrelation out;
  out.lags.reserve(static_cast<std::size_t>(lag_range.tau_max - lag_range.tau_min + 1));
  out.L.reserve(out.lags.capacity());
  for (int tau = lag_range.tau_min; tau <= lag_range.tau_max; ++tau) {
    out.lags.push_back(tau);
    out.L.push_back(lag_corr(x, y, tau));
  }
  return out;
}

std::vector<double> cumulative_leverage(std::span<const double> L_from_zero) {
  if (L_from_zero.empty()) throw Error(ErrorKind::empty_input, "cumulative leverage of no lags");
  std::vector<double> cum(L_from_zero.size());
  double running = 0.0;
  for (std::size_t i = 0; i < L_from_zero.size(); ++i) {
    running += L_from_zero[i];
    cum[i] = running;
  }
  return cum;
}

const char* to_string(Tau0Reason reason) {
  switch (reason) {
    case Tau0Reason::detected: return "detected";
    case Tau0Reason::lead_not_negative: return "lead-not-negative";
    case Tau0Reason::min_at_origin: return "min-at-origin";
    case Tau0Reason::min_at_boundary: return "min-at-boundary";
  }
  return "unknown";
}

Tau0Result estimate_tau0(std::span<const double> L_from_zero, const DetectionConfig& detection) {
  if (L_from_zero.empty()) throw Error(ErrorKind::empty_input, "tau0 scan of no lags");
  if (detection.lead_window < 1) {
    throw Error(ErrorKind::invalid_spec, "lead_window must be at least 1");
  }

  Tau0Result out;
  const std::size_t last = L_from_zero.size() - 1;
  const std::size_t lead_end = std::min(static_cast<std::size_t>(detection.lead_window), last);
  // The dip test runs over the leading positive lags only. L(0) has a much
  // wider sampling distribution than any positive lag (its noise scales with
  // the sixth moment rather than the second times the fourth), and a
  // permutation null cannot calibrate it at all: corr(x, x^2) at lag 0 is
  // invariant under permutations of x.
  bool dips = false;
  for (std::size_t tau = 1; tau <= lead_end; ++tau) {
    if (L_from_zero[tau] < detection.negative_threshold) {
      dips = true;
      break;
    }
  }
  if (!dips) {
    out.reason = Tau0Reason::lead_not_negative;
    return out;
  }

  const std::vector<double> cum = cumulative_leverage(L_from_zero);
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < cum.size(); ++i) {
    if (cum[i] < cum[argmin]) argmin = i;
  }
  if (argmin == 0) {
    out.reason = Tau0Reason::min_at_origin;
    return out;
  }
  if (argmin == last) {
    out.reason = Tau0Reason::min_at_boundary;
    return out;
  }
  out.tau0 = static_cast<int>(argmin);
  out.present = true;
  out.reason = Tau0Reason::detected;
  return out;
}

LeverageDetection detect_leverage(std::span<const double> x, const LeverageConfig& config) {
  if (config.tau_min > 0) throw Error(ErrorKind::invalid_spec, "tau_min must be <= 0");
  if (config.tau_max < 2) throw Error(ErrorKind::invalid_spec, "tau_max must be at least 2");
  if (config.lead_window < 1 || config.lead_window > config.tau_max) {
    throw Error(ErrorKind::invalid_spec, "lead_window must lie in [1, tau_max]");
  }
  if (config.n_shuffles < 1) throw Error(ErrorKind::invalid_spec, "n_shuffles must be at least 1");
  if (!(config.band_percentile >= 0.0) || !(config.band_percentile <= 100.0)) {
    throw Error(ErrorKind::invalid_spec, "band_percentile must lie in [0, 100]");
  }

  const LeverageCorrelation corr =
      leverage_corr(x, LeverageLagRange{config.tau_min, config.tau_max});

  // Null scale for "markedly negative": per-lag low percentile of L over
  // lags 1..lead_window under random permutations, averaged. Permutations
  // keep the marginal distribution but break the return/volatility
  // alignment. Lag 0 pairs each value with itself, which no permutation can
  // break, so it carries no null information and is excluded.
  const std::size_t n_lead = static_cast<std::size_t>(config.lead_window);
  std::vector<double> band_low;
  std::vector<double> band_high;
  detail::shuffle_ensemble_bands(
      x, n_lead, config.n_shuffles, config.band_percentile, config.band_percentile, config.seed,
      [&](std::span<const double> shuffled, std::span<double> row) {
        const std::vector<double> y = squares(shuffled);
        for (std::size_t i = 0; i < row.size(); ++i) {
          row[i] = lag_corr(shuffled, y, static_cast<int>(i) + 1);
        }
      },
      band_low, band_high);
  double threshold = 0.0;
  for (double b : band_low) threshold += b;
  threshold /= static_cast<double>(n_lead);

  LeverageDetection out;
  out.lead_window = config.lead_window;
  out.threshold_used = threshold;

  const std::size_t zero_offset = static_cast<std::size_t>(-config.tau_min);
  const std::span<const double> from_zero =
      std::span<const double>(corr.L).subspan(zero_offset);
  out.tau0 = estimate_tau0(from_zero, DetectionConfig{config.lead_window, threshold});

  out.profile.lags = corr.lags;
  out.profile.L = corr.L;
  out.profile.L_cum = cumulative_leverage(from_zero);
  out.profile.tau0 = out.tau0.tau0;
  out.profile.present = out.tau0.present;
  return out;
}

}  // namespace stylized

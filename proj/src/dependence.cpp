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

#include "stylized/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/distributions/students_t.hpp>

#include "stylized/detail/stats_util.hpp"

namespace stylized {
namespace {

void check_lag_setup(std::size_t n, int max_lag) {
  if (max_lag < 1) throw Error(ErrorKind::invalid_spec, "max_lag must be at least 1");
  if (n < static_cast<std::size_t>(max_lag) + 2) {
    throw Error(ErrorKind::insufficient_data,
                "need at least max_lag + 2 observations, got " + std::to_string(n));
  }
}

std::vector<double> abs_power_transform(std::span<const double> x, double alpha) {
  std::vector<double> y(x.size());
  if (alpha == 1.0) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::abs(x[i]);
  } else if (alpha == 2.0) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * x[i];
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::pow(std::abs(x[i]), alpha);
  }
  return y;
}

void fill_autocorr(std::span<const double> y, std::span<double> out) {
  const std::size_t n = y.size();
  for (std::size_t tau = 1; tau <= out.size(); ++tau) {
    out[tau - 1] = detail::slice_corr(y.data(), y.data() + tau, n - tau);
  }
}

/// Two-sided p-value of the t statistic r * sqrt((m-2) / (1-r^2)) on m-2
/// degrees of freedom.
double rank_corr_p_value(double r, std::size_t m) {
  if (m < 4) return std::numeric_limits<double>::quiet_NaN();
  const double one_minus_r2 = (1.0 - r) * (1.0 + r);
  if (!(one_minus_r2 > 0.0)) return 0.0;
  const double df = static_cast<double>(m - 2);
  const double t = r * std::sqrt(df / one_minus_r2);
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

}  // namespace

double pearson_corr(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::invalid_spec, "correlation inputs must have equal length");
  }
  return detail::slice_corr(a.data(), b.data(), a.size());
}

CorrelogramBundle pearson_autocorr(std::span<const double> x, int max_lag) {
  check_lag_setup(x.size(), max_lag);
  CorrelogramBundle out;
  out.lags.resize(static_cast<std::size_t>(max_lag));
  out.values.resize(static_cast<std::size_t>(max_lag));
  for (int tau = 1; tau <= max_lag; ++tau) out.lags[static_cast<std::size_t>(tau - 1)] = tau;
  fill_autocorr(x, out.values);
  return out;
}

CorrelogramBundle spearman_autocorr(std::span<const double> x, int max_lag) {
  check_lag_setup(x.size(), max_lag);
  const std::size_t n = x.size();
  CorrelogramBundle out;
  out.lags.resize(static_cast<std::size_t>(max_lag));
  out.values.resize(static_cast<std::size_t>(max_lag));
  out.p_values.resize(static_cast<std::size_t>(max_lag));
  for (int tau = 1; tau <= max_lag; ++tau) {
    const std::size_t m = n - static_cast<std::size_t>(tau);
    const std::vector<double> ranks_a = detail::midranks(x.subspan(0, m));
    const std::vector<double> ranks_b = detail::midranks(x.subspan(static_cast<std::size_t>(tau), m));
    const double r = detail::slice_corr(ranks_a.data(), ranks_b.data(), m);
    out.lags[static_cast<std::size_t>(tau - 1)] = tau;
    out.values[static_cast<std::size_t>(tau - 1)] = r;
    out.p_values[static_cast<std::size_t>(tau - 1)] = rank_corr_p_value(r, m);
  }
  return out;
}

CorrelogramBundle abs_power_autocorr(std::span<const double> x, double alpha, int max_lag) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::invalid_spec, "alpha must be strictly positive");
  check_lag_setup(x.size(), max_lag);
  const std::vector<double> y = abs_power_transform(x, alpha);
  CorrelogramBundle out;
  out.alpha = alpha;
  out.lags.resize(static_cast<std::size_t>(max_lag));
  out.values.resize(static_cast<std::size_t>(max_lag));
  for (int tau = 1; tau <= max_lag; ++tau) out.lags[static_cast<std::size_t>(tau - 1)] = tau;
  fill_autocorr(y, out.values);
  return out;
}

PermutationBands permutation_bands(std::span<const double> x, int max_lag, int n_shuffles,
                                   std::pair<double, double> percentiles, std::uint64_t seed) {
  check_lag_setup(x.size(), max_lag);
  if (n_shuffles < 1) throw Error(ErrorKind::invalid_spec, "n_shuffles must be at least 1");
  if (!(percentiles.first >= 0.0) || !(percentiles.second <= 100.0) ||
      !(percentiles.first <= percentiles.second)) {
    throw Error(ErrorKind::invalid_spec, "percentiles must satisfy 0 <= low <= high <= 100");
  }
  PermutationBands out;
  detail::shuffle_ensemble_bands(
      x, static_cast<std::size_t>(max_lag), n_shuffles, percentiles.first, percentiles.second,
      seed, [](std::span<const double> shuffled, std::span<double> row) { fill_autocorr(shuffled, row); },
      out.low, out.high);
  return out;
}

DecayFit fit_decay(const CorrelogramBundle& correlogram, LagRange fit_range,
                   bool truncate_at_first_nonpositive) {
  if (fit_range.lo < 1 || fit_range.hi < fit_range.lo) {
    throw Error(ErrorKind::invalid_spec, "decay fit range must satisfy 1 <= lo <= hi");
  }
  std::vector<double> log_tau;
  std::vector<double> log_a;
  DecayFit fit;
  fit.alpha = correlogram.alpha;
  bool truncated = false;
  for (std::size_t i = 0; i < correlogram.lags.size(); ++i) {
    const int tau = correlogram.lags[i];
    if (tau < fit_range.lo || tau > fit_range.hi) continue;
    const double a = correlogram.values[i];
    if (truncated || !(a > 0.0)) {
      fit.excluded_lags.push_back(tau);
      if (truncate_at_first_nonpositive) truncated = true;
      continue;
    }
    if (log_tau.empty()) fit.tau_lo = tau;
    fit.tau_hi = tau;
    log_tau.push_back(std::log(static_cast<double>(tau)));
    log_a.push_back(std::log(a));
  }
  const std::size_t n = log_tau.size();
  if (n < 3) {
    throw Error(ErrorKind::insufficient_data,
                "decay fit needs at least 3 positive correlations, got " + std::to_string(n));
  }

  double mean_t = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_t += log_tau[i];
    mean_y += log_a[i];
  }
  mean_t /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double s_tt = 0.0, s_ty = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dt = log_tau[i] - mean_t;
    s_tt += dt * dt;
    s_ty += dt * (log_a[i] - mean_y);
  }
  if (!(s_tt > 0.0)) throw Error(ErrorKind::degenerate_series, "decay fit lags are all equal");
  const double slope = s_ty / s_tt;
  const double intercept = mean_y - slope * mean_t;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double resid = log_a[i] - (intercept + slope * log_tau[i]);
    rss += resid * resid;
  }
  fit.beta = -slope;
  fit.beta_std_err = std::sqrt(rss / static_cast<double>(n - 2) / s_tt);
  return fit;
}

}  // namespace stylized

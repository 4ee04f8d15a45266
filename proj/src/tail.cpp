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

#include "stylized/tail.hpp"

#include <algorithm>
#include <cmath>

namespace stylized {

EmpiricalCcdf ccdf(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::empty_input, "ccdf of an empty sample");
  EmpiricalCcdf out;
  out.sorted_values.assign(values.begin(), values.end());
  std::sort(out.sorted_values.begin(), out.sorted_values.end());
  const std::size_t n = out.sorted_values.size();
  out.ccdf.resize(n);
  std::size_t above = 0;  // count strictly greater than sorted_values[i]
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n && out.sorted_values[i + 1] > out.sorted_values[i]) above = n - 1 - i;
    out.ccdf[i] = static_cast<double>(above) / static_cast<double>(n);
  }
  return out;
}

TailIndexEstimate mle_tail_index(std::span<const double> values, double x_min) {
  if (values.empty()) throw Error(ErrorKind::empty_input, "tail fit of an empty sample");
  if (!(x_min > 0.0)) throw Error(ErrorKind::invalid_spec, "x_min must be strictly positive");
  std::vector<double> tail;
  for (double v : values) {
    if (v >= x_min) tail.push_back(v);
  }
  if (tail.size() < 2) {
    throw Error(ErrorKind::insufficient_tail,
                "only " + std::to_string(tail.size()) + " observations at or above x_min");
  }
  std::sort(tail.begin(), tail.end());
  const double log_x_min = std::log(x_min);
  double log_sum = 0.0;
  for (double v : tail) log_sum += std::log(v) - log_x_min;
  if (!(log_sum > 0.0)) {
    throw Error(ErrorKind::degenerate_series, "tail has no spread above x_min");
  }
  TailIndexEstimate out;
  out.n_tail = tail.size();
  out.k = static_cast<double>(out.n_tail) / log_sum;
  out.k_std_err = out.k / std::sqrt(static_cast<double>(out.n_tail));
  return out;
}

double power_law_ks(std::span<const double> values, double x_min, double k) {
  if (values.empty()) throw Error(ErrorKind::empty_input, "KS distance of an empty sample");
  if (!(x_min > 0.0)) throw Error(ErrorKind::invalid_spec, "x_min must be strictly positive");
  if (!(k > 0.0)) throw Error(ErrorKind::invalid_spec, "k must be strictly positive");
  std::vector<double> tail;
  for (double v : values) {
    if (v >= x_min) tail.push_back(v);
  }
  if (tail.empty()) {
    throw Error(ErrorKind::insufficient_tail, "no observations at or above x_min");
  }
  std::sort(tail.begin(), tail.end());
  const std::size_t m = tail.size();
  const double log_x_min = std::log(x_min);
  double d = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    // Fitted CDF of the tail law, 1 - (x_min / x)^k, compared against both
    // sides of the empirical step at tail[i].
    const double fitted = -std::expm1(k * (log_x_min - std::log(tail[i])));
    const double emp_lo = static_cast<double>(i) / static_cast<double>(m);
    const double emp_hi = static_cast<double>(i + 1) / static_cast<double>(m);
    d = std::max(d, std::max(std::abs(fitted - emp_lo), std::abs(fitted - emp_hi)));
  }
  return d;
}

TailFit select_xmin(std::span<const double> values, const XminSearchConfig& config) {
  if (values.empty()) throw Error(ErrorKind::empty_input, "tail scan of an empty sample");
  if (values.size() < config.min_values) {
    throw Error(ErrorKind::insufficient_data,
                "tail scan needs at least " + std::to_string(config.min_values) +
                    " observations, got " + std::to_string(values.size()));
  }
  if (config.n_tail_min < 2) {
    throw Error(ErrorKind::invalid_spec, "n_tail_min must be at least 2");
  }

  std::vector<double> xs;
  xs.reserve(values.size());
  for (double v : values) {
    if (v > 0.0) xs.push_back(v);
  }
  if (xs.size() < config.n_tail_min) {
    throw Error(ErrorKind::insufficient_tail, "too few positive observations for a tail scan");
  }
  std::sort(xs.begin(), xs.end());

  const std::size_t m = xs.size();
  std::vector<double> log_xs(m);
  for (std::size_t i = 0; i < m; ++i) log_xs[i] = std::log(xs[i]);
  std::vector<double> log_suffix(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) log_suffix[i] = log_suffix[i + 1] + log_xs[i];

  bool found = false;
  TailFit best;
  for (std::size_t i = 0; i + config.n_tail_min <= m; ++i) {
    if (i > 0 && xs[i] == xs[i - 1]) continue;  // one candidate per unique value
    const std::size_t n_tail = m - i;
    const double log_sum = log_suffix[i] - static_cast<double>(n_tail) * log_xs[i];
    if (!(log_sum > 0.0)) continue;
    const double k = static_cast<double>(n_tail) / log_sum;

    double d = 0.0;
    for (std::size_t j = i; j < m; ++j) {
      const double fitted = -std::expm1(k * (log_xs[i] - log_xs[j]));
      const double emp_lo = static_cast<double>(j - i) / static_cast<double>(n_tail);
      const double emp_hi = static_cast<double>(j - i + 1) / static_cast<double>(n_tail);
      d = std::max(d, std::max(std::abs(fitted - emp_lo), std::abs(fitted - emp_hi)));
    }

    if (!found || d < best.ks_distance) {
      found = true;
      best.k = k;
      best.x_min = xs[i];
      best.n_tail = n_tail;
      best.k_std_err = k / std::sqrt(static_cast<double>(n_tail));
      best.ks_distance = d;
    }
  }
  if (!found) {
    throw Error(ErrorKind::insufficient_tail, "no usable lower-bound candidate in the scan");
  }
  return best;
}

}  // namespace stylized

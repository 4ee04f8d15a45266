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

#include "stylized/series.hpp"

#include <cmath>
#include <utility>

namespace stylized {

TickSeries make_tick_series(std::vector<Tick> rows, std::string source_label) {
  if (rows.empty()) throw Error(ErrorKind::empty_input, "tick series is empty");
  std::vector<Tick> collapsed;
  collapsed.reserve(rows.size());
  for (const Tick& tick : rows) {
    if (!(tick.price > 0.0)) {
      throw Error(ErrorKind::invalid_price,
                  "price must be strictly positive, got " + std::to_string(tick.price));
    }
    if (!collapsed.empty()) {
      if (tick.timestamp < collapsed.back().timestamp) {
        throw Error(ErrorKind::input_error, "tick timestamps must be non-decreasing");
      }
      if (tick.timestamp == collapsed.back().timestamp) {
        collapsed.back() = tick;  // keep the last trade at a duplicated instant
        continue;
      }
    }
    collapsed.push_back(tick);
  }
  return TickSeries{std::move(collapsed), std::move(source_label)};
}

ResampledPrices resample_locf(const TickSeries& ticks, std::int64_t delta_t,
                              std::optional<std::int64_t> origin,
                              std::optional<std::size_t> grid_points) {
  const auto& obs = ticks.observations;
  if (obs.empty()) throw Error(ErrorKind::empty_input, "cannot resample an empty tick series");
  if (delta_t <= 0) throw Error(ErrorKind::invalid_spec, "delta_t must be positive");

  const std::int64_t first = obs.front().timestamp;
  const std::int64_t last = obs.back().timestamp;

  std::int64_t start = 0;
  if (origin.has_value()) {
    if (*origin > first + delta_t) {
      throw Error(ErrorKind::invalid_spec, "origin must not exceed first tick time + delta_t");
    }
    start = *origin;
  } else {
    // First tick time rounded up to a whole delta_t.
    const std::int64_t q = first / delta_t;
    start = q * delta_t;
    if (start < first) start += delta_t;
  }
  // Grid instants before the first tick have no price and are omitted.
  while (start < first) start += delta_t;

  ResampledPrices result;
  result.delta_t = delta_t;

  std::size_t tick_index = 0;
  std::int64_t t = start;
  std::size_t produced = 0;
  for (;;) {
    if (grid_points.has_value()) {
      if (produced >= *grid_points) break;
    } else if (t >= last + delta_t) {
      // Default end rule: stop once the grid has passed the last tick, so
      // the final observed price lands on exactly one grid instant.
      break;
    }
    while (tick_index + 1 < obs.size() && obs[tick_index + 1].timestamp <= t) ++tick_index;
    result.points.push_back(PricePoint{t, obs[tick_index].price});
    ++produced;
    t += delta_t;
  }

  for (std::size_t i = 1; i < obs.size(); ++i) {
    if (obs[i].timestamp - obs[i - 1].timestamp > delta_t) ++result.gap_count;
  }
  return result;
}

ReturnSeries log_returns(std::span<const PricePoint> prices) {
  if (prices.size() < 2) {
    throw Error(ErrorKind::empty_input, "log returns need at least 2 prices");
  }
  const std::int64_t delta_t = prices[1].timestamp - prices[0].timestamp;
  if (delta_t <= 0) throw Error(ErrorKind::invalid_spec, "price timestamps must increase");
  for (std::size_t i = 1; i < prices.size(); ++i) {
    if (prices[i].timestamp - prices[i - 1].timestamp != delta_t) {
      throw Error(ErrorKind::invalid_spec, "prices are not on a regular grid");
    }
  }
  ReturnSeries out;
  out.delta_t = delta_t;
  out.start_time = prices[1].timestamp;
  out.values.reserve(prices.size() - 1);
  for (std::size_t i = 0; i < prices.size(); ++i) {
    const double p = prices[i].price;
    if (!(p > 0.0)) {
      throw Error(ErrorKind::invalid_price,
                  "price must be strictly positive, got " + std::to_string(p));
    }
    // ln of the ratio, not a difference of logs: any common scale factor
    // cancels inside the division, keeping returns scale-free to the last bit.
    if (i > 0) out.values.push_back(std::log(p / prices[i - 1].price));
  }
  return out;
}

ReturnSeries log_returns(std::span<const double> prices, std::int64_t delta_t,
                         std::int64_t first_price_time) {
  if (delta_t <= 0) throw Error(ErrorKind::invalid_spec, "delta_t must be positive");
  std::vector<PricePoint> points;
  points.reserve(prices.size());
  std::int64_t t = first_price_time;
  for (double p : prices) {
    points.push_back(PricePoint{t, p});
    t += delta_t;
  }
  return log_returns(std::span<const PricePoint>(points));
}

NormalizedReturnSeries normalize(std::span<const double> returns) {
  if (returns.size() < 2) {
    throw Error(ErrorKind::empty_input, "normalization needs at least 2 returns");
  }
  double sum = 0.0;
  for (double r : returns) sum += r;
  const double mean = sum / static_cast<double>(returns.size());
  double ss = 0.0;
  for (double r : returns) {
    const double d = r - mean;
    ss += d * d;
  }
  const double sigma = std::sqrt(ss / static_cast<double>(returns.size()));
  if (!(sigma > 0.0)) {
    throw Error(ErrorKind::degenerate_series, "cannot normalize a zero-variance series");
  }
  NormalizedReturnSeries out;
  out.mean_used = mean;
  out.sigma_used = sigma;
  out.values.reserve(returns.size());
  for (double r : returns) out.values.push_back((r - mean) / sigma);
  return out;
}

MomentSummary moments(std::span<const double> values, KurtosisConvention convention) {
  if (values.size() < 4) {
    throw Error(ErrorKind::empty_input, "moments need at least 4 observations");
  }
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (!(m2 > 0.0)) {
    throw Error(ErrorKind::degenerate_series, "moments of a constant series");
  }
  MomentSummary out;
  out.count = values.size();
  out.mean = mean;
  out.std_dev = std::sqrt(m2);
  out.skewness = m3 / (m2 * out.std_dev);
  const double raw_kurtosis = m4 / (m2 * m2);
  out.kurtosis = convention == KurtosisConvention::raw ? raw_kurtosis : raw_kurtosis - 3.0;
  out.convention = convention;
  return out;
}

}  // namespace stylized

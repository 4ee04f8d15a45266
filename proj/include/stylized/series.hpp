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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stylized/errors.hpp"

namespace stylized {

/// One trade observation. `volume` is NaN when the source had no volume
/// column.
struct Tick {
  std::int64_t timestamp = 0;  // seconds since epoch
  double price = 0.0;
  double volume = std::numeric_limits<double>::quiet_NaN();
};

/// Irregularly spaced trades as ingested from an exchange dump. Timestamps
/// are strictly increasing and prices strictly positive once constructed.
struct TickSeries {
  std::vector<Tick> observations;
  std::string source_label;
};

/// Validates and normalizes raw tick rows: rows at a duplicated timestamp are
/// collapsed to the last one (dumps list trades in execution order), prices
/// must be strictly positive, timestamps must be non-decreasing.
TickSeries make_tick_series(std::vector<Tick> rows, std::string source_label);

struct PricePoint {
  std::int64_t timestamp = 0;
  double price = 0.0;
};

struct ResampledPrices {
  std::vector<PricePoint> points;  // arithmetic time grid
  std::int64_t delta_t = 0;
  /// Number of adjacent tick pairs further than delta_t apart; those grid
  /// stretches are filled by carrying the last price forward.
  long gap_count = 0;
};

/// Resamples irregular ticks onto the grid origin, origin+delta_t, ... using
/// last-observation-carried-forward. Grid instants before the first tick are
/// omitted. When `origin` is absent it defaults to the first tick's timestamp
/// rounded up to a whole multiple of delta_t. When `grid_points` is absent
/// the grid ends at the first instant at or after the last tick, so the final
/// price movement is always captured; with `grid_points` set, exactly that
/// many instants are produced, carrying the last price forward as needed.
ResampledPrices resample_locf(const TickSeries& ticks, std::int64_t delta_t,
                              std::optional<std::int64_t> origin = std::nullopt,
                              std::optional<std::size_t> grid_points = std::nullopt);

/// Log returns on a regular grid. `start_time` is the timestamp of
/// `values[0]`, i.e. the instant the first return is realized.
struct ReturnSeries {
  std::vector<double> values;
  std::int64_t delta_t = 0;
  std::int64_t start_time = 0;
};

/// values[i] = ln(p[i+1]) - ln(p[i]). Prices must be strictly positive and
/// regularly spaced.
ReturnSeries log_returns(std::span<const PricePoint> prices);
ReturnSeries log_returns(std::span<const double> prices, std::int64_t delta_t,
                         std::int64_t first_price_time = 0);

struct NormalizedReturnSeries {
  std::vector<double> values;  // mean 0, standard deviation 1
  double mean_used = 0.0;
  double sigma_used = 0.0;
};

/// Centers and scales by the population mean / standard deviation of the
/// whole input. Throws degenerate_series when the variance is zero.
NormalizedReturnSeries normalize(std::span<const double> returns);
inline NormalizedReturnSeries normalize(const ReturnSeries& returns) {
  return normalize(std::span<const double>(returns.values));
}

enum class KurtosisConvention { excess, raw };

/// Population (1/n) moments. `kurtosis` follows `convention`: excess
/// subtracts 3 so a normal sample reads near zero.
struct MomentSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
  KurtosisConvention convention = KurtosisConvention::excess;
};

MomentSummary moments(std::span<const double> values,
                      KurtosisConvention convention = KurtosisConvention::excess);
inline MomentSummary moments(const ReturnSeries& returns,
                             KurtosisConvention convention = KurtosisConvention::excess) {
  return moments(std::span<const double>(returns.values), convention);
}

}  // namespace stylized

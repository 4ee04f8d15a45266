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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "stylized/errors.hpp"
#include "stylized/rng.hpp"

namespace stylized::detail {

/// Exact two-pass sample Pearson correlation of equal-length slices.
/// Returns the correlation clamped to [-1, 1]; throws degenerate_series when
/// either slice is constant.
inline double slice_corr(const double* a, const double* b, std::size_t m) {
  if (m < 2) throw Error(ErrorKind::insufficient_data, "correlation needs at least 2 pairs");
  double sum_a = 0.0, sum_b = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sum_a += a[i];
    sum_b += b[i];
  }
  const double mean_a = sum_a / static_cast<double>(m);
  const double mean_b = sum_b / static_cast<double>(m);
  double caa = 0.0, cbb = 0.0, cab = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    caa += da * da;
    cbb += db * db;
    cab += da * db;
  }
  if (!(caa > 0.0) || !(cbb > 0.0)) {
    throw Error(ErrorKind::degenerate_series, "correlation of a constant slice");
  }
  return std::clamp(cab / std::sqrt(caa * cbb), -1.0, 1.0);
}

/// Linearly interpolated percentile (pct in [0, 100]) of ascending data.
inline double percentile_sorted(std::span<const double> sorted, double pct) {
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double pos = pct / 100.0 * static_cast<double>(n - 1);
  const double lo = std::floor(pos);
  const std::size_t i = static_cast<std::size_t>(lo);
  if (i + 1 >= n) return sorted[n - 1];
  const double frac = pos - lo;
  return sorted[i] * (1.0 - frac) + sorted[i + 1] * frac;
}

/// Percentile of unsorted data; sorts the scratch buffer in place.
inline double percentile(std::vector<double>& scratch, double pct) {
  std::sort(scratch.begin(), scratch.end());
  return percentile_sorted(scratch, pct);
}

/// Midranks (average ranks over ties), 1-based.
inline std::vector<double> midranks(std::span<const double> values) {
  const std::size_t m = values.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t lhs, std::size_t rhs) { return values[lhs] < values[rhs]; });
  std::vector<double> ranks(m);
  std::size_t i = 0;
  while (i < m) {
    std::size_t j = i;
    while (j + 1 < m && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;  // average of i+1..j+1
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

/// Evaluates `stat` on n_shuffles random permutations of x and returns the
/// per-column percentile envelope. Row s uses substream s of `seed`, so the
/// ensemble is independent of evaluation order. `stat(shuffled, row)` must
/// fill all n_cols entries of `row`.
template <typename StatFn>
void shuffle_ensemble_bands(std::span<const double> x, std::size_t n_cols, int n_shuffles,
                            double pct_low, double pct_high, std::uint64_t seed, StatFn stat,
                            std::vector<double>& out_low, std::vector<double>& out_high) {
  std::vector<double> matrix(static_cast<std::size_t>(n_shuffles) * n_cols);
  std::vector<double> shuffled(x.begin(), x.end());
  for (int s = 0; s < n_shuffles; ++s) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(s));
    std::copy(x.begin(), x.end(), shuffled.begin());
    rng.shuffle(shuffled);
    stat(shuffled, std::span<double>(matrix.data() + static_cast<std::size_t>(s) * n_cols, n_cols));
  }
  out_low.resize(n_cols);
  out_high.resize(n_cols);
  std::vector<double> column(static_cast<std::size_t>(n_shuffles));
  for (std::size_t c = 0; c < n_cols; ++c) {
    for (int s = 0; s < n_shuffles; ++s) {
      column[static_cast<std::size_t>(s)] = matrix[static_cast<std::size_t>(s) * n_cols + c];
    }
    std::sort(column.begin(), column.end());
    out_low[c] = percentile_sorted(column, pct_low);
    out_high[c] = percentile_sorted(column, pct_high);
  }
}

}  // namespace stylized::detail

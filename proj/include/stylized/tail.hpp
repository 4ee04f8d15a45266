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

#include <cstddef>
#include <span>
#include <vector>

#include "stylized/errors.hpp"

namespace stylized {

/// Empirical complementary CDF: ccdf[i] is the fraction of observations
/// strictly above sorted_values[i].
struct EmpiricalCcdf {
  std::vector<double> sorted_values;  // ascending
  std::vector<double> ccdf;           // non-increasing
};

EmpiricalCcdf ccdf(std::span<const double> values);

/// Power-law fit of the upper tail. `k` is the exponent of the complementary
/// cumulative distribution, so the density decays like x^-(k+1).
struct TailFit {
  double k = 0.0;
  double x_min = 0.0;
  std::size_t n_tail = 0;
  double k_std_err = 0.0;
  double ks_distance = 0.0;
};

struct TailIndexEstimate {
  double k = 0.0;
  double k_std_err = 0.0;
  std::size_t n_tail = 0;
};

/// Continuous maximum-likelihood (Hill) estimate of the CCDF exponent over
/// the observations >= x_min:
///
///   k = n_tail / sum(ln(x_i / x_min)),   std err = k / sqrt(n_tail)
///
/// Tail values are summed in sorted order, so the result is exactly invariant
/// under permutation of the input.
TailIndexEstimate mle_tail_index(std::span<const double> values, double x_min);

/// Kolmogorov-Smirnov distance between the empirical distribution of the
/// values >= x_min and the fitted power law with CCDF exponent k.
double power_law_ks(std::span<const double> values, double x_min, double k);

struct XminSearchConfig {
  std::size_t n_tail_min = 10;  // candidates leaving fewer points are skipped
  std::size_t min_values = 50;  // floor on the total sample size
};

/// Scans every unique data value as a lower-bound candidate, fits k by
/// maximum likelihood at each, and returns the fit whose KS distance is
/// smallest (smallest x_min wins ties).
TailFit select_xmin(std::span<const double> values, const XminSearchConfig& config = {});

}  // namespace stylized

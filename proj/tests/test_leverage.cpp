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

#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "stylized/leverage.hpp"
#include "stylized/rng.hpp"
#include "stylized/synth.hpp"

using namespace stylized;

namespace {

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

std::vector<double> clustered(std::size_t n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::asym_condvol;
  spec.length = n;
  spec.seed = seed;
  spec.a = 0.05;
  spec.b = 0.6;
  spec.gamma = 0.3;
  return generate(spec).values;
}

}  // namespace

TEST_CASE("leverage_corr matches the naive oracle on both sides") {
  const std::vector<double> x = clustered(1500, 2);
  const LeverageCorrelation corr = leverage_corr(x, LeverageLagRange{-10, 10});
  REQUIRE(corr.lags.size() == 21);
  for (std::size_t i = 0; i < corr.lags.size(); ++i) {
    const int tau = corr.lags[i];
    CHECK(corr.L[i] == doctest::Approx(oracle::leverage(x, tau)).epsilon(1e-12));
  }
  CHECK(corr.lags.front() == -10);
  CHECK(corr.lags.back() == 10);
}

TEST_CASE("leverage_corr flips sign with the series") {
  const std::vector<double> x = clustered(1200, 5);
  std::vector<double> neg(x);
  for (double& v : neg) v = -v;
  const LeverageCorrelation a = leverage_corr(x, LeverageLagRange{-5, 5});
  const LeverageCorrelation b = leverage_corr(neg, LeverageLagRange{-5, 5});
  for (std::size_t i = 0; i < a.L.size(); ++i) CHECK(a.L[i] == -b.L[i]);
}

TEST_CASE("leverage_corr is scale invariant") {
  const std::vector<double> x = clustered(1200, 6);
  std::vector<double> scaled(x);
  for (double& v : scaled) v *= 3.7e-3;
  const LeverageCorrelation a = leverage_corr(x, LeverageLagRange{-5, 5});
  const LeverageCorrelation b = leverage_corr(scaled, LeverageLagRange{-5, 5});
  for (std::size_t i = 0; i < a.L.size(); ++i) {
    CHECK(a.L[i] == doctest::Approx(b.L[i]).epsilon(1e-12));
  }
}

TEST_CASE("cumulative_leverage is an exact prefix sum") {
  // Dyadic values keep the running sums exactly representable.
  const std::vector<double> L = {-0.125, -0.0625, 0.03125};
  const std::vector<double> cum = cumulative_leverage(L);
  CHECK(cum == std::vector<double>{-0.125, -0.1875, -0.15625});

  const std::vector<double> zeros(5, 0.0);
  CHECK(cumulative_leverage(zeros) == std::vector<double>(5, 0.0));
}

TEST_CASE("estimate_tau0 finds an interior minimum") {
  // Convex cumulative leverage with its unique minimum at tau = 10.
  std::vector<double> L;
  for (int tau = 0; tau <= 14; ++tau) L.push_back(-0.105 + 0.01 * tau);
  DetectionConfig detection;
  detection.lead_window = 3;
  detection.negative_threshold = -0.02;
  const Tau0Result result = estimate_tau0(L, detection);
  CHECK(result.present);
  CHECK(result.tau0 == 10);
  CHECK(result.reason == Tau0Reason::detected);
}

TEST_CASE("estimate_tau0 takes the smallest index on ties") {
  // L(10) = 0 makes cum(9) == cum(10) exactly.
  std::vector<double> L;
  for (int tau = 0; tau <= 14; ++tau) L.push_back(-0.1 + 0.01 * tau);
  DetectionConfig detection;
  detection.negative_threshold = -0.02;
  const Tau0Result result = estimate_tau0(L, detection);
  CHECK(result.present);
  CHECK(result.tau0 == 9);
}

TEST_CASE("estimate_tau0 reports no effect without a negative lead") {
  const std::vector<double> L = {0.05, 0.01, 0.02, 0.01, 0.0};
  DetectionConfig detection;
  detection.negative_threshold = -0.02;
  const Tau0Result result = estimate_tau0(L, detection);
  CHECK(!result.present);
  CHECK(result.tau0 == 0);
  CHECK(result.reason == Tau0Reason::lead_not_negative);

  // A deep dip at lag 0 alone must not count: it is outside the lead lags.
  const std::vector<double> only_zero = {-0.5, 0.01, 0.02, 0.01, 0.0};
  const Tau0Result r0 = estimate_tau0(only_zero, detection);
  CHECK(!r0.present);
  CHECK(r0.reason == Tau0Reason::lead_not_negative);
}

TEST_CASE("estimate_tau0 rejects minima at the origin or the boundary") {
  DetectionConfig detection;
  detection.negative_threshold = -0.02;

  const std::vector<double> origin = {-0.5, 0.04, -0.03, 0.02, 0.01};
  const Tau0Result at_origin = estimate_tau0(origin, detection);
  CHECK(!at_origin.present);
  CHECK(at_origin.tau0 == 0);
  CHECK(at_origin.reason == Tau0Reason::min_at_origin);

  const std::vector<double> falling = {-0.1, -0.09, -0.08, -0.07, -0.06};
  const Tau0Result at_boundary = estimate_tau0(falling, detection);
  CHECK(!at_boundary.present);
  CHECK(at_boundary.tau0 == 0);
  CHECK(at_boundary.reason == Tau0Reason::min_at_boundary);
}

TEST_CASE("detect_leverage separates asymmetric from symmetric volatility") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::asym_condvol;
  spec.length = 20000;
  spec.seed = 5;
  spec.a = 0.05;
  spec.b = 0.2;
  spec.gamma = 0.5;
  LeverageConfig config;
  config.tau_max = 80;
  config.seed = 5000;
  const LeverageDetection asym = detect_leverage(generate(spec).values, config);
  CHECK(asym.tau0.present);
  CHECK(asym.tau0.tau0 > 0);
  CHECK(asym.threshold_used < 0.0);
  CHECK(asym.profile.L[1] < asym.threshold_used);

  spec.kind = GeneratorKind::sym_condvol;
  spec.gamma = 0.0;
  spec.b = 0.3;
  const LeverageDetection sym = detect_leverage(generate(spec).values, config);
  CHECK(!sym.tau0.present);
  CHECK(sym.tau0.tau0 == 0);
}

TEST_CASE("detect_leverage profile is aligned with its lags") {
  const std::vector<double> x = clustered(4000, 9);
  LeverageConfig config;
  config.tau_min = -10;
  config.tau_max = 25;
  const LeverageDetection detection = detect_leverage(x, config);
  REQUIRE(detection.profile.lags.size() == 36);
  CHECK(detection.profile.lags.front() == -10);
  CHECK(detection.profile.lags.back() == 25);
  REQUIRE(detection.profile.L_cum.size() == 26);  // tau = 0..25
  // L_cum[t] - L_cum[t-1] = L(t) exactly.
  for (std::size_t t = 1; t < 26; ++t) {
    const double lag_value = detection.profile.L[10 + t];
    CHECK(detection.profile.L_cum[t] - detection.profile.L_cum[t - 1] ==
          doctest::Approx(lag_value).epsilon(1e-12));
  }
}

TEST_CASE("leverage input validation") {
  CHECK(throws_kind(ErrorKind::insufficient_data, [] {
    const std::vector<double> v = {1.0, -1.0, 2.0};
    leverage_corr(v, LeverageLagRange{0, 10});
  }));
  CHECK(throws_kind(ErrorKind::invalid_spec, [] {
    const std::vector<double> v = clustered(100, 1);
    leverage_corr(v, LeverageLagRange{5, 10});  // tau_min must be <= 0
  }));
  CHECK(throws_kind(ErrorKind::degenerate_series, [] {
    std::vector<double> v(50, 2.0);
    leverage_corr(v, LeverageLagRange{0, 3});
  }));
  CHECK(throws_kind(ErrorKind::invalid_spec, [] {
    const std::vector<double> v = clustered(100, 1);
    LeverageConfig config;
    config.tau_max = 1;  // too short to scan
    detect_leverage(v, config);
  }));
  CHECK(throws_kind(ErrorKind::invalid_spec, [] {
    const std::vector<double> v = clustered(100, 1);
    LeverageConfig config;
    config.lead_window = 0;
    detect_leverage(v, config);
  }));
}

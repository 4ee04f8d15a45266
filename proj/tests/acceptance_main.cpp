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
//
// Acceptance gate: one self-contained check per numbered criterion, each
// printing a single PASS/FAIL/SKIP line with its headline numbers and wall
// time. Tolerances and seeds are pinned here, in code, so a green run is
// reproducible bit for bit. Exit code: 0 all pass, 1 any failure, 77 when
// every selected criterion was skipped.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stylized/csv_io.hpp"
#include "stylized/dependence.hpp"
#include "stylized/leverage.hpp"
#include "stylized/rng.hpp"
#include "stylized/rolling.hpp"
#include "stylized/series.hpp"
#include "stylized/synth.hpp"
#include "stylized/tail.hpp"

using namespace stylized;

namespace {

enum class Status { pass, fail, skip };

struct Outcome {
  Status status = Status::fail;
  std::string detail;
};

Outcome pass(const std::string& detail) { return {Status::pass, detail}; }
Outcome fail(const std::string& detail) { return {Status::fail, detail}; }
Outcome skip(const std::string& detail) { return {Status::skip, detail}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, format);
  std::vsnprintf(buf, sizeof(buf), format, ap);
  va_end(ap);
  return buf;
}

Outcome budget_check(Outcome outcome, double elapsed, double budget) {
  if (outcome.status == Status::pass && elapsed > budget) {
    outcome.status = Status::fail;
    outcome.detail += fmt("; over %.0f s budget", budget);
  }
  return outcome;
}

ReturnSeries make_series(GeneratorKind kind, std::size_t n, std::uint64_t seed, double a = 0.05,
                         double b = 0.90, double gamma = 0.0) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.length = n;
  spec.seed = seed;
  spec.a = a;
  spec.b = b;
  spec.gamma = gamma;
  return generate(spec);
}

// --- criterion 1: fast estimators agree with naive references ---------------

Outcome criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(20260814);
  double worst = 0.0;
  for (int series = 0; series < 100; ++series) {
    const std::size_t n = 50 + rng.bounded(1951);  // lengths 50..2000
    const double scale = std::pow(10.0, 2.0 * rng.uniform() - 1.0);
    const double shift = rng.normal();
    std::vector<double> x(n);
    for (double& v : x) v = shift + scale * rng.normal();
    const std::span<const double> xs(x);

    const int max_lag = static_cast<int>(std::min<std::size_t>(20, n - 2));
    const CorrelogramBundle lin = pearson_autocorr(xs, max_lag);
    const double alpha = (series % 2 == 0) ? 1.0 : 2.0;
    const CorrelogramBundle abs_acf = abs_power_autocorr(xs, alpha, max_lag);
    for (int tau = 1; tau <= max_lag; ++tau) {
      const std::size_t i = static_cast<std::size_t>(tau - 1);
      worst = std::max(worst, std::abs(lin.values[i] - oracle::autocorr(x, tau)));
      worst = std::max(worst,
                       std::abs(abs_acf.values[i] - oracle::abs_power_autocorr(x, alpha, tau)));
    }

    const int lev_max = static_cast<int>(std::min<std::size_t>(10, (n - 2) / 2));
    const LeverageCorrelation lev = leverage_corr(xs, LeverageLagRange{-lev_max, lev_max});
    for (std::size_t i = 0; i < lev.lags.size(); ++i) {
      worst = std::max(worst, std::abs(lev.L[i] - oracle::leverage(x, lev.lags[i])));
    }
  }
  const double elapsed = seconds_since(t0);
  Outcome outcome = worst <= 1e-12
                        ? pass(fmt("max |fast - naive| = %.2e over 100 series", worst))
                        : fail(fmt("max |fast - naive| = %.2e exceeds 1e-12", worst));
  return budget_check(std::move(outcome), elapsed, 10.0);
}

// --- criterion 2: ar(1) autocorrelation recovery ----------------------------

Outcome criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ar1;
  spec.length = 50000;
  spec.seed = 424242;
  spec.phi = 0.5;
  const ReturnSeries series = generate(spec);
  const CorrelogramBundle acf = pearson_autocorr(std::span<const double>(series.values), 5);
  const double r1 = acf.values[0];
  const double r5 = acf.values[4];
  const bool ok = std::abs(r1 - 0.5) <= 0.02 && std::abs(r5 - 0.03125) <= 0.02;
  Outcome outcome =
      ok ? pass(fmt("lag-1 = %.4f (target 0.5), lag-5 = %.5f (target 0.03125)", r1, r5))
         : fail(fmt("lag-1 = %.4f or lag-5 = %.5f outside +/-0.02", r1, r5));
  return budget_check(std::move(outcome), seconds_since(t0), 5.0);
}

// --- criterion 3: tail index and splice recovery -----------------------------

// Spliced sample: exponential body on (0, 2], pareto tail (index 3) above,
// mixture weight chosen so the density is continuous at the splice.
std::vector<double> spliced_sample(std::size_t n, std::uint64_t seed) {
  const double w_body = 1.5 / (1.5 + std::exp(-2.0) / (1.0 - std::exp(-2.0)));
  Rng rng(seed);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.uniform() < w_body) {
      out[i] = -std::log1p(-rng.uniform() * (1.0 - std::exp(-2.0)));
    } else {
      out[i] = 2.0 * std::pow(1.0 - rng.uniform(), -1.0 / 3.0);
    }
  }
  return out;
}

constexpr std::uint64_t kSpliceSeedBase = 1200;

Outcome criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();

  GeneratorSpec spec;
  spec.kind = GeneratorKind::pareto_tail;
  spec.length = 100000;
  spec.seed = 31;
  spec.k = 3.0;
  spec.x_min = 2.0;
  const ReturnSeries pareto = generate(spec);
  std::vector<double> magnitudes(pareto.values.size());
  for (std::size_t i = 0; i < magnitudes.size(); ++i) magnitudes[i] = std::abs(pareto.values[i]);
  const TailIndexEstimate mle = mle_tail_index(magnitudes, 2.0);
  if (!(mle.k >= 2.9 && mle.k <= 3.1)) {
    return fail(fmt("mle k = %.4f outside [2.9, 3.1]", mle.k));
  }

  int recovered = 0;
  for (std::uint64_t s = 1; s <= 50; ++s) {
    const std::vector<double> sample = spliced_sample(10000, kSpliceSeedBase + s);
    const TailFit fit = select_xmin(sample);
    if (std::abs(fit.x_min - 2.0) <= 0.3) ++recovered;
  }
  const double elapsed = seconds_since(t0);
  Outcome outcome =
      recovered >= 45
          ? pass(fmt("mle k = %.4f; splice recovered in %d/50 runs (need 45)", mle.k, recovered))
          : fail(fmt("splice recovered in only %d/50 runs (need 45)", recovered));
  return budget_check(std::move(outcome), elapsed, 60.0);
}

// --- criterion 4: permutation band calibration on white noise ---------------

Outcome criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = 13245;
  const ReturnSeries series = make_series(GeneratorKind::iid_gaussian, n, 11);
  const std::span<const double> x(series.values);
  const CorrelogramBundle acf = pearson_autocorr(x, 100);
  const PermutationBands bands = permutation_bands(x, 100, 1000, {1.0, 99.0}, 341);

  double mean_half = 0.0;
  int outside = 0;
  for (std::size_t i = 0; i < acf.lags.size(); ++i) {
    mean_half += 0.5 * (bands.high[i] - bands.low[i]);
    if (acf.values[i] < bands.low[i] || acf.values[i] > bands.high[i]) ++outside;
  }
  mean_half /= static_cast<double>(acf.lags.size());
  const double reference = 2.33 / std::sqrt(static_cast<double>(n));
  const double ratio = mean_half / reference;

  const bool width_ok = ratio >= 0.8 && ratio <= 1.2;
  const bool outside_ok = outside <= 4;
  Outcome outcome =
      width_ok && outside_ok
          ? pass(fmt("band half-width %.5f = %.3f of 2.33/sqrt(n); %d/100 lags outside",
                     mean_half, ratio, outside))
          : fail(fmt("half-width ratio %.3f (need 0.8..1.2), %d lags outside (need <= 4)", ratio,
                     outside));
  return budget_check(std::move(outcome), seconds_since(t0), 60.0);
}

// --- criterion 5: leverage detection power and size --------------------------

Outcome criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  int detected = 0;
  int clean = 0;
  for (std::uint64_t s = 1; s <= 50; ++s) {
    LeverageConfig config;
    config.tau_min = 0;
    config.tau_max = 80;
    config.lead_window = 3;
    config.n_shuffles = 200;
    config.band_percentile = 1.0;
    config.seed = s * 1000;

    const ReturnSeries asym =
        make_series(GeneratorKind::asym_condvol, 20000, s, 0.05, 0.20, 0.50);
    const LeverageDetection on = detect_leverage(std::span<const double>(asym.values), config);
    if (on.tau0.present && on.tau0.tau0 > 0) ++detected;

    const ReturnSeries sym = make_series(GeneratorKind::sym_condvol, 20000, s, 0.05, 0.30);
    const LeverageDetection off = detect_leverage(std::span<const double>(sym.values), config);
    if (!off.tau0.present) ++clean;
  }
  const double elapsed = seconds_since(t0);
  Outcome outcome =
      detected >= 45 && clean >= 45
          ? pass(fmt("asymmetric detected %d/50, symmetric clean %d/50 (need 45)", detected, clean))
          : fail(fmt("asymmetric detected %d/50, symmetric clean %d/50 (need 45)", detected,
                     clean));
  return budget_check(std::move(outcome), elapsed, 120.0);
}

// --- criterion 6: exact power-law correlogram fit ----------------------------

Outcome criterion_6() {
  CorrelogramBundle bundle;
  bundle.alpha = 1.0;
  for (int tau = 1; tau <= 100; ++tau) {
    bundle.lags.push_back(tau);
    bundle.values.push_back(std::pow(static_cast<double>(tau), -0.3));
  }
  const DecayFit fit = fit_decay(bundle, LagRange{1, 100});
  const double err = std::abs(fit.beta - 0.3);
  return err <= 1e-6 ? pass(fmt("beta = %.9f, |beta - 0.3| = %.2e", fit.beta, err))
                     : fail(fmt("beta = %.9f off by %.2e (tolerance 1e-6)", fit.beta, err));
}

// --- criterion 7: rolling windows flag a regime switch -----------------------

Outcome criterion_7() {
  std::size_t pre_total = 0, pre_zero = 0, post_total = 0, post_detected = 0;
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const ReturnSeries calm = make_series(GeneratorKind::sym_condvol, 8000, s, 0.05, 0.30);
    const ReturnSeries stressed =
        make_series(GeneratorKind::asym_condvol, 8000, s + 500, 0.05, 0.20, 0.50);
    ReturnSeries joined;
    joined.delta_t = calm.delta_t;
    joined.start_time = calm.start_time;
    joined.values = calm.values;
    joined.values.insert(joined.values.end(), stressed.values.begin(), stressed.values.end());

    RollingConfig config;
    config.seed = s * 77;
    const std::vector<WindowReport> reports = run_windows(joined, config);
    for (const WindowReport& report : reports) {
      if (report.start_index + config.window.window_len <= 8000) {
        ++pre_total;
        if (report.tau0.tau0 == 0) ++pre_zero;
      } else if (report.start_index >= 8000) {
        ++post_total;
        if (report.tau0.present && report.tau0.tau0 > 0) ++post_detected;
      }
    }
  }
  const double pre_rate = static_cast<double>(pre_zero) / static_cast<double>(pre_total);
  const double post_rate = static_cast<double>(post_detected) / static_cast<double>(post_total);
  const bool ok = pre_rate >= 0.8 && post_rate >= 0.8;
  Outcome outcome =
      ok ? pass(fmt("pre-switch tau0=0 in %zu/%zu (%.1f%%), post-switch tau0>0 in %zu/%zu (%.1f%%)",
                    pre_zero, pre_total, 100.0 * pre_rate, post_detected, post_total,
                    100.0 * post_rate))
         : fail(fmt("pre %.1f%% or post %.1f%% below 80%%", 100.0 * pre_rate, 100.0 * post_rate));
  return outcome;
}

// --- criterion 8: full pipeline on the reference dataset ---------------------

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

Outcome criterion_8() {
  const char* path = std::getenv("STYLIZED_BTC_DATA");
  if (path == nullptr || path[0] == '\0') {
    return skip("STYLIZED_BTC_DATA not set; reference dataset unavailable");
  }
  const auto t0 = std::chrono::steady_clock::now();

  const TickSeries ticks = read_ticks_file(path);
  const ResampledPrices grid = resample_locf(ticks, 18000);
  const ReturnSeries returns = log_returns(std::span<const PricePoint>(grid.points));
  const std::span<const double> raw(returns.values);
  const NormalizedReturnSeries normalized = normalize(raw);
  const std::span<const double> norm(normalized.values);

  std::ostringstream detail;
  bool ok = true;
  const auto record = [&](const char* name, double value, double target, double tol) {
    const bool hit = within(value, target, tol);
    ok = ok && hit;
    detail << (hit ? " " : " !") << name << "=" << value;
  };

  detail << "n=" << returns.values.size();
  const MomentSummary m = moments(raw);
  record("std", m.std_dev, 0.032, 0.002);
  record("skew", m.skewness, -2.93, 0.15);
  // Kurtosis convention sweep: accept whichever of excess or raw matches.
  const double kurt_excess = m.kurtosis;
  const double kurt_raw = m.kurtosis + 3.0;
  const bool kurt_ok = within(kurt_excess, 72.64, 3.0) || within(kurt_raw, 72.64, 3.0);
  ok = ok && kurt_ok;
  detail << (kurt_ok ? " " : " !") << "kurt=" << kurt_excess << "/" << kurt_raw;

  std::vector<double> abs_norm(normalized.values.size());
  for (std::size_t i = 0; i < abs_norm.size(); ++i) abs_norm[i] = std::abs(normalized.values[i]);
  const TailFit tail = select_xmin(abs_norm);
  record("k", tail.k, 3.49, 0.1);
  record("x_min", tail.x_min, 2.28, 0.3);

  const CorrelogramBundle abs1 = abs_power_autocorr(norm, 1.0, 100);
  const CorrelogramBundle abs2 = abs_power_autocorr(norm, 2.0, 100);
  record("A1(1)", abs1.values[0], 0.39, 0.02);
  record("A2(1)", abs2.values[0], 0.26, 0.02);

  const LagRange fit_range{1, 100};
  record("beta1", fit_decay(abs1, fit_range).beta, 0.31, 0.03);
  record("beta2", fit_decay(abs2, fit_range).beta, 0.72, 0.15);

  LeverageConfig config;
  config.tau_min = -50;
  config.tau_max = 50;
  config.lead_window = 3;
  config.n_shuffles = 1000;
  config.band_percentile = 1.0;
  config.seed = 2026;
  const LeverageDetection detection = detect_leverage(norm, config);
  const bool tau0_ok = detection.tau0.present && within(detection.tau0.tau0, 10.0, 2.0);
  ok = ok && tau0_ok;
  detail << (tau0_ok ? " " : " !") << "tau0=" << detection.tau0.tau0;

  Outcome outcome = ok ? pass(detail.str()) : fail("mismatches marked '!':" + detail.str());
  return budget_check(std::move(outcome), seconds_since(t0), 300.0);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion_1, criterion_2, criterion_3, criterion_4,
      criterion_5, criterion_6, criterion_7, criterion_8};

  int which = 0;
  if (argc > 1) {
    which = std::atoi(argv[1]);
    if (which < 1 || which > 8) {
      std::fprintf(stderr, "usage: %s [criterion 1..8]\n", argv[0]);
      return 2;
    }
  }

  bool any_fail = false;
  bool any_pass = false;
  for (int index = 1; index <= 8; ++index) {
    if (which != 0 && index != which) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[static_cast<std::size_t>(index - 1)]();
    } catch (const std::exception& e) {
      outcome = fail(std::string("unexpected exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    const char* label = outcome.status == Status::pass   ? "PASS"
                        : outcome.status == Status::fail ? "FAIL"
                                                         : "SKIP";
    std::printf("criterion %d %s - %s (%.1f s)\n", index, label, outcome.detail.c_str(), elapsed);
    std::fflush(stdout);
    if (outcome.status == Status::fail) any_fail = true;
    if (outcome.status == Status::pass) any_pass = true;
  }
  if (any_fail) return 1;
  if (!any_pass) return 77;
  return 0;
}

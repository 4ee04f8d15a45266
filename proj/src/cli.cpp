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

#include "stylized/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "stylized/csv_io.hpp"
#include "stylized/dependence.hpp"
#include "stylized/json_writer.hpp"
#include "stylized/leverage.hpp"
#include "stylized/rng.hpp"
#include "stylized/rolling.hpp"
#include "stylized/series.hpp"
#include "stylized/synth.hpp"
#include "stylized/tail.hpp"

namespace stylized {
namespace {

// Fixed knobs of the rolling-window indicator scan; windows are short, so
// these are deliberately tighter than the whole-series flags.
constexpr int kRollingBetaMaxLag = 30;
constexpr int kRollingLeverageTauMax = 30;
constexpr int kRollingShuffles = 200;
constexpr int kLeadWindow = 3;
constexpr double kBandPercentile = 1.0;
constexpr double kBandPercentileHigh = 99.0;

// Substream indices reserved per randomized stage, so every artifact draws
// from an independent stream of the master seed.
constexpr std::uint64_t kStreamLinearBands = 101;
constexpr std::uint64_t kStreamLeverage = 202;
constexpr std::uint64_t kStreamWindows = 303;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::empty_input:
    case ErrorKind::invalid_price:
    case ErrorKind::input_error:
      return kExitInput;
    case ErrorKind::degenerate_series:
    case ErrorKind::insufficient_tail:
    case ErrorKind::insufficient_data:
      return kExitComputation;
    case ErrorKind::invalid_spec:
      return kExitConfig;
  }
  return kExitComputation;
}

int report_error(const Error& e) {
  std::cerr << "error kind=" << to_string(e.kind());
  if (e.line() >= 0) std::cerr << " line=" << e.line();
  std::cerr << " msg=\"" << e.what() << "\"" << std::endl;
  return exit_code_for(e.kind());
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::input_error, "failed to hash input");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string utc_now_iso() {
  const std::time_t now = std::time(nullptr);
  std::tm tm = {};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_all_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::input_error, "cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::input_error, "cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw Error(ErrorKind::input_error, "write failed for '" + path.string() + "'");
}

// ---------------------------------------------------------------------------
// analyze

const std::vector<std::string> kArtifactGroups = {"moments", "tail",     "linear", "spearman",
                                                  "absacf",  "leverage", "windows"};

struct AnalyzeOptions {
  std::string input = "-";
  std::string kind;
  std::int64_t delta_t = 18000;
  int max_lag = 100;
  int n_shuffles = 1000;
  std::uint64_t seed = 1;
  int fit_lo = 1;
  int fit_hi = 100;
  std::size_t window_len = 1600;
  std::size_t window_step = 200;
  int leverage_max_lag = 50;
  std::string events;
  std::string out_dir = ".";
  std::vector<std::string> only;
};

struct LoadedInput {
  ReturnSeries returns;
  std::size_t rows = 0;         // data rows in the input
  std::size_t grid_points = 0;  // ticks only
  long gap_count = -1;          // ticks only
};

void check_analyze_options(AnalyzeOptions& opts) {
  if (opts.kind != "ticks" && opts.kind != "prices" && opts.kind != "returns") {
    throw Error(ErrorKind::invalid_spec, "--kind must be ticks, prices or returns");
  }
  if (opts.delta_t <= 0) throw Error(ErrorKind::invalid_spec, "--delta-t must be positive");
  if (opts.max_lag < 1) throw Error(ErrorKind::invalid_spec, "--max-lag must be at least 1");
  if (opts.n_shuffles < 1) throw Error(ErrorKind::invalid_spec, "--n-shuffles must be at least 1");
  if (opts.fit_lo < 1 || opts.fit_hi < opts.fit_lo) {
    throw Error(ErrorKind::invalid_spec, "fit range must satisfy 1 <= --fit-lo <= --fit-hi");
  }
  if (opts.window_len == 0 || opts.window_step == 0) {
    throw Error(ErrorKind::invalid_spec, "--window-len and --window-step must be positive");
  }
  if (opts.leverage_max_lag < 2) {
    throw Error(ErrorKind::invalid_spec, "--leverage-max-lag must be at least 2");
  }
  for (std::string& name : opts.only) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (std::find(kArtifactGroups.begin(), kArtifactGroups.end(), name) == kArtifactGroups.end()) {
      throw Error(ErrorKind::invalid_spec, "unknown --only group '" + name + "'");
    }
  }
}

bool selected(const AnalyzeOptions& opts, const std::string& group) {
  if (opts.only.empty()) return true;
  return std::find(opts.only.begin(), opts.only.end(), group) != opts.only.end();
}

void check_regular_price_grid(const std::vector<PricePoint>& prices) {
  if (prices.size() < 2) {
    throw Error(ErrorKind::empty_input, "need at least 2 prices to form returns");
  }
  const std::int64_t dt = prices[1].timestamp - prices[0].timestamp;
  if (dt <= 0) {
    throw Error(ErrorKind::input_error, "price timestamps must be strictly increasing", 2);
  }
  for (std::size_t i = 1; i < prices.size(); ++i) {
    if (prices[i].timestamp - prices[i - 1].timestamp != dt) {
      throw Error(ErrorKind::input_error,
                  "price timestamps are not on a regular grid; pass raw trades as --kind ticks",
                  static_cast<long>(i + 1));
    }
  }
}

LoadedInput load_input(const AnalyzeOptions& opts, const std::string& bytes) {
  std::istringstream in(bytes);
  LoadedInput loaded;
  if (opts.kind == "ticks") {
    TickSeries ticks = read_ticks(in, opts.input == "-" ? "stdin" : opts.input);
    loaded.rows = ticks.observations.size();
    ResampledPrices grid = resample_locf(ticks, opts.delta_t);
    loaded.grid_points = grid.points.size();
    loaded.gap_count = grid.gap_count;
    loaded.returns = log_returns(std::span<const PricePoint>(grid.points));
  } else if (opts.kind == "prices") {
    const std::vector<PricePoint> prices = read_prices(in);
    loaded.rows = prices.size();
    check_regular_price_grid(prices);
    loaded.returns = log_returns(std::span<const PricePoint>(prices));
  } else {
    loaded.returns = read_returns(in);
    loaded.rows = loaded.returns.values.size();
  }
  if (loaded.returns.values.size() < 2) {
    throw Error(ErrorKind::empty_input, "input yields fewer than 2 returns");
  }
  return loaded;
}

std::string moments_json(const ReturnSeries& returns) {
  const MomentSummary m = moments(returns, KurtosisConvention::excess);
  JsonWriter w;
  w.begin_object();
  w.kv("count", m.count);
  w.kv("delta_t", returns.delta_t);
  w.kv("start_time", returns.start_time);
  w.kv("mean", m.mean);
  w.kv("std_dev", m.std_dev);
  w.kv("skewness", m.skewness);
  w.kv("kurtosis_excess", m.kurtosis);
  w.kv("kurtosis_raw", m.kurtosis + 3.0);
  w.end_object();
  return w.str();
}

std::string tailfit_json(const TailFit& fit, std::size_t n) {
  JsonWriter w;
  w.begin_object();
  w.kv("k", fit.k);
  w.kv("k_std_err", fit.k_std_err);
  w.kv("x_min", fit.x_min);
  w.kv("n_tail", fit.n_tail);
  w.kv("ks_distance", fit.ks_distance);
  w.kv("n", n);
  w.kv("input", "abs-normalized-returns");
  w.end_object();
  return w.str();
}

void write_decay_fit(JsonWriter& w, const DecayFit& fit) {
  w.begin_object();
  w.kv("alpha", fit.alpha);
  w.kv("beta", fit.beta);
  w.kv("beta_std_err", fit.beta_std_err);
  w.kv("tau_lo", fit.tau_lo);
  w.kv("tau_hi", fit.tau_hi);
  w.key("excluded_lags");
  w.begin_array();
  for (int tau : fit.excluded_lags) w.value(tau);
  w.end_array();
  w.end_object();
}

std::string decay_fits_json(const DecayFit& fit1, const DecayFit& fit2, const AnalyzeOptions& opts) {
  JsonWriter w;
  w.begin_object();
  w.kv("fit_lo", opts.fit_lo);
  w.kv("fit_hi", opts.fit_hi);
  w.key("alpha1");
  write_decay_fit(w, fit1);
  w.key("alpha2");
  write_decay_fit(w, fit2);
  w.end_object();
  return w.str();
}

std::string leverage_json(const LeverageDetection& detection, const AnalyzeOptions& opts) {
  JsonWriter w;
  w.begin_object();
  w.kv("tau0", detection.tau0.tau0);
  w.kv("present", detection.tau0.present);
  w.kv("reason", to_string(detection.tau0.reason));
  w.kv("threshold_used", detection.threshold_used);
  w.kv("lead_window", detection.lead_window);
  w.kv("tau_max", opts.leverage_max_lag);
  w.kv("n_shuffles", opts.n_shuffles);
  w.kv("input", "normalized-returns");
  w.end_object();
  return w.str();
}

std::string manifest_json(const AnalyzeOptions& opts, const LoadedInput& loaded,
                          const std::string& input_sha256,
                          const std::vector<std::string>& outputs) {
  JsonWriter w;
  w.begin_object();
  w.kv("tool_version", kToolVersion);
  w.kv("created_at", utc_now_iso());
  w.kv("subcommand", "analyze");
  w.key("parameters");
  w.begin_object();
  w.kv("input", opts.input);
  w.kv("kind", opts.kind);
  w.kv("delta_t", opts.delta_t);
  w.kv("max_lag", opts.max_lag);
  w.kv("n_shuffles", opts.n_shuffles);
  w.kv("seed", opts.seed);
  w.kv("fit_lo", opts.fit_lo);
  w.kv("fit_hi", opts.fit_hi);
  w.kv("window_len", opts.window_len);
  w.kv("window_step", opts.window_step);
  w.kv("leverage_max_lag", opts.leverage_max_lag);
  w.key("events");
  if (opts.events.empty()) {
    w.null();
  } else {
    w.value(opts.events);
  }
  w.kv("out", opts.out_dir);
  w.key("only");
  w.begin_array();
  for (const std::string& group : kArtifactGroups) {
    if (!opts.only.empty() && selected(opts, group)) w.value(group);
  }
  w.end_array();
  w.end_object();
  w.key("input_summary");
  w.begin_object();
  w.kv("sha256", input_sha256);
  w.kv("rows", loaded.rows);
  w.kv("n_returns", loaded.returns.values.size());
  w.kv("delta_t", loaded.returns.delta_t);
  w.kv("start_time", loaded.returns.start_time);
  if (loaded.gap_count >= 0) {
    w.kv("grid_points", loaded.grid_points);
    w.kv("gap_count", static_cast<std::int64_t>(loaded.gap_count));
  }
  w.end_object();
  w.key("outputs");
  w.begin_array();
  for (const std::string& name : outputs) w.value(name);
  w.end_array();
  w.end_object();
  return w.str();
}

int run_analyze(AnalyzeOptions& opts) {
  check_analyze_options(opts);
  const std::string bytes = read_all_input(opts.input);
  const std::string input_hash = sha256_hex(bytes);
  const LoadedInput loaded = load_input(opts, bytes);
  const std::span<const double> raw(loaded.returns.values);

  const std::filesystem::path out_dir(opts.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorKind::input_error, "cannot create output directory '" + opts.out_dir + "'");
  }

  // The heavy stages (tail scan, permutation bands, leverage, windows) all
  // consume the normalized series; compute it once.
  NormalizedReturnSeries normalized;
  if (selected(opts, "tail") || selected(opts, "absacf") || selected(opts, "leverage")) {
    normalized = normalize(raw);
  }

  std::vector<std::string> outputs;
  auto emit = [&](const std::string& name, const std::string& contents) {
    write_file(out_dir / name, contents);
    outputs.push_back(name);
  };

  if (selected(opts, "moments")) {
    emit("moments.json", moments_json(loaded.returns));
  }

  if (selected(opts, "tail")) {
    std::vector<double> abs_norm(normalized.values.size());
    for (std::size_t i = 0; i < abs_norm.size(); ++i) abs_norm[i] = std::abs(normalized.values[i]);
    const TailFit fit = select_xmin(abs_norm);
    emit("tailfit.json", tailfit_json(fit, abs_norm.size()));
    std::ostringstream csv;
    write_ccdf_csv(csv, ccdf(abs_norm));
    emit("ccdf.csv", csv.str());
  }

  if (selected(opts, "linear")) {
    CorrelogramBundle bundle = pearson_autocorr(raw, opts.max_lag);
    const PermutationBands bands =
        permutation_bands(raw, opts.max_lag, opts.n_shuffles,
                          {kBandPercentile, kBandPercentileHigh}, mix_seed(opts.seed, kStreamLinearBands));
    bundle.band_low = bands.low;
    bundle.band_high = bands.high;
    std::ostringstream csv;
    write_correlogram_csv(csv, bundle);
    emit("correlogram_linear.csv", csv.str());
  }

  if (selected(opts, "spearman")) {
    const CorrelogramBundle bundle = spearman_autocorr(raw, opts.max_lag);
    std::ostringstream csv;
    write_correlogram_csv(csv, bundle);
    emit("correlogram_spearman.csv", csv.str());
  }

  if (selected(opts, "absacf")) {
    const std::span<const double> norm(normalized.values);
    const CorrelogramBundle abs1 = abs_power_autocorr(norm, 1.0, opts.max_lag);
    const CorrelogramBundle abs2 = abs_power_autocorr(norm, 2.0, opts.max_lag);
    std::ostringstream csv1;
    write_correlogram_csv(csv1, abs1);
    emit("correlogram_abs1.csv", csv1.str());
    std::ostringstream csv2;
    write_correlogram_csv(csv2, abs2);
    emit("correlogram_abs2.csv", csv2.str());
    const LagRange fit_range{opts.fit_lo, opts.fit_hi};
    const DecayFit fit1 = fit_decay(abs1, fit_range);
    const DecayFit fit2 = fit_decay(abs2, fit_range);
    emit("decay_fits.json", decay_fits_json(fit1, fit2, opts));
  }

  if (selected(opts, "leverage")) {
    LeverageConfig config;
    config.tau_min = -opts.leverage_max_lag;
    config.tau_max = opts.leverage_max_lag;
    config.lead_window = kLeadWindow;
    config.n_shuffles = opts.n_shuffles;
    config.band_percentile = kBandPercentile;
    config.seed = mix_seed(opts.seed, kStreamLeverage);
    const LeverageDetection detection =
        detect_leverage(std::span<const double>(normalized.values), config);
    std::ostringstream csv;
    write_leverage_csv(csv, detection.profile);
    emit("leverage.csv", csv.str());
    emit("leverage.json", leverage_json(detection, opts));
  }

  if (selected(opts, "windows")) {
    RollingConfig config;
    config.window = WindowSpec{opts.window_len, opts.window_step};
    config.beta_max_lag = kRollingBetaMaxLag;
    config.fit_range = LagRange{1, kRollingBetaMaxLag};
    config.leverage_tau_max = kRollingLeverageTauMax;
    config.lead_window = kLeadWindow;
    config.n_shuffles = kRollingShuffles;
    config.band_percentile = kBandPercentile;
    config.seed = mix_seed(opts.seed, kStreamWindows);
    const std::vector<WindowReport> reports = run_windows(loaded.returns, config);
    std::ostringstream csv;
    write_windows_csv(csv, reports);
    emit("windows.csv", csv.str());
    if (!opts.events.empty()) {
      const std::vector<EventMarker> markers = read_event_markers_file(opts.events);
      emit("regime.json", regime_summary_json(reports, markers));
    }
  }

  write_file(out_dir / "run_manifest.json", manifest_json(opts, loaded, input_hash, outputs));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// synth

struct SynthOptions {
  std::string kind;
  std::size_t length = 0;
  std::uint64_t seed = 1;
  double phi = 0.5;
  double k = 3.0;
  double x_min = 1.0;
  double omega = 1e-5;
  double a = 0.05;
  double b = 0.65;
  double gamma = 0.25;
  std::int64_t delta_t = 18000;
  std::int64_t start_time = 0;
  std::string out = "-";
};

int run_synth(const SynthOptions& opts) {
  GeneratorSpec spec;
  spec.kind = generator_kind_from_string(opts.kind);
  spec.length = opts.length;
  spec.seed = opts.seed;
  spec.phi = opts.phi;
  spec.k = opts.k;
  spec.x_min = opts.x_min;
  spec.omega = opts.omega;
  spec.a = opts.a;
  spec.b = opts.b;
  spec.gamma = opts.gamma;
  spec.delta_t = opts.delta_t;
  spec.start_time = opts.start_time;
  const ReturnSeries series = generate(spec);
  if (opts.out == "-") {
    write_returns_csv(std::cout, series);
  } else {
    std::ostringstream csv;
    write_returns_csv(csv, series);
    write_file(opts.out, csv.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateOptions {
  std::string input = "-";
  std::string kind = "ticks";
  std::int64_t delta_t = 18000;
};

struct Issue {
  long line = 0;
  ErrorKind kind = ErrorKind::input_error;
  std::string message;
};

struct Diagnostics {
  std::size_t rows = 0;
  std::size_t parse_errors = 0;
  std::size_t nonpositive_prices = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t duplicate_timestamps = 0;
  std::size_t irregular_steps = 0;  // prices/returns only
  std::size_t gap_count = 0;        // ticks only
  std::int64_t max_gap = 0;
  bool have_span = false;
  std::int64_t first_timestamp = 0;
  std::int64_t last_timestamp = 0;
  std::size_t grid_points = 0;  // ticks only, clean inputs only
  bool have_grid = false;
  std::vector<Issue> issues;  // first issue per category
};

std::string local_strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> local_split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(local_strip(line.substr(start)));
      return fields;
    }
    fields.push_back(local_strip(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

void note_issue(Diagnostics& diag, std::size_t& counter, long line, ErrorKind kind,
                const std::string& message) {
  if (counter == 0) diag.issues.push_back(Issue{line, kind, message});
  ++counter;
}

Diagnostics scan_input(const ValidateOptions& opts, const std::string& bytes) {
  Diagnostics diag;
  std::istringstream in(bytes);
  std::string line;
  long line_no = 0;
  bool seen_data = false;
  bool have_prev = false;
  std::int64_t prev_ts = 0;
  bool have_step = false;
  std::int64_t step = 0;
  std::vector<Tick> clean_ticks;

  const bool is_ticks = opts.kind == "ticks";
  const bool has_price = opts.kind != "returns";
  const std::size_t max_fields = is_ticks ? 3 : 2;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = local_strip(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::vector<std::string> fields = local_split(stripped);
    if (!seen_data && !fields[0].empty() &&
        !(std::isdigit(static_cast<unsigned char>(fields[0][0])) || fields[0][0] == '-' ||
          fields[0][0] == '+')) {
      seen_data = true;  // optional header row
      continue;
    }
    seen_data = true;

    std::int64_t ts = 0;
    double value = 0.0;
    try {
      if (fields.size() < 2 || fields.size() > max_fields) {
        throw Error(ErrorKind::input_error,
                    "expected 2" + std::string(is_ticks ? "..3" : "") + " columns, got " +
                        std::to_string(fields.size()),
                    line_no);
      }
      ts = parse_timestamp(fields[0], line_no);
      errno = 0;
      char* end = nullptr;
      value = std::strtod(fields[1].c_str(), &end);
      if (end == fields[1].c_str() || *end != '\0' || errno == ERANGE) {
        throw Error(ErrorKind::input_error, "cannot parse value '" + fields[1] + "'", line_no);
      }
    } catch (const Error& e) {
      note_issue(diag, diag.parse_errors, line_no, ErrorKind::input_error, e.what());
      continue;
    }
    ++diag.rows;

    bool price_ok = true;
    if (has_price && !(value > 0.0)) {
      price_ok = false;
      note_issue(diag, diag.nonpositive_prices, line_no, ErrorKind::invalid_price,
                 "price must be strictly positive, got '" + fields[1] + "'");
    }

    if (!diag.have_span) {
      diag.have_span = true;
      diag.first_timestamp = ts;
      diag.last_timestamp = ts;
    } else {
      diag.last_timestamp = ts;
    }

    if (have_prev) {
      const std::int64_t dt = ts - prev_ts;
      if (dt < 0) {
        note_issue(diag, diag.monotonicity_violations, line_no, ErrorKind::input_error,
                   "timestamp decreases");
      } else if (dt == 0) {
        ++diag.duplicate_timestamps;
      } else if (is_ticks) {
        if (dt > opts.delta_t) {
          ++diag.gap_count;
          diag.max_gap = std::max(diag.max_gap, dt);
        }
      } else {
        if (!have_step) {
          have_step = true;
          step = dt;
        } else if (dt != step) {
          note_issue(diag, diag.irregular_steps, line_no, ErrorKind::input_error,
                     "timestamps are not on a regular grid");
        }
      }
    }
    have_prev = true;
    prev_ts = ts;

    if (is_ticks && price_ok) clean_ticks.push_back(Tick{ts, value, 0.0});
  }

  if (is_ticks && diag.parse_errors == 0 && diag.nonpositive_prices == 0 &&
      diag.monotonicity_violations == 0 && !clean_ticks.empty()) {
    const TickSeries series = make_tick_series(std::move(clean_ticks), opts.input);
    diag.grid_points = resample_locf(series, opts.delta_t).points.size();
    diag.have_grid = true;
  }
  return diag;
}

std::string diagnostics_json(const ValidateOptions& opts, const Diagnostics& diag,
                             const std::string& input_sha256) {
  JsonWriter w;
  w.begin_object();
  w.kv("input", opts.input);
  w.kv("kind", opts.kind);
  w.kv("sha256", input_sha256);
  w.kv("rows", diag.rows);
  w.kv("parse_errors", diag.parse_errors);
  if (opts.kind != "returns") w.kv("nonpositive_prices", diag.nonpositive_prices);
  w.kv("monotonicity_violations", diag.monotonicity_violations);
  w.kv("duplicate_timestamps", diag.duplicate_timestamps);
  if (opts.kind == "ticks") {
    w.kv("delta_t", opts.delta_t);
    w.kv("gap_count", diag.gap_count);
    w.kv("max_gap", diag.max_gap);
    w.key("grid_points");
    if (diag.have_grid) {
      w.value(diag.grid_points);
    } else {
      w.null();
    }
  } else {
    w.kv("irregular_steps", diag.irregular_steps);
  }
  w.key("first_timestamp");
  if (diag.have_span) {
    w.value(diag.first_timestamp);
  } else {
    w.null();
  }
  w.key("last_timestamp");
  if (diag.have_span) {
    w.value(diag.last_timestamp);
  } else {
    w.null();
  }
  w.key("issues");
  w.begin_array();
  for (const Issue& issue : diag.issues) {
    w.begin_object();
    w.kv("line", static_cast<std::int64_t>(issue.line));
    w.kv("kind", to_string(issue.kind));
    w.kv("message", issue.message);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

int run_validate(const ValidateOptions& opts) {
  if (opts.kind != "ticks" && opts.kind != "prices" && opts.kind != "returns") {
    throw Error(ErrorKind::invalid_spec, "--kind must be ticks, prices or returns");
  }
  if (opts.delta_t <= 0) throw Error(ErrorKind::invalid_spec, "--delta-t must be positive");
  const std::string bytes = read_all_input(opts.input);
  const Diagnostics diag = scan_input(opts, bytes);
  std::cout << diagnostics_json(opts, diag, sha256_hex(bytes));
  if (!diag.issues.empty()) {
    const Issue* first = &diag.issues.front();
    for (const Issue& issue : diag.issues) {
      if (issue.line < first->line) first = &issue;
    }
    return report_error(Error(first->kind, first->message, first->line));
  }
  if (diag.rows == 0) {
    return report_error(Error(ErrorKind::empty_input, "input has no data rows"));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Stylized-fact toolkit for return series: heavy tails, autocorrelations, "
               "volatility clustering, leverage, rolling regime indicators"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Run the analysis pipeline on a CSV input and write artifact files");
  analyze->add_option("--input", analyze_opts.input, "Input CSV path, or - for stdin");
  analyze->add_option("--kind", analyze_opts.kind, "Input kind: ticks, prices or returns")
      ->required();
  analyze->add_option("--delta-t", analyze_opts.delta_t,
                      "Resampling interval in seconds for tick input");
  analyze->add_option("--max-lag", analyze_opts.max_lag, "Largest autocorrelation lag");
  analyze->add_option("--n-shuffles", analyze_opts.n_shuffles,
                      "Permutations for significance bands and leverage calibration");
  analyze->add_option("--seed", analyze_opts.seed, "Master seed for all randomized stages");
  analyze->add_option("--fit-lo", analyze_opts.fit_lo, "First lag of the decay fit");
  analyze->add_option("--fit-hi", analyze_opts.fit_hi, "Last lag of the decay fit");
  analyze->add_option("--window-len", analyze_opts.window_len, "Rolling window length");
  analyze->add_option("--window-step", analyze_opts.window_step, "Rolling window step");
  analyze->add_option("--leverage-max-lag", analyze_opts.leverage_max_lag,
                      "Leverage correlation scan range");
  analyze->add_option("--events", analyze_opts.events,
                      "Event marker CSV (timestamp,label) for the regime summary");
  analyze->add_option("--out", analyze_opts.out_dir, "Output directory");
  analyze->add_option("--only", analyze_opts.only,
                      "Restrict to artifact groups (moments, tail, linear, spearman, absacf, "
                      "leverage, windows)")
      ->delimiter(',');

  SynthOptions synth_opts;
  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a seeded synthetic return series with a known signature");
  synth->add_option("--kind", synth_opts.kind,
                    "Generator: iid-gaussian, ar1, pareto-tail, sym-condvol or asym-condvol")
      ->required();
  synth->add_option("--length", synth_opts.length, "Number of returns")->required();
  synth->add_option("--seed", synth_opts.seed, "Generator seed");
  synth->add_option("--phi", synth_opts.phi, "ar1 coefficient, |phi| < 1");
  synth->add_option("--k", synth_opts.k, "pareto-tail CCDF exponent");
  synth->add_option("--x-min", synth_opts.x_min, "pareto-tail scale");
  synth->add_option("--omega", synth_opts.omega, "condvol variance floor");
  synth->add_option("--a", synth_opts.a, "condvol shock coefficient");
  synth->add_option("--b", synth_opts.b, "condvol persistence coefficient");
  synth->add_option("--gamma", synth_opts.gamma,
                    "asym-condvol extra weight on negative shocks (ignored by sym-condvol)");
  synth->add_option("--delta-t", synth_opts.delta_t, "Spacing stamped on the output");
  synth->add_option("--start-time", synth_opts.start_time, "Timestamp of the first return");
  synth->add_option("--out", synth_opts.out, "Output CSV path, or - for stdout");

  ValidateOptions validate_opts;
  CLI::App* validate = app.add_subcommand(
      "validate", "Scan a CSV input and report diagnostics without writing artifacts");
  validate->add_option("--input", validate_opts.input, "Input CSV path, or - for stdin");
  validate->add_option("--kind", validate_opts.kind, "Input kind: ticks, prices or returns");
  validate->add_option("--delta-t", validate_opts.delta_t,
                       "Grid interval used for gap statistics and the resample preview");

  try {
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error kind=InvalidSpec msg=\"" << e.what() << "\"" << std::endl;
    return kExitConfig;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opts);
    if (synth->parsed()) return run_synth(synth_opts);
    if (validate->parsed()) return run_validate(validate_opts);
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error kind=Internal msg=\"" << e.what() << "\"" << std::endl;
    return kExitComputation;
  }
  return kExitConfig;
}

int run_cli(int argc, const char* const* argv) {
  return run_cli(std::vector<std::string>(argv, argv + argc));
}

}  // namespace stylized

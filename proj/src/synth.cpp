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

#include "stylized/synth.hpp"

#include <cmath>

#include "stylized/rng.hpp"

namespace stylized {
namespace {

constexpr std::size_t kCondvolBurnIn = 1000;

void check_common(const GeneratorSpec& spec) {
  if (spec.length == 0) throw Error(ErrorKind::invalid_spec, "length must be positive");
  if (spec.delta_t <= 0) throw Error(ErrorKind::invalid_spec, "delta_t must be positive");
}

std::vector<double> gen_iid_gaussian(const GeneratorSpec& spec, Rng& rng) {
  std::vector<double> x(spec.length);
  for (double& v : x) v = rng.normal();
  return x;
}

std::vector<double> gen_ar1(const GeneratorSpec& spec, Rng& rng) {
  if (!(std::abs(spec.phi) < 1.0)) {
    throw Error(ErrorKind::invalid_spec, "ar1 needs |phi| < 1");
  }
  std::vector<double> x(spec.length);
  // Stationary start: marginal variance 1 / (1 - phi^2).
  x[0] = rng.normal() / std::sqrt(1.0 - spec.phi * spec.phi);
  for (std::size_t t = 1; t < spec.length; ++t) x[t] = spec.phi * x[t - 1] + rng.normal();
  return x;
}

std::vector<double> gen_pareto_tail(const GeneratorSpec& spec, Rng& rng) {
  if (!(spec.k > 1.0)) throw Error(ErrorKind::invalid_spec, "pareto-tail needs k > 1");
  if (!(spec.x_min > 0.0)) throw Error(ErrorKind::invalid_spec, "pareto-tail needs x_min > 0");
  std::vector<double> x(spec.length);
  const double inv_k = 1.0 / spec.k;
  for (double& v : x) {
    const double u = rng.uniform();  // 1 - u in (0, 1], so the magnitude is finite
    const double magnitude = spec.x_min * std::pow(1.0 - u, -inv_k);
    const bool negative = (rng.next_u64() >> 63) != 0;
    v = negative ? -magnitude : magnitude;
  }
  return x;
}

std::vector<double> gen_condvol(const GeneratorSpec& spec, Rng& rng, double gamma) {
  if (!(spec.omega > 0.0)) throw Error(ErrorKind::invalid_spec, "condvol needs omega > 0");
  if (spec.a < 0.0 || spec.b < 0.0 || gamma < 0.0) {
    throw Error(ErrorKind::invalid_spec, "condvol coefficients must be non-negative");
  }
  const double persistence = spec.a + spec.b + 0.5 * gamma;
  if (!(persistence < 1.0)) {
    throw Error(ErrorKind::invalid_spec, "condvol needs a + b + gamma/2 < 1 for stationarity");
  }
  std::vector<double> x(spec.length);
  double s2 = spec.omega / (1.0 - persistence);  // unconditional variance
  double last = 0.0;
  for (std::size_t t = 0; t < kCondvolBurnIn + spec.length; ++t) {
    if (t > 0) {
      s2 = spec.omega + spec.a * last * last + spec.b * s2 +
           (last < 0.0 ? gamma * last * last : 0.0);
    }
    last = std::sqrt(s2) * rng.normal();
    if (t >= kCondvolBurnIn) x[t - kCondvolBurnIn] = last;
  }
  return x;
}

}  // namespace

const char* to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::iid_gaussian: return "iid-gaussian";
    case GeneratorKind::ar1: return "ar1";
    case GeneratorKind::pareto_tail: return "pareto-tail";
    case GeneratorKind::sym_condvol: return "sym-condvol";
    case GeneratorKind::asym_condvol: return "asym-condvol";
  }
  return "unknown";
}

GeneratorKind generator_kind_from_string(const std::string& name) {
  if (name == "iid-gaussian") return GeneratorKind::iid_gaussian;
  if (name == "ar1") return GeneratorKind::ar1;
  if (name == "pareto-tail") return GeneratorKind::pareto_tail;
  if (name == "sym-condvol") return GeneratorKind::sym_condvol;
  if (name == "asym-condvol") return GeneratorKind::asym_condvol;
  throw Error(ErrorKind::invalid_spec, "unknown generator '" + name + "'");
}

ReturnSeries generate(const GeneratorSpec& spec) {
  check_common(spec);
  Rng rng(spec.seed);
  ReturnSeries out;
  out.delta_t = spec.delta_t;
  out.start_time = spec.start_time;
  switch (spec.kind) {
    case GeneratorKind::iid_gaussian:
      out.values = gen_iid_gaussian(spec, rng);
      break;
    case GeneratorKind::ar1:
      out.values = gen_ar1(spec, rng);
      break;
    case GeneratorKind::pareto_tail:
      out.values = gen_pareto_tail(spec, rng);
      break;
    case GeneratorKind::sym_condvol:
      out.values = gen_condvol(spec, rng, 0.0);
      break;
    case GeneratorKind::asym_condvol:
      out.values = gen_condvol(spec, rng, spec.gamma);
      break;
  }
  return out;
}

}  // namespace stylized

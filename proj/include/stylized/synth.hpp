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
#include <string>

#include "stylized/errors.hpp"
#include "stylized/series.hpp"

namespace stylized {

/// Seeded generators of processes with known statistical signatures, used as
/// ground truth by the test suite and exposed through the CLI.
enum class GeneratorKind {
  iid_gaussian,  // z_t ~ N(0, 1)
  ar1,           // x_t = phi x_{t-1} + z_t, started from the stationary law
  pareto_tail,   // |x| = x_min u^{-1/k}, random sign
  sym_condvol,   // s2_t = omega + a x_{t-1}^2 + b s2_{t-1}, x_t = s_t z_t
  asym_condvol,  // adds gamma x_{t-1}^2 [x_{t-1} < 0]: negative shocks raise
                 // volatility, inducing the leverage effect
};

const char* to_string(GeneratorKind kind);
GeneratorKind generator_kind_from_string(const std::string& name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::iid_gaussian;
  std::size_t length = 0;
  std::uint64_t seed = 1;

  double phi = 0.5;    // ar1, |phi| < 1

  double k = 3.0;      // pareto_tail CCDF exponent, > 1
  double x_min = 1.0;  // pareto_tail scale, > 0

  double omega = 1e-5;  // condvol, > 0
  double a = 0.05;      // >= 0
  double b = 0.90;      // >= 0
  double gamma = 0.0;   // >= 0; a + b + gamma/2 < 1 for stationarity

  // Metadata stamped on the emitted ReturnSeries.
  std::int64_t delta_t = 18000;
  std::int64_t start_time = 0;
};

/// Deterministic for a fixed spec: same seed, same bits. Conditional
/// volatility recurrences discard a burn-in of 1000 steps to reach
/// approximate stationarity; the AR(1) start is drawn from the exact
/// stationary distribution instead.
ReturnSeries generate(const GeneratorSpec& spec);

}  // namespace stylized

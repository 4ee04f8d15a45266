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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace stylized {

// Every randomized computation in this project draws from this one generator
// so that a (seed, stream) pair reproduces bit-identical results everywhere:
//
//   engine      std::mt19937_64 (fully specified by the C++ standard)
//   uniform     (x >> 11) * 2^-53, giving u in [0, 1)
//   normal      Box-Muller, z = sqrt(-2 ln(1-u1)) * cos(2 pi u2); exactly two
//               engine draws per variate, no caching of the sine branch
//   bounded int rejection sampling on the top of the 64-bit range
//   shuffle     Fisher-Yates from the back, one bounded draw per position
//
// std::uniform_*_distribution and std::shuffle are implementation-defined and
// are deliberately not used.

/// splitmix64 finalizer; used to turn (base seed, stream index) pairs into
/// well separated engine seeds.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent substream `index` of a master seed. Substreams are what keep
  /// shuffle ensembles and per-window detections order-independent.
  static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
    return Rng(mix_seed(master_seed, index));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal variate; consumes exactly two engine draws.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log1p(-u1));
    return radius * std::cos(2.0 * M_PI * u2);
  }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stylized

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

#include <string>
#include <vector>

namespace stylized {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 success, 2 input error, 4 configuration error,
// 3 computation error (a degenerate or too-short series, for example).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitComputation = 3;
inline constexpr int kExitConfig = 4;

/// Entry point behind the `stylized` binary; exposed so tests can drive the
/// CLI in-process. argv[0] is the program name.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace stylized

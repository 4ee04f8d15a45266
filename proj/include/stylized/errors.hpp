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

#include <stdexcept>
#include <string>

namespace stylized {

/// Failure categories used across the library. The CLI maps these onto
/// process exit codes (input data 2, computation 3, configuration 4).
enum class ErrorKind {
  empty_input,
  invalid_price,
  degenerate_series,
  insufficient_tail,
  insufficient_data,
  invalid_spec,
  input_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, long line = -1);

  ErrorKind kind() const { return kind_; }

  /// 1-based line number of the offending input row, or -1 when the error
  /// is not tied to a file location.
  long line() const { return line_; }

 private:
  ErrorKind kind_;
  long line_;
};

}  // namespace stylized

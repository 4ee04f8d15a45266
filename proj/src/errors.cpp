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

#include "stylized/errors.hpp"

namespace stylized {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::empty_input: return "EmptyInput";
    case ErrorKind::invalid_price: return "InvalidPrice";
    case ErrorKind::degenerate_series: return "DegenerateSeries";
    case ErrorKind::insufficient_tail: return "InsufficientTail";
    case ErrorKind::insufficient_data: return "InsufficientData";
    case ErrorKind::invalid_spec: return "InvalidSpec";
    case ErrorKind::input_error: return "InputError";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message, long line)
    : std::runtime_error(line >= 0 ? message + " (line " + std::to_string(line) + ")" : message),
      kind_(kind),
      line_(line) {}

}  // namespace stylized

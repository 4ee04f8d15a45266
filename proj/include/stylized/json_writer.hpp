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
#include <string_view>
#include <vector>

namespace stylized {

/// Serializes a double with 17 significant digits, the smallest count that
/// round-trips every IEEE-754 double, so repeated runs emit byte-identical
/// files. Non-finite values become null.
std::string json_double(double value);

/// Streaming JSON writer with a fixed field order and stable float
/// formatting. All JSON artifacts go through this so output is reproducible
/// byte for byte.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(std::string_view name);

  void value(double v);
  void value(std::int64_t v);
  void value(std::uint64_t v);  // also covers std::size_t
  void value(int v) { value(static_cast<std::int64_t>(v)); }
  void value(bool v);
  void value(std::string_view v);
  void value(const char* v) { value(std::string_view(v)); }
  void null();

  template <typename T>
  void kv(std::string_view name, const T& v) {
    key(name);
    value(v);
  }

  /// Finished document followed by a trailing newline.
  std::string str() const;

 private:
  void comma_if_needed();
  void newline_indent();
  void value_escaped(std::string_view v);

  std::string out_;
  std::vector<bool> has_items_;  // per open scope
  bool pending_key_ = false;
};

}  // namespace stylized

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

#include "stylized/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace stylized {

std::string json_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void JsonWriter::comma_if_needed() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!has_items_.empty()) {
    if (has_items_.back()) out_ += ',';
    has_items_.back() = true;
    newline_indent();
  }
}

void JsonWriter::newline_indent() {
  out_ += '\n';
  out_.append(2 * has_items_.size(), ' ');
}

void JsonWriter::begin_object() {
  comma_if_needed();
  out_ += '{';
  has_items_.push_back(false);
}

void JsonWriter::end_object() {
  const bool had_items = has_items_.back();
  has_items_.pop_back();
  if (had_items) newline_indent();
  out_ += '}';
}

void JsonWriter::begin_array() {
  comma_if_needed();
  out_ += '[';
  has_items_.push_back(false);
}

void JsonWriter::end_array() {
  const bool had_items = has_items_.back();
  has_items_.pop_back();
  if (had_items) newline_indent();
  out_ += ']';
}

void JsonWriter::key(std::string_view name) {
  comma_if_needed();
  value_escaped(name);
  out_ += ": ";
  pending_key_ = true;
}

void JsonWriter::value(double v) {
  comma_if_needed();
  out_ += json_double(v);
}

void JsonWriter::value(std::int64_t v) {
  comma_if_needed();
  out_ += std::to_string(v);
}

void JsonWriter::value(std::uint64_t v) {
  comma_if_needed();
  out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
  comma_if_needed();
  out_ += v ? "true" : "false";
}

void JsonWriter::value(std::string_view v) {
  comma_if_needed();
  value_escaped(v);
}

void JsonWriter::null() {
  comma_if_needed();
  out_ += "null";
}

void JsonWriter::value_escaped(std::string_view v) {
  out_ += '"';
  for (char c : v) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\r': out_ += "\\r"; break;
      case '\t': out_ += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;
        }
    }
  }
  out_ += '"';
}

std::string JsonWriter::str() const { return out_ + "\n"; }

}  // namespace stylized

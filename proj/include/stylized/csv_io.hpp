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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stylized/dependence.hpp"
#include "stylized/leverage.hpp"
#include "stylized/rolling.hpp"
#include "stylized/series.hpp"
#include "stylized/tail.hpp"

namespace stylized {

// Input formats. Tick files are `unix_timestamp,price[,volume]`, price files
// `timestamp,price`, return files `timestamp,return`; a header row is
// optional everywhere. Timestamps are integer epoch seconds or ISO-8601
// (`YYYY-MM-DD[ T]HH:MM:SS[Z]`, date-only allowed); outputs always use epoch
// seconds. Parse failures raise input_error with the 1-based line number.

/// Epoch seconds from an integer or ISO-8601 token.
std::int64_t parse_timestamp(const std::string& token, long line = -1);

TickSeries read_ticks(std::istream& in, const std::string& source_label);
TickSeries read_ticks_file(const std::string& path);

std::vector<PricePoint> read_prices(std::istream& in);
std::vector<PricePoint> read_prices_file(const std::string& path);

ReturnSeries read_returns(std::istream& in);
ReturnSeries read_returns_file(const std::string& path);

/// Two-column `timestamp,label` file; the label is everything after the
/// first comma.
std::vector<EventMarker> read_event_markers(std::istream& in);
std::vector<EventMarker> read_event_markers_file(const std::string& path);

// Output. Floats are written with 17 significant digits so identical runs
// produce identical bytes.

void write_prices_csv(std::ostream& out, std::span<const PricePoint> prices);
void write_returns_csv(std::ostream& out, const ReturnSeries& returns);
void write_ccdf_csv(std::ostream& out, const EmpiricalCcdf& dist);
void write_correlogram_csv(std::ostream& out, const CorrelogramBundle& correlogram);
void write_leverage_csv(std::ostream& out, const LeverageProfile& profile);
void write_windows_csv(std::ostream& out, std::span<const WindowReport> reports);

}  // namespace stylized

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

#include "stylized/csv_io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "stylized/json_writer.hpp"

namespace stylized {
namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(strip(line.substr(start)));
      return fields;
    }
    fields.push_back(strip(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double parse_double(const std::string& token, const char* what, long line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE) {
    throw Error(ErrorKind::input_error, std::string("cannot parse ") + what + " '" + token + "'",
                line);
  }
  return v;
}

bool is_integer_token(const std::string& token) {
  if (token.empty()) return false;
  std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (i == token.size()) return false;
  for (; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  }
  return true;
}

/// True for rows like "timestamp,price": skipped as an optional header.
bool looks_like_header(const std::vector<std::string>& fields) {
  if (fields.empty() || fields[0].empty()) return false;
  const char c = fields[0][0];
  return !(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+');
}

/// Reads rows of `min_fields..max_fields` columns, skipping blank lines,
/// comment lines starting with '#', and one optional header row.
template <typename RowFn>
void for_each_row(std::istream& in, std::size_t min_fields, std::size_t max_fields, RowFn fn) {
  std::string line;
  long line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = strip(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    std::vector<std::string> fields = split_csv(stripped);
    if (!seen_data && looks_like_header(fields)) {
      seen_data = true;
      continue;
    }
    seen_data = true;
    if (fields.size() < min_fields || fields.size() > max_fields) {
      throw Error(ErrorKind::input_error,
                  "expected " + std::to_string(min_fields) +
                      (max_fields > min_fields ? ".." + std::to_string(max_fields) : "") +
                      " columns, got " + std::to_string(fields.size()),
                  line_no);
    }
    fn(fields, line_no);
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::input_error, "cannot open '" + path + "'");
  return in;
}

}  // namespace

std::int64_t parse_timestamp(const std::string& token, long line) {
  if (is_integer_token(token)) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(token.c_str(), &end, 10);
    if (errno == ERANGE) {
      throw Error(ErrorKind::input_error, "timestamp out of range '" + token + "'", line);
    }
    return static_cast<std::int64_t>(v);
  }

  // ISO-8601: YYYY-MM-DD[ T]HH:MM:SS[Z], time of day optional.
  std::tm tm = {};
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  char sep = '\0';
  int consumed = -1;
  std::sscanf(token.c_str(), "%4d-%2d-%2d%n", &year, &month, &day, &consumed);
  bool ok = consumed > 0;
  if (ok && token[static_cast<std::size_t>(consumed)] != '\0') {
    const char* rest = token.c_str() + consumed;
    int time_consumed = -1;
    std::sscanf(rest, "%c%2d:%2d:%2d%n", &sep, &hour, &minute, &second, &time_consumed);
    ok = time_consumed > 0 && (sep == ' ' || sep == 'T');
    if (ok) {
      const char* tail = rest + time_consumed;
      ok = tail[0] == '\0' || (tail[0] == 'Z' && tail[1] == '\0');
    }
  }
  if (!ok) {
    throw Error(ErrorKind::input_error, "cannot parse timestamp '" + token + "'", line);
  }
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60) {
    throw Error(ErrorKind::input_error, "timestamp out of range '" + token + "'", line);
  }
  tm.tm_year = year - 1900;
  tm.tm_mon = month - 1;
  tm.tm_mday = day;
  tm.tm_hour = hour;
  tm.tm_min = minute;
  tm.tm_sec = second;
  const time_t t = timegm(&tm);
  if (t == static_cast<time_t>(-1)) {
    throw Error(ErrorKind::input_error, "timestamp out of range '" + token + "'", line);
  }
  return static_cast<std::int64_t>(t);
}

TickSeries read_ticks(std::istream& in, const std::string& source_label) {
  std::vector<Tick> rows;
  for_each_row(in, 2, 3, [&](const std::vector<std::string>& fields, long line_no) {
    Tick tick;
    tick.timestamp = parse_timestamp(fields[0], line_no);
    tick.price = parse_double(fields[1], "price", line_no);
    if (!(tick.price > 0.0)) {
      throw Error(ErrorKind::invalid_price, "price must be strictly positive, got '" + fields[1] + "'",
                  line_no);
    }
    if (fields.size() == 3 && !fields[2].empty()) {
      tick.volume = parse_double(fields[2], "volume", line_no);
    }
    rows.push_back(tick);
  });
  return make_tick_series(std::move(rows), source_label);
}

TickSeries read_ticks_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_ticks(in, path);
}

std::vector<PricePoint> read_prices(std::istream& in) {
  std::vector<PricePoint> points;
  for_each_row(in, 2, 2, [&](const std::vector<std::string>& fields, long line_no) {
    PricePoint p;
    p.timestamp = parse_timestamp(fields[0], line_no);
    p.price = parse_double(fields[1], "price", line_no);
    if (!(p.price > 0.0)) {
      throw Error(ErrorKind::invalid_price, "price must be strictly positive, got '" + fields[1] + "'",
                  line_no);
    }
    points.push_back(p);
  });
  if (points.empty()) throw Error(ErrorKind::empty_input, "price input has no data rows");
  return points;
}

std::vector<PricePoint> read_prices_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_prices(in);
}

ReturnSeries read_returns(std::istream& in) {
  ReturnSeries out;
  std::vector<std::int64_t> times;
  for_each_row(in, 2, 2, [&](const std::vector<std::string>& fields, long line_no) {
    times.push_back(parse_timestamp(fields[0], line_no));
    out.values.push_back(parse_double(fields[1], "return", line_no));
  });
  if (out.values.empty()) throw Error(ErrorKind::empty_input, "return input has no data rows");
  out.start_time = times.front();
  out.delta_t = times.size() > 1 ? times[1] - times[0] : 0;
  if (times.size() > 1 && out.delta_t <= 0) {
    throw Error(ErrorKind::input_error, "return timestamps must be strictly increasing");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] - times[i - 1] != out.delta_t) {
      throw Error(ErrorKind::input_error, "return timestamps are not on a regular grid",
                  static_cast<long>(i + 1));
    }
  }
  return out;
}

ReturnSeries read_returns_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_returns(in);
}

std::vector<EventMarker> read_event_markers(std::istream& in) {
  std::vector<EventMarker> markers;
  std::string line;
  long line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = strip(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t comma = stripped.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::input_error, "expected 'timestamp,label'", line_no);
    }
    const std::string time_token = strip(stripped.substr(0, comma));
    if (!seen_data && !time_token.empty() &&
        !(std::isdigit(static_cast<unsigned char>(time_token[0])) || time_token[0] == '-' ||
          time_token[0] == '+')) {
      seen_data = true;
      continue;
    }
    seen_data = true;
    EventMarker marker;
    marker.timestamp = parse_timestamp(time_token, line_no);
    marker.label = strip(stripped.substr(comma + 1));
    markers.push_back(std::move(marker));
  }
  return markers;
}

std::vector<EventMarker> read_event_markers_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_event_markers(in);
}

void write_prices_csv(std::ostream& out, std::span<const PricePoint> prices) {
  out << "timestamp,price\n";
  for (const PricePoint& p : prices) {
    out << p.timestamp << ',' << json_double(p.price) << '\n';
  }
}

void write_returns_csv(std::ostream& out, const ReturnSeries& returns) {
  out << "timestamp,return\n";
  std::int64_t t = returns.start_time;
  for (double r : returns.values) {
    out << t << ',' << json_double(r) << '\n';
    t += returns.delta_t;
  }
}

void write_ccdf_csv(std::ostream& out, const EmpiricalCcdf& dist) {
  out << "value,ccdf\n";
  for (std::size_t i = 0; i < dist.sorted_values.size(); ++i) {
    out << json_double(dist.sorted_values[i]) << ',' << json_double(dist.ccdf[i]) << '\n';
  }
}

void write_correlogram_csv(std::ostream& out, const CorrelogramBundle& correlogram) {
  out << "lag,value";
  const bool bands = !correlogram.band_low.empty();
  const bool p_values = !correlogram.p_values.empty();
  if (bands) out << ",band_low,band_high";
  if (p_values) out << ",p_value";
  out << '\n';
  for (std::size_t i = 0; i < correlogram.lags.size(); ++i) {
    out << correlogram.lags[i] << ',' << json_double(correlogram.values[i]);
    if (bands) {
      out << ',' << json_double(correlogram.band_low[i]) << ','
          << json_double(correlogram.band_high[i]);
    }
    if (p_values) out << ',' << json_double(correlogram.p_values[i]);
    out << '\n';
  }
}

void write_leverage_csv(std::ostream& out, const LeverageProfile& profile) {
  out << "lag,L,L_cum\n";
  for (std::size_t i = 0; i < profile.lags.size(); ++i) {
    const int tau = profile.lags[i];
    out << tau << ',' << json_double(profile.L[i]) << ',';
    if (tau >= 0 && static_cast<std::size_t>(tau) < profile.L_cum.size()) {
      out << json_double(profile.L_cum[static_cast<std::size_t>(tau)]);
    }
    out << '\n';
  }
}

void write_windows_csv(std::ostream& out, std::span<const WindowReport> reports) {
  out << "start_time,std,skew,kurt,beta1,beta2,tau0,flags\n";
  for (const WindowReport& r : reports) {
    out << r.start_time << ',' << json_double(r.moments.std_dev) << ','
        << json_double(r.moments.skewness) << ',' << json_double(r.moments.kurtosis) << ',';
    if (r.beta_alpha1) out << json_double(r.beta_alpha1->beta);
    out << ',';
    if (r.beta_alpha2) out << json_double(r.beta_alpha2->beta);
    out << ',' << r.tau0.tau0 << ',';
    std::string flags;
    const auto add = [&flags](const std::string& token) {
      if (!flags.empty()) flags += ';';
      flags += token;
    };
    if (r.beta1_status != BetaStatus::ok) add(std::string("beta1-") + to_string(r.beta1_status));
    if (r.beta2_status != BetaStatus::ok) add(std::string("beta2-") + to_string(r.beta2_status));
    if (!r.tau0.present) add(std::string("tau0-") + to_string(r.tau0.reason));
    if (flags.empty()) flags = "ok";
    out << flags << '\n';
  }
}

}  // namespace stylized

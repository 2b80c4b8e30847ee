// Copyright 2026 The decolab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// CSV and JSON serialisation of sweep records and critical points.
//
// CSV layout: `# key=value` metadata lines, one column-header row, then data
// rows. Numbers use the shortest round-trip form, capped at 12 significant
// digits, with `.` as decimal separator and `\n` line endings.

#ifndef DECOLAB_IO_HPP
#define DECOLAB_IO_HPP

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "decolab/channels.hpp"
#include "decolab/sweep.hpp"

namespace decolab::io {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSignificantDigits = 12;

enum class OutputFormat { Csv, Json };

inline std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string shortest(buf, res.ptr);
  std::size_t digits = 0;
  bool in_exponent = false;
  bool leading = true;
  for (char c : shortest) {
    if (c == 'e' || c == 'E') in_exponent = true;
    if (in_exponent || c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++digits;
  }
  if (digits <= kSignificantDigits) return shortest;
  res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                      kSignificantDigits);
  return std::string(buf, res.ptr);
}

/// x rounded to the precision it is printed with.
inline double rounded(double x) {
  const std::string s = format_number(x);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

inline std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct RunMetadata {
  std::string command;
  std::string channel = "none";
  std::vector<double> r_values;
  bool r_values_default = false;
  Grid grid;
  std::string grid_variable = "p";
  double eps_zero = tol::kEpsZero;
  bool both_qubits = true;
  std::optional<std::string> timestamp;  // nullopt with --no-timestamp

  std::vector<std::pair<std::string, std::string>> entries() const {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("tool_version", kToolVersion);
    kv.emplace_back("command", command);
    kv.emplace_back("channel", channel);
    if (!r_values.empty()) {
      std::string rs;
      for (std::size_t i = 0; i < r_values.size(); ++i) {
        rs += (i ? ";" : "") + format_number(r_values[i]);
      }
      kv.emplace_back("r_values", rs);
      kv.emplace_back("r_values_source", r_values_default ? "default" : "user");
    }
    kv.emplace_back("grid_variable", grid_variable);
    kv.emplace_back("grid_start", format_number(grid.start));
    kv.emplace_back("grid_stop", format_number(grid.stop));
    kv.emplace_back("grid_count", std::to_string(grid.count));
    kv.emplace_back("eps_zero", format_number(eps_zero));
    kv.emplace_back("both_qubits", both_qubits ? "true" : "false");
    if (timestamp) kv.emplace_back("timestamp", *timestamp);
    return kv;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["channel"] = channel;
    if (!r_values.empty()) {
      auto rs = nlohmann::ordered_json::array();
      for (double r : r_values) rs.push_back(rounded(r));
      j["r_values"] = rs;
      j["r_values_source"] = r_values_default ? "default" : "user";
    }
    j["grid"] = {{"variable", grid_variable},
                 {"start", rounded(grid.start)},
                 {"stop", rounded(grid.stop)},
                 {"count", grid.count}};
    j["eps_zero"] = eps_zero;
    j["both_qubits"] = both_qubits;
    if (timestamp) j["timestamp"] = *timestamp;
    return j;
  }
};

inline void write_metadata_csv(std::ostream& os, const RunMetadata& meta) {
  for (const auto& [k, v] : meta.entries()) os << "# " << k << '=' << v << '\n';
}

/// `r,reqc,concurrence` rows of an r-sweep.
inline std::string r_sweep_csv(const std::vector<SweepRecord>& records,
                               const RunMetadata& meta) {
  std::ostringstream os;
  write_metadata_csv(os, meta);
  os << "r,reqc,concurrence\n";
  for (const auto& rec : records) {
    os << format_number(rec.r) << ',' << format_number(rec.reqc) << ','
       << format_number(rec.concurrence) << '\n';
  }
  return os.str();
}

/// `channel,r,p,reqc,concurrence` rows of a channel sweep.
inline std::string p_sweep_csv(const std::vector<SweepRecord>& records,
                               const RunMetadata& meta) {
  std::ostringstream os;
  write_metadata_csv(os, meta);
  os << "channel,r,p,reqc,concurrence\n";
  for (const auto& rec : records) {
    os << meta.channel << ',' << format_number(rec.r) << ',' << format_number(rec.p)
       << ',' << format_number(rec.reqc) << ',' << format_number(rec.concurrence)
       << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json records_json(const std::vector<SweepRecord>& records,
                                           bool with_p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json row;
    row["r"] = rounded(rec.r);
    if (with_p) row["p"] = rounded(rec.p);
    row["reqc"] = rounded(rec.reqc);
    row["concurrence"] = rounded(rec.concurrence);
    arr.push_back(std::move(row));
  }
  return arr;
}

inline nlohmann::ordered_json critical_json(const CriticalPoints& cp, Axis axis) {
  nlohmann::ordered_json j;
  j["crossover_axis"] = axis == Axis::R ? "r" : "p";
  auto cross = nlohmann::ordered_json::array();
  for (double x : cp.crossovers) cross.push_back(rounded(x));
  j["crossovers"] = cross;

  auto deaths = nlohmann::ordered_json::array();
  for (const auto& d : cp.death_intervals) {
    deaths.push_back({{"start", rounded(d.start)},
                      {"end", rounded(d.end)},
                      {"interior", d.interior}});
  }
  j["death_intervals"] = deaths;

  auto zeros = nlohmann::ordered_json::array();
  for (const auto& z : cp.reqc_zeros) {
    zeros.push_back({{"location", rounded(z.location)},
                     {"start", rounded(z.start)},
                     {"end", rounded(z.end)},
                     {"interior", z.interior}});
  }
  j["reqc_zeros"] = zeros;

  auto plateaus = nlohmann::ordered_json::array();
  for (const auto& pl : cp.plateaus) {
    plateaus.push_back({{"start", rounded(pl.start)},
                        {"end", rounded(pl.end)},
                        {"level", rounded(pl.level)},
                        {"nonzero", pl.level > tol::kEpsZero}});
  }
  j["frozen_plateaus"] = plateaus;
  return j;
}

/// `kind,location,start,end` rows; one per landmark.
inline std::string critical_csv(const CriticalPoints& cp, const RunMetadata& meta) {
  std::ostringstream os;
  write_metadata_csv(os, meta);
  os << "kind,location,start,end\n";
  for (double x : cp.crossovers) {
    os << "crossover," << format_number(x) << ",,\n";
  }
  for (const auto& d : cp.death_intervals) {
    os << "death_interval,," << format_number(d.start) << ','
       << format_number(d.end) << '\n';
  }
  for (const auto& z : cp.reqc_zeros) {
    os << "reqc_zero," << format_number(z.location) << ',' << format_number(z.start)
       << ',' << format_number(z.end) << '\n';
  }
  return os.str();
}

/// `{ "metadata": ..., "records": ..., "critical_points": ... }`
inline std::string document_json(const RunMetadata& meta,
                                 nlohmann::ordered_json records,
                                 nlohmann::ordered_json critical) {
  nlohmann::ordered_json doc;
  doc["metadata"] = meta.to_json();
  doc["records"] = std::move(records);
  doc["critical_points"] = std::move(critical);
  return doc.dump(2) + "\n";
}

}  // namespace decolab::io

#endif  // DECOLAB_IO_HPP

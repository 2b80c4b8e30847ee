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

// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error.

#ifndef DECOLAB_CLI_HPP
#define DECOLAB_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "decolab/io.hpp"
#include "decolab/sweep.hpp"
#include "decolab/verify.hpp"

namespace decolab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommonOptions {
  std::size_t count = 201;
  std::string out;
  std::string format = "csv";
  bool no_timestamp = false;
};

namespace detail {

inline io::OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return io::OutputFormat::Csv;
  if (s == "json") return io::OutputFormat::Json;
  throw ConfigError("unknown format '" + s + "' (expected csv or json)");
}

inline ChannelKind parse_channel(const std::string& id) {
  if (auto kind = parse_channel_kind(id)) return *kind;
  throw ConfigError("unknown channel '" + id +
                    "' (expected bit-flip, bit-phase-flip, phase-flip, "
                    "phase-damping or amplitude-damping)");
}

// Writes to `path`, or to `out` when the path is empty. False if the file
// cannot be written.
inline bool emit(const std::string& text, const std::string& path,
                 std::ostream& out) {
  if (path.empty()) {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << text;
  f.close();
  return !f.fail();
}

inline io::RunMetadata metadata(const std::string& command,
                                const CommonOptions& opts) {
  io::RunMetadata meta;
  meta.command = command;
  meta.grid = Grid{0.0, 1.0, opts.count};
  if (!opts.no_timestamp) meta.timestamp = io::utc_timestamp();
  return meta;
}

inline int finish(const std::string& text, const CommonOptions& opts,
                  std::ostream& out, std::ostream& err) {
  if (!emit(text, opts.out, out)) {
    err << "decolab: cannot write '" << opts.out << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace detail

/// Noiseless Werner r-sweep: columns r,reqc,concurrence.
inline int cmd_fig1(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  const auto format = detail::parse_format(opts.format);
  const Grid grid{0.0, 1.0, opts.count};
  grid.validate();
  auto meta = detail::metadata("fig1", opts);
  meta.grid_variable = "r";

  const auto records = sweep_r(grid);
  if (format == io::OutputFormat::Csv) {
    return detail::finish(io::r_sweep_csv(records, meta), opts, out, err);
  }
  CriticalPoints cp;
  cp.crossovers = find_crossover(records);
  return detail::finish(io::document_json(meta, io::records_json(records, false),
                                          io::critical_json(cp, Axis::R)),
                        opts, out, err);
}

/// Channel sweep over p for each r: columns channel,r,p,reqc,concurrence.
inline int cmd_sweep(const std::string& channel, std::vector<double> r_values,
                     const CommonOptions& opts, std::ostream& out,
                     std::ostream& err) {
  const auto format = detail::parse_format(opts.format);
  SweepConfig cfg;
  cfg.channel = detail::parse_channel(channel);
  const bool defaulted = r_values.empty();
  if (!defaulted) cfg.r_values = std::move(r_values);
  cfg.p_grid = Grid{0.0, 1.0, opts.count};
  cfg.validate();

  auto meta = detail::metadata("sweep", opts);
  meta.channel = channel;
  meta.r_values = cfg.r_values;
  meta.r_values_default = defaulted;

  const auto records = sweep_p(cfg);
  if (format == io::OutputFormat::Csv) {
    return detail::finish(io::p_sweep_csv(records, meta), opts, out, err);
  }
  nlohmann::ordered_json critical = nlohmann::ordered_json::object();
  const std::size_t per_r = cfg.p_grid.count;
  for (std::size_t k = 0; k < cfg.r_values.size(); ++k) {
    const double r = cfg.r_values[k];
    const std::vector<SweepRecord> block(records.begin() + k * per_r,
                                         records.begin() + (k + 1) * per_r);
    auto eval = [&](double p) { return evaluate_point(*cfg.channel, r, p); };
    CriticalPoints cp;
    cp.crossovers = find_crossover(block, Axis::P, eval);
    cp.death_intervals = find_death_intervals(block, DeadZoneThreshold{}, eval);
    cp.reqc_zeros = find_reqc_zeros(block, DeadZoneThreshold{}, eval);
    cp.plateaus = find_plateaus(block);
    critical[io::format_number(r)] = io::critical_json(cp, Axis::P);
  }
  return detail::finish(
      io::document_json(meta, io::records_json(records, true), critical), opts,
      out, err);
}

/// Critical points for one r under a channel, or the Werner crossover when
/// channel is "none". JSON unless --format csv.
inline int cmd_critical(const std::string& channel, std::optional<double> r,
                        const CommonOptions& opts, std::ostream& out,
                        std::ostream& err) {
  const auto format = detail::parse_format(opts.format);
  const Grid grid{0.0, 1.0, opts.count};
  grid.validate();
  auto meta = detail::metadata("critical", opts);
  meta.channel = channel;

  CriticalPoints cp;
  Axis axis = Axis::P;
  if (channel == "none") {
    axis = Axis::R;
    meta.grid_variable = "r";
    cp = analyze_werner(grid);
  } else {
    const ChannelKind kind = detail::parse_channel(channel);
    if (!r) throw ConfigError("--r is required when a channel is given");
    if (!(*r >= 0.0 && *r <= 1.0)) throw ConfigError("--r must lie in [0, 1]");
    meta.r_values = {*r};
    cp = analyze_channel(kind, *r, grid);
  }

  if (format == io::OutputFormat::Csv) {
    return detail::finish(io::critical_csv(cp, meta), opts, out, err);
  }
  return detail::finish(io::document_json(meta, nlohmann::ordered_json::array(),
                                          io::critical_json(cp, axis)),
                        opts, out, err);
}

/// Runs every property group and prints a table. 1 if anything failed.
inline int cmd_verify(std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const auto results = verify::run_all(seed);
  bool all = true;
  out << "decolab verify (seed " << seed << ")\n";
  out << std::left << std::setw(6) << "result" << std::setw(28) << "property"
      << std::setw(16) << "max deviation" << "tolerance\n";
  for (const auto& res : results) {
    out << std::left << std::setw(6) << (res.passed ? "PASS" : "FAIL")
        << std::setw(28) << res.name << std::setw(16)
        << io::format_number(res.max_deviation)
        << io::format_number(res.tolerance);
    if (!res.detail.empty()) out << "  " << res.detail;
    out << '\n';
    if (!res.passed) {
      all = false;
      err << "decolab: property '" << res.name << "' failed: " << res.detail << '\n';
    }
  }
  out << results.size() << " property groups, "
      << (all ? "all passed" : "FAILURES present") << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Coherence and entanglement of Werner states under local noise",
               "decolab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", io::kToolVersion);

  CommonOptions fig1_opts, sweep_opts, critical_opts;
  auto add_common = [](CLI::App* sub, CommonOptions& o) {
    sub->add_option("--count", o.count, "Grid points in [0, 1]")
        ->capture_default_str();
    sub->add_option("--out", o.out, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "csv or json")->capture_default_str();
    sub->add_flag("--no-timestamp", o.no_timestamp,
                  "Omit the timestamp so identical runs give identical bytes");
  };

  auto* fig1 = app.add_subcommand("fig1", "REQC and concurrence versus r");
  add_common(fig1, fig1_opts);

  std::string sweep_channel;
  std::vector<double> sweep_r_values;
  auto* sweep = app.add_subcommand("sweep", "REQC and concurrence versus p");
  sweep->add_option("--channel", sweep_channel, "Channel identifier")->required();
  sweep->add_option("--r", sweep_r_values, "Werner parameters (comma separated)")
      ->delimiter(',');
  add_common(sweep, sweep_opts);

  std::string critical_channel = "none";
  std::optional<double> critical_r;
  critical_opts.format = "json";
  auto* critical = app.add_subcommand("critical", "Crossovers, sudden death, REQC zeros");
  critical->add_option("--channel", critical_channel, "Channel identifier or none")
      ->capture_default_str();
  critical->add_option("--r", critical_r, "Werner parameter");
  add_common(critical, critical_opts);

  std::uint64_t seed = 20240101;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in property suite");
  verify_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << io::kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "decolab: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*fig1) return cmd_fig1(fig1_opts, out, err);
    if (*sweep) return cmd_sweep(sweep_channel, sweep_r_values, sweep_opts, out, err);
    if (*critical) return cmd_critical(critical_channel, critical_r, critical_opts, out, err);
    if (*verify_cmd) return cmd_verify(seed, out, err);
  } catch (const ConfigError& e) {
    err << "decolab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "decolab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace decolab::cli

#endif  // DECOLAB_CLI_HPP

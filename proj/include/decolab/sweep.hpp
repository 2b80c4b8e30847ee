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

#ifndef DECOLAB_SWEEP_HPP
#define DECOLAB_SWEEP_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "decolab/channels.hpp"
#include "decolab/errors.hpp"
#include "decolab/measures.hpp"
#include "decolab/states.hpp"
#include "decolab/tolerances.hpp"

namespace decolab {

/// Evenly spaced samples of [start, stop], endpoints included.
struct Grid {
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 201;

  void validate() const {
    if (count < 2) throw ConfigError("grid count must be at least 2");
    if (!(start < stop)) throw ConfigError("grid start must be below stop");
    if (!(start >= 0.0 && stop <= 1.0)) {
      throw ConfigError("grid must lie within [0, 1]");
    }
  }

  double at(std::size_t i) const {
    if (i + 1 == count) return stop;
    return start + (stop - start) * static_cast<double>(i) /
                       static_cast<double>(count - 1);
  }

  std::vector<double> points() const {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = at(i);
    return out;
  }
};

/// r values used for channel sweeps when none are given. The source
/// figures do not list their legends; these four cover the entangled range.
inline const std::vector<double>& default_r_values() {
  static const std::vector<double> values = {0.4, 0.6, 0.8, 1.0};
  return values;
}

struct SweepConfig {
  // nullopt selects the noiseless r-sweep.
  std::optional<ChannelKind> channel;
  std::vector<double> r_values = default_r_values();
  Grid p_grid;
  bool both_qubits = true;

  void validate() const {
    p_grid.validate();
    if (r_values.empty()) throw ConfigError("no r values given");
    for (double r : r_values) {
      if (!(r >= 0.0 && r <= 1.0)) {
        throw ConfigError("r=" + std::to_string(r) + " outside [0, 1]");
      }
    }
    if (channel && (*channel == ChannelKind::Identity ||
                    *channel == ChannelKind::Custom)) {
      throw ConfigError("sweeps need one of the five physical channels");
    }
  }
};

struct SweepRecord {
  double r = 0.0;
  double p = 0.0;
  double reqc = 0.0;
  double concurrence = 0.0;
};

struct DeadZoneThreshold {
  double eps_zero = tol::kEpsZero;

  DeadZoneThreshold() = default;
  explicit DeadZoneThreshold(double eps) : eps_zero(eps) {
    if (!(eps > 0.0)) throw ConfigError("zero threshold must be positive");
  }
};

/// [start, end] in the swept variable. `interior` is false when the run
/// touches the first or last grid point.
struct Interval {
  double start = 0.0;
  double end = 0.0;
  bool interior = true;
};

/// A run where coherence vanishes. `location` is the midpoint for interior
/// runs and the boundary point for runs touching a grid end.
struct ZeroRegion {
  double start = 0.0;
  double end = 0.0;
  double location = 0.0;
  bool interior = true;
};

/// Stretch of the grid where |d reqc / dp| stays below tol::kPlateauSlope.
struct Plateau {
  double start = 0.0;
  double end = 0.0;
  double level = 0.0;
};

struct CriticalPoints {
  std::vector<double> crossovers;
  std::vector<Interval> death_intervals;
  std::vector<ZeroRegion> reqc_zeros;
  std::vector<Plateau> plateaus;  // informational only
};

// ---------------------------------------------------------------------------
// Point evaluation

inline SweepRecord measure(double r, double p, const DensityMatrix& rho) {
  SweepRecord rec{r, p, reqc(rho), concurrence_general(rho)};
  rec.reqc = std::clamp(rec.reqc, 0.0, 2.0);
  return rec;
}

/// Werner state at r with no noise (p = 0).
inline SweepRecord evaluate_werner(double r) {
  return measure(r, 0.0, werner(r));
}

inline SweepRecord evaluate_point(ChannelKind kind, double r, double p,
                                  bool both_qubits = true) {
  const auto ch = make_channel(kind, p);
  const auto rho = both_qubits ? apply_local(ch, ch, werner(r))
                               : apply_local(ch, identity_channel(), werner(r));
  return measure(r, p, rho);
}

// ---------------------------------------------------------------------------
// Parallel evaluation

/// Worker count: DECOLAB_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline std::size_t sweep_threads() {
  if (const char* env = std::getenv("DECOLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(i) for i in [0, n), evaluated on up to `threads` workers.
/// Results land at fixed indices, so the output matches sequential order.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn, std::size_t threads = sweep_threads())
    -> std::vector<decltype(fn(std::size_t{0}))> {
  std::vector<decltype(fn(std::size_t{0}))> out(n);
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += threads) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

/// Noiseless Werner family over an r grid.
inline std::vector<SweepRecord> sweep_r(const Grid& grid) {
  grid.validate();
  return parallel_map(grid.count,
                      [&](std::size_t i) { return evaluate_werner(grid.at(i)); });
}

/// Channel sweep, rows ordered by r then p.
inline std::vector<SweepRecord> sweep_p(const SweepConfig& config) {
  config.validate();
  if (!config.channel) throw ConfigError("sweep_p needs a channel");
  const ChannelKind kind = *config.channel;
  const std::size_t per_r = config.p_grid.count;
  return parallel_map(config.r_values.size() * per_r, [&](std::size_t i) {
    return evaluate_point(kind, config.r_values[i / per_r],
                          config.p_grid.at(i % per_r), config.both_qubits);
  });
}

// ---------------------------------------------------------------------------
// Critical points

namespace detail {

/// Root of f in [lo, hi] given opposite (strict) signs at the ends.
template <class F>
double bisect(F&& f, double lo, double hi, double f_tol) {
  double flo = f(lo);
  for (int it = 0; it < tol::kBisectionMaxIter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (std::abs(fmid) <= f_tol || hi - lo <= tol::kBisectionInterval) {
      return mid;
    }
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Maximal index runs [first, last] where pred holds.
template <class Pred>
std::vector<std::pair<std::size_t, std::size_t>> runs(std::size_t n, Pred pred) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = 0;
  while (i < n) {
    if (!pred(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && pred(j + 1)) ++j;
    out.emplace_back(i, j);
    i = j + 1;
  }
  return out;
}

// Refined [start, end] of a run of `below`-points for g = value - eps.
template <class G>
std::pair<double, double> refine_run(const std::vector<double>& xs,
                                     std::size_t first, std::size_t last,
                                     G&& g) {
  double start = xs[first];
  double end = xs[last];
  if (first > 0) start = bisect(g, xs[first - 1], xs[first], 0.0);
  if (last + 1 < xs.size()) end = bisect(g, xs[last], xs[last + 1], 0.0);
  return {start, end};
}

}  // namespace detail

enum class Axis { R, P };

/// Interior sign changes of (reqc - concurrence), each refined by bisection
/// on `eval` to |reqc - concurrence| <= 1e-8. Grid points where the
/// difference is within eps_zero are ties and never start a crossing, which
/// keeps the endpoint equalities of the Werner family out of the result.
template <class Eval>
std::vector<double> find_crossover(const std::vector<SweepRecord>& records,
                                   Axis axis, Eval&& eval,
                                   DeadZoneThreshold th = {}) {
  auto x = [&](const SweepRecord& rec) { return axis == Axis::R ? rec.r : rec.p; };
  auto diff = [&](double v) {
    const SweepRecord rec = eval(v);
    return rec.reqc - rec.concurrence;
  };

  std::vector<double> out;
  std::optional<std::size_t> prev;  // last grid index with a definite sign
  for (std::size_t i = 0; i < records.size(); ++i) {
    const double d = records[i].reqc - records[i].concurrence;
    if (std::abs(d) <= th.eps_zero) continue;
    if (prev) {
      const double dp = records[*prev].reqc - records[*prev].concurrence;
      if ((dp > 0.0) != (d > 0.0)) {
        out.push_back(detail::bisect(diff, x(records[*prev]), x(records[i]), 1e-8));
      }
    }
    prev = i;
  }
  return out;
}

/// Crossovers of an r-sweep produced by sweep_r.
inline std::vector<double> find_crossover(const std::vector<SweepRecord>& records) {
  return find_crossover(records, Axis::R,
                        [](double r) { return evaluate_werner(r); });
}

/// Maximal runs with concurrence <= eps_zero, edges refined against the
/// continuous concurrence(p). A run made of a lone first or last grid point
/// is an endpoint touch, not a death interval, and is skipped.
template <class Eval>
std::vector<Interval> find_death_intervals(const std::vector<SweepRecord>& records,
                                           DeadZoneThreshold th, Eval&& eval) {
  std::vector<double> ps;
  ps.reserve(records.size());
  for (const auto& rec : records) ps.push_back(rec.p);
  auto g = [&](double p) { return eval(p).concurrence - th.eps_zero; };

  std::vector<Interval> out;
  const std::size_t n = records.size();
  for (auto [first, last] : detail::runs(
           n, [&](std::size_t i) { return records[i].concurrence <= th.eps_zero; })) {
    if (first == last && (first == 0 || last + 1 == n)) continue;
    const auto [start, end] = detail::refine_run(ps, first, last, g);
    out.push_back({start, end, first > 0 && last + 1 < n});
  }
  return out;
}

/// Maximal runs with reqc <= eps_zero, edges refined against reqc(p).
template <class Eval>
std::vector<ZeroRegion> find_reqc_zeros(const std::vector<SweepRecord>& records,
                                        DeadZoneThreshold th, Eval&& eval) {
  std::vector<double> ps;
  ps.reserve(records.size());
  for (const auto& rec : records) ps.push_back(rec.p);
  auto g = [&](double p) { return eval(p).reqc - th.eps_zero; };

  std::vector<ZeroRegion> out;
  const std::size_t n = records.size();
  for (auto [first, last] :
       detail::runs(n, [&](std::size_t i) { return records[i].reqc <= th.eps_zero; })) {
    const auto [start, end] = detail::refine_run(ps, first, last, g);
    ZeroRegion z{start, end, 0.5 * (start + end), first > 0 && last + 1 < n};
    if (first == 0) z.location = ps.front();
    if (last + 1 == n) z.location = ps.back();
    out.push_back(z);
  }
  return out;
}

/// Runs of at least two consecutive grid segments with |d reqc/dp| below
/// tol::kPlateauSlope (forward differences on the records).
inline std::vector<Plateau> find_plateaus(const std::vector<SweepRecord>& records) {
  std::vector<Plateau> out;
  if (records.size() < 3) return out;
  auto flat = [&](std::size_t i) {
    const double dp = records[i + 1].p - records[i].p;
    return std::abs((records[i + 1].reqc - records[i].reqc) / dp) < tol::kPlateauSlope;
  };
  const double range = records.back().p - records.front().p;
  for (auto [first, last] : detail::runs(records.size() - 1, flat)) {
    if (records[last + 1].p - records[first].p < tol::kPlateauMinSpan * range) continue;
    double level = 0.0;
    for (std::size_t i = first; i <= last + 1; ++i) level += records[i].reqc;
    level /= static_cast<double>(last - first + 2);
    out.push_back({records[first].p, records[last + 1].p, level});
  }
  return out;
}

/// Every landmark for one r under one channel.
inline CriticalPoints analyze_channel(ChannelKind kind, double r, const Grid& grid,
                                      bool both_qubits = true,
                                      DeadZoneThreshold th = {}) {
  SweepConfig cfg;
  cfg.channel = kind;
  cfg.r_values = {r};
  cfg.p_grid = grid;
  cfg.both_qubits = both_qubits;
  const auto records = sweep_p(cfg);
  auto eval = [&](double p) { return evaluate_point(kind, r, p, both_qubits); };

  CriticalPoints cp;
  cp.crossovers = find_crossover(records, Axis::P, eval, th);
  cp.death_intervals = find_death_intervals(records, th, eval);
  cp.reqc_zeros = find_reqc_zeros(records, th, eval);
  cp.plateaus = find_plateaus(records);
  return cp;
}

/// Landmarks of the noiseless Werner family (crossovers in r only).
inline CriticalPoints analyze_werner(const Grid& grid) {
  CriticalPoints cp;
  cp.crossovers = find_crossover(sweep_r(grid));
  return cp;
}

}  // namespace decolab

#endif  // DECOLAB_SWEEP_HPP

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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion holds. Tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "decolab/channels.hpp"
#include "decolab/measures.hpp"
#include "decolab/random.hpp"
#include "decolab/sweep.hpp"

#ifndef DECOLAB_CLI_PATH
#error "DECOLAB_CLI_PATH must name the decolab executable"
#endif

namespace fs = std::filesystem;
using namespace decolab;

namespace {

constexpr double kTight = 1e-9;
constexpr double kMachineZero = 1e-12;
constexpr double kPositive = 1e-6;
const Grid kP201{0.0, 1.0, 201};
const Grid kP101{0.0, 1.0, 101};
const std::vector<double> kFigureR = {0.4, 0.6, 0.8, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<SweepRecord> records_for(ChannelKind kind, double r, const Grid& grid) {
  SweepConfig cfg;
  cfg.channel = kind;
  cfg.r_values = {r};
  cfg.p_grid = grid;
  return sweep_p(cfg);
}

Outcome fig1_endpoints_and_threshold() {
  Outcome o;
  const auto w0 = evaluate_werner(0.0), w1 = evaluate_werner(1.0);
  o.check(std::abs(w0.reqc) <= kTight && std::abs(w0.concurrence) <= kTight,
          "r=0 reqc " + num(w0.reqc) + " conc " + num(w0.concurrence));
  o.check(std::abs(w1.reqc - 1.0) <= kTight && std::abs(w1.concurrence - 1.0) <= kTight,
          "r=1 reqc " + num(w1.reqc) + " conc " + num(w1.concurrence));
  const double third = 1.0 / 3.0;
  for (int i = 0; i <= 1000; ++i) {
    const double r = third * i / 1000.0;
    const double c = concurrence_general(werner(r));
    o.check(c <= kMachineZero, "concurrence " + num(c) + " at separable r=" + num(r));
  }
  for (int i = 0; i <= 1000; ++i) {
    const double lo = third + 1e-6;
    const double r = lo + (1.0 - lo) * i / 1000.0;
    const double c = concurrence_general(werner(r));
    o.check(c > 0.0, "concurrence zero at entangled r=" + num(r));
  }
  if (o.pass) o.detail = "C(1/3 + 1e-6) = " + num(concurrence_general(werner(third + 1e-6)));
  return o;
}

Outcome fig1_crossover() {
  Outcome o;
  const auto cross = find_crossover(sweep_r(kP201));
  o.check(cross.size() == 1, std::to_string(cross.size()) + " interior crossovers");
  if (!cross.empty()) {
    o.check(cross[0] >= 0.50 && cross[0] <= 0.54, "r* = " + num(cross[0]));
    if (o.pass) o.detail = "r* = " + num(cross[0]);
  }
  return o;
}

Outcome werner_concurrence_closed_form() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double r = i / 100.0;
    const double d = std::abs(concurrence_general(werner(r)) - std::max(0.0, (3 * r - 1) / 2));
    worst = std::max(worst, d);
  }
  o.check(worst <= kTight, "max deviation " + num(worst));
  if (o.pass) o.detail = "max deviation " + num(worst);
  return o;
}

Outcome general_equals_x_form() {
  Outcome o;
  double worst = 0.0;
  for (auto kind : kPhysicalChannels)
    for (double r : kFigureR)
      for (double p : kP101.points()) {
        const auto rho = apply_both(make_channel(kind, p), werner(r));
        worst = std::max(worst, std::abs(concurrence_general(rho) - concurrence_x(rho)));
      }
  o.check(worst <= kTight, "max |general - x| " + num(worst));
  if (o.pass) o.detail = "max |general - x| " + num(worst) + " over 2020 states";
  return o;
}

Outcome cptp_and_validity() {
  Outcome o;
  for (auto kind : kPhysicalChannels)
    for (double p : kP101.points()) {
      const auto ch = make_channel(kind, p);
      o.check(is_trace_preserving(ch, 1e-12),
              std::string(to_string(kind)) + " incomplete at p=" + num(p));
      for (double r : {0.0, 0.4, 0.6, 0.8, 1.0}) {
        try {
          const auto rho = apply_both(ch, werner(r));
          o.check(diagnose_state(rho.matrix()).ok(), "invalid evolved state");
        } catch (const Error& e) {
          o.fail(std::string(to_string(kind)) + " r=" + num(r) + ": " + e.what());
        }
      }
    }
  if (o.pass) o.detail = "5 channels x 101 p x 5 r";
  return o;
}

Outcome bit_flip_sudden_death() {
  Outcome o;
  const auto recs = records_for(ChannelKind::BitFlip, 1.0, kP201);
  auto eval = [](double p) { return evaluate_point(ChannelKind::BitFlip, 1.0, p); };
  const auto deaths = find_death_intervals(recs, DeadZoneThreshold{}, eval);
  std::vector<Interval> interior;
  for (const auto& d : deaths)
    if (d.interior) interior.push_back(d);
  o.check(interior.size() == 1 && deaths.size() == 1,
          std::to_string(interior.size()) + " interior death intervals");
  if (!o.pass) return o;
  const Interval death = interior[0];

  bool revived = false;
  for (const auto& rec : recs) revived |= rec.p > death.end && rec.concurrence > kPositive;
  o.check(revived, "no revival after p=" + num(death.end));

  // Brute-force scan of 10^5 points.
  const std::size_t n = 100000;
  const double spacing = 1.0 / (n - 1);
  double first = -1.0, last = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = i * spacing;
    if (eval(p).concurrence <= tol::kEpsZero) {
      if (first < 0.0) first = p;
      last = p;
    }
  }
  o.check(first >= 0.0, "brute-force scan found no zero");
  o.check(std::abs(death.start - first) <= spacing,
          "start " + num(death.start) + " vs scan " + num(first));
  o.check(std::abs(death.end - last) <= spacing,
          "end " + num(death.end) + " vs scan " + num(last));
  if (o.pass) {
    o.detail = "death [" + num(death.start) + ", " + num(death.end) + "], scan [" +
               num(first) + ", " + num(last) + "]";
  }
  return o;
}

Outcome phase_flip_disappearance() {
  Outcome o;
  auto at = [](double p) { return evaluate_point(ChannelKind::PhaseFlip, 0.8, p); };
  const double mid = at(0.5).reqc;
  o.check(mid <= kTight, "reqc(0.5) = " + num(mid));
  for (double p : {0.3, 0.7}) {
    o.check(at(p).reqc > kPositive, "reqc(" + num(p) + ") = " + num(at(p).reqc));
  }
  const double back = std::abs(at(1.0).reqc - at(0.0).reqc);
  o.check(back <= kTight, "|reqc(1) - reqc(0)| = " + num(back));
  const auto recs = records_for(ChannelKind::PhaseFlip, 0.8, kP201);
  double worst = 0.0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    worst = std::max(worst, std::abs(recs[i].reqc - recs[recs.size() - 1 - i].reqc));
  }
  o.check(worst <= 1e-10, "symmetry deviation " + num(worst));
  if (o.pass) o.detail = "reqc(0.5) = " + num(mid) + ", symmetry " + num(worst);
  return o;
}

// Shared body of the two damping criteria.
void damping_persistence(ChannelKind kind, Outcome& o) {
  const auto name = std::string(to_string(kind));
  const auto r08 = records_for(kind, 0.8, kP201);
  const auto r10 = records_for(kind, 1.0, kP201);
  for (std::size_t i = 0; i + 1 < r08.size(); ++i) {
    o.check(r08[i].reqc > 0.0, name + " r=0.8 reqc zero at p=" + num(r08[i].p));
    o.check(r10[i].concurrence > 0.0, name + " r=1 concurrence zero at p=" + num(r10[i].p));
  }
  o.check(r08.back().reqc <= kTight, name + " r=0.8 reqc(1) = " + num(r08.back().reqc));
  o.check(r10.back().concurrence <= kTight,
          name + " r=1 concurrence(1) = " + num(r10.back().concurrence));
  bool died = false;
  double min_c = 1.0;
  for (const auto& rec : r08) {
    if (rec.p < 1.0 - 1e-3) {
      died |= rec.concurrence <= kTight;
      min_c = std::min(min_c, rec.concurrence);
    }
  }
  o.check(died, name + " r=0.8 concurrence never reaches zero before p=0.999 (min " +
                    num(min_c) + ")");
}

Outcome phase_damping_persistence() {
  Outcome o;
  damping_persistence(ChannelKind::PhaseDamping, o);
  if (o.pass) o.detail = "reqc persists to p=1, r=0.8 concurrence dies at p=0.875";
  return o;
}

Outcome amplitude_damping_persistence() {
  Outcome o;
  damping_persistence(ChannelKind::AmplitudeDamping, o);
  const auto end = evaluate_point(ChannelKind::AmplitudeDamping, 1.0, 1.0);
  o.check(std::abs(end.reqc) <= kTight && std::abs(end.concurrence) <= kTight,
          "r=1, p=1: reqc " + num(end.reqc) + " conc " + num(end.concurrence));
  if (o.pass) o.detail = "reqc persists to p=1, r=1 ends in |00>";
  return o;
}

Outcome variational_sanity() {
  Outcome o;
  std::mt19937_64 rng(20240101);
  std::vector<DensityMatrix> states;
  for (int n = 0; n < 20; ++n) states.push_back(random_density_matrix(rng));
  for (int i = 0; i <= 100; ++i) states.push_back(werner(i / 100.0));
  double worst_eq = 0.0, worst_under = 0.0;
  for (std::size_t n = 0; n < states.size(); ++n) {
    const auto c = variational_reqc_check(states[n], 1000, 1000 + n);
    worst_eq = std::max(worst_eq, std::abs(c.at_dephased - c.closed_form));
    worst_under = std::max(worst_under, c.closed_form - c.min_sampled);
  }
  o.check(worst_eq <= kTight, "S(rho||rho_d) vs closed form " + num(worst_eq));
  o.check(worst_under <= kTight, "sampled sigma undercuts by " + num(worst_under));
  if (o.pass) {
    o.detail = "max |S(rho||rho_d) - closed| " + num(worst_eq) + ", max undercut " +
               num(std::max(0.0, worst_under));
  }
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() /
                       ("decolab_acceptance_" + std::to_string(std::chrono::steady_clock::now()
                                                                   .time_since_epoch()
                                                                   .count()));
  fs::create_directories(dir);
  const fs::path a = dir / "a.csv", b = dir / "b.csv";
  auto invoke = [](const fs::path& out) {
    const std::string cmd = std::string("\"") + DECOLAB_CLI_PATH +
                            "\" sweep --channel bit-flip --count 201 --no-timestamp --out \"" +
                            out.string() + "\"";
    return std::system(cmd.c_str());
  };
  o.check(invoke(a) == 0 && invoke(b) == 0, "sweep invocation failed");
  if (o.pass) {
    auto slurp = [](const fs::path& p) {
      std::ifstream f(p, std::ios::binary);
      std::ostringstream ss;
      ss << f.rdbuf();
      return ss.str();
    };
    const auto sa = slurp(a), sb = slurp(b);
    o.check(!sa.empty() && sa == sb, "outputs differ");
    if (o.pass) o.detail = std::to_string(sa.size()) + " identical bytes";
  }
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC-01", "Werner endpoints and r = 1/3 threshold", fig1_endpoints_and_threshold},
      {"AC-02", "Werner crossover r* in [0.50, 0.54]", fig1_crossover},
      {"AC-03", "Werner concurrence closed form", werner_concurrence_closed_form},
      {"AC-04", "general concurrence equals X-state form", general_equals_x_form},
      {"AC-05", "trace preservation and evolved-state validity", cptp_and_validity},
      {"AC-06", "bit-flip sudden death and revival", bit_flip_sudden_death},
      {"AC-07", "phase-flip coherence disappearance/reappearance", phase_flip_disappearance},
      {"AC-08", "phase-damping persistence", phase_damping_persistence},
      {"AC-09", "amplitude-damping persistence", amplitude_damping_persistence},
      {"AC-10", "variational coherence bound", variational_sanity},
      {"AC-11", "byte-identical sweep output", cli_determinism},
  };

  std::size_t passed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    passed += o.pass;
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str());
  }
  std::printf("%zu/%zu acceptance criteria passed\n", passed, criteria.size());
  return passed == criteria.size() ? EXIT_SUCCESS : EXIT_FAILURE;
}

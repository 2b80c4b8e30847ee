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

// Self-check suite behind `decolab verify`. Each property group reports the
// worst deviation it saw against its tolerance.

#ifndef DECOLAB_VERIFY_HPP
#define DECOLAB_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "decolab/channels.hpp"
#include "decolab/measures.hpp"
#include "decolab/random.hpp"
#include "decolab/states.hpp"
#include "decolab/sweep.hpp"

namespace decolab::verify {

struct PropertyResult {
  std::string name;
  bool passed = true;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

namespace detail {

inline const std::vector<double>& channel_r_values() { return default_r_values(); }

struct Tracker {
  PropertyResult result;

  Tracker(std::string name, double tolerance) {
    result.name = std::move(name);
    result.tolerance = tolerance;
  }
  void deviation(double d, const std::string& where) {
    if (d > result.max_deviation) result.max_deviation = d;
    if (!(d <= result.tolerance) && result.passed) {
      result.passed = false;
      result.detail = "first violation at " + where;
    }
  }
  void require(bool ok, const std::string& where) {
    if (!ok && result.passed) {
      result.passed = false;
      result.detail = "failed at " + where;
    }
  }
};

inline std::string at(ChannelKind k, double r, double p) {
  return std::string(to_string(k)) + " r=" + std::to_string(r) +
         " p=" + std::to_string(p);
}

}  // namespace detail

inline PropertyResult check_eigensolver(std::mt19937_64& rng) {
  detail::Tracker t("eigensolver", 1e-9);
  for (int n = 0; n < 100; ++n) {
    const auto rho = random_density_matrix(rng);
    const auto eig = hermitian_eigensystem(rho.matrix());
    t.deviation(std::abs(HermitianSpectrum<4>{eig.values}.sum() -
                         rho.matrix().trace().real()),
                "trace sum, sample " + std::to_string(n));
    t.deviation(max_abs_diff(eig.reconstruct(), rho.matrix()),
                "reconstruction, sample " + std::to_string(n));
    const Matrix2 u = random_unitary2(rng);
    const Matrix4 uu = kron(u, u);
    const auto rotated =
        hermitian_eigenvalues((uu * rho.matrix() * uu.adjoint()).hermitian_part());
    for (std::size_t k = 0; k < 4; ++k) {
      t.deviation(std::abs(rotated.eigenvalues[k] - eig.values[k]),
                  "unitary invariance, sample " + std::to_string(n));
    }
  }
  return t.result;
}

inline PropertyResult check_werner_family() {
  detail::Tracker t("werner-family", 1e-12);
  for (int i = 0; i <= 1000; ++i) {
    const double r = i / 1000.0;
    const auto rho = werner(r);
    t.require(diagnose_state(rho.matrix()).ok(), "validity r=" + std::to_string(r));
    t.deviation(max_abs_diff(swap_qubits(rho).matrix(), rho.matrix()),
                "swap symmetry r=" + std::to_string(r));
    if (i < 1000) {
      const double a = r;
      const double b = (i + 1) / 1000.0;
      const Matrix4 mid = 0.5 * (werner(a).matrix() + werner(b).matrix());
      t.deviation(max_abs_diff(werner(0.5 * (a + b)).matrix(), mid),
                  "affinity r=" + std::to_string(r));
    }
  }
  return t.result;
}

inline PropertyResult check_completeness() {
  detail::Tracker t("channel-completeness", tol::kCompleteness);
  for (auto kind : kPhysicalChannels) {
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      const auto ch = make_channel(kind, p);
      t.deviation(max_abs_diff(ch.completeness_sum(), Matrix2::identity()),
                  detail::at(kind, 0.0, p));
    }
  }
  return t.result;
}

inline PropertyResult check_evolved_states() {
  detail::Tracker t("evolved-state-validity", tol::kTrace);
  for (auto kind : kPhysicalChannels) {
    for (double r : detail::channel_r_values()) {
      for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        const auto ch = make_channel(kind, p);
        Matrix4 out;
        for (const auto& ka : ch.operators)
          for (const auto& kb : ch.operators) {
            const Matrix4 k = kron(ka, kb);
            out = out + k * werner(r).matrix() * k.adjoint();
          }
        const auto d = diagnose_state(out);
        t.deviation(d.trace_defect, detail::at(kind, r, p));
        t.require(d.ok(), detail::at(kind, r, p) + " (" + d.describe() + ")");
        t.require(is_x_state(DensityMatrix::unchecked(out)),
                  detail::at(kind, r, p) + " (X form lost)");
      }
    }
  }
  return t.result;
}

inline PropertyResult check_unitality() {
  detail::Tracker t("flip-unitality", 1e-12);
  const auto mixed = maximally_mixed();
  for (auto kind : {ChannelKind::BitFlip, ChannelKind::BitPhaseFlip,
                    ChannelKind::PhaseFlip}) {
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      t.deviation(max_abs_diff(apply_both(make_channel(kind, p), mixed).matrix(),
                               mixed.matrix()),
                  detail::at(kind, 0.0, p));
    }
  }
  const double ad_shift = max_abs_diff(
      apply_both(amplitude_damping(0.5), mixed).matrix(), mixed.matrix());
  t.require(ad_shift > 1e-3, "amplitude damping unexpectedly unital at p=0.5");
  return t.result;
}

inline PropertyResult check_concurrence_forms() {
  detail::Tracker t("concurrence-general-vs-x", 1e-9);
  for (auto kind : kPhysicalChannels) {
    for (double r : detail::channel_r_values()) {
      for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        const auto rho = apply_both(make_channel(kind, p), werner(r));
        t.deviation(std::abs(concurrence_general(rho) - concurrence_x(rho)),
                    detail::at(kind, r, p));
      }
    }
  }
  for (int i = 0; i <= 100; ++i) {
    const double r = i / 100.0;
    t.deviation(std::abs(concurrence_general(werner(r)) -
                         std::max(0.0, (3.0 * r - 1.0) / 2.0)),
                "werner r=" + std::to_string(r));
  }
  return t.result;
}

inline PropertyResult check_variational_bound(std::uint64_t seed) {
  detail::Tracker t("variational-bound", 1e-9);
  std::mt19937_64 rng(seed);
  std::vector<DensityMatrix> states;
  for (int n = 0; n < 20; ++n) states.push_back(random_density_matrix(rng));
  for (int i = 0; i <= 100; ++i) states.push_back(werner(i / 100.0));
  for (std::size_t n = 0; n < states.size(); ++n) {
    const auto check = variational_reqc_check(states[n], 1000, seed + n);
    const std::string where = "state " + std::to_string(n);
    t.deviation(std::abs(check.at_dephased - check.closed_form), where);
    t.deviation(std::max(0.0, check.closed_form - check.min_sampled), where);
  }
  return t.result;
}

inline PropertyResult check_phase_flip_symmetry() {
  detail::Tracker t("phase-flip-symmetry", 1e-10);
  for (double r : detail::channel_r_values()) {
    for (int i = 0; i <= 200; ++i) {
      const double p = i / 200.0;
      const auto a = evaluate_point(ChannelKind::PhaseFlip, r, p);
      const auto b = evaluate_point(ChannelKind::PhaseFlip, r, 1.0 - p);
      t.deviation(std::abs(a.reqc - b.reqc),
                  detail::at(ChannelKind::PhaseFlip, r, p) + " reqc");
      t.deviation(std::abs(a.concurrence - b.concurrence),
                  detail::at(ChannelKind::PhaseFlip, r, p) + " concurrence");
    }
  }
  return t.result;
}

inline PropertyResult check_local_invariance(std::mt19937_64& rng) {
  detail::Tracker t("local-unitary-invariance", 1e-8);
  for (int n = 0; n < 100; ++n) {
    const auto rho = random_density_matrix(rng);
    const Matrix4 uv = kron(random_unitary2(rng), random_unitary2(rng));
    const DensityMatrix rotated((uv * rho.matrix() * uv.adjoint()).hermitian_part());
    t.deviation(std::abs(concurrence_general(rotated) - concurrence_general(rho)),
                "concurrence, sample " + std::to_string(n));
    const Matrix4 phases = random_phase_unitary(rng);
    const DensityMatrix dephased_frame(
        (phases * rho.matrix() * phases.adjoint()).hermitian_part());
    t.deviation(std::abs(reqc(dephased_frame) - reqc(rho)),
                "reqc, sample " + std::to_string(n));
  }
  return t.result;
}

inline std::vector<PropertyResult> run_all(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyResult> out;
  out.push_back(check_eigensolver(rng));
  out.push_back(check_werner_family());
  out.push_back(check_completeness());
  out.push_back(check_evolved_states());
  out.push_back(check_unitality());
  out.push_back(check_concurrence_forms());
  out.push_back(check_variational_bound(seed));
  out.push_back(check_phase_flip_symmetry());
  out.push_back(check_local_invariance(rng));
  return out;
}

}  // namespace decolab::verify

#endif  // DECOLAB_VERIFY_HPP

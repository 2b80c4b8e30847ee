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

#ifndef DECOLAB_CHANNELS_HPP
#define DECOLAB_CHANNELS_HPP

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decolab/errors.hpp"
#include "decolab/matrix.hpp"
#include "decolab/states.hpp"
#include "decolab/tolerances.hpp"

namespace decolab {

enum class ChannelKind {
  BitFlip,
  BitPhaseFlip,
  PhaseFlip,
  PhaseDamping,
  AmplitudeDamping,
  Identity,
  Custom,
};

/// The five physical channels, in their canonical order.
inline constexpr std::array<ChannelKind, 5> kPhysicalChannels = {
    ChannelKind::BitFlip, ChannelKind::BitPhaseFlip, ChannelKind::PhaseFlip,
    ChannelKind::PhaseDamping, ChannelKind::AmplitudeDamping};

/// Stable lowercase identifier used on the command line and in CSV metadata.
inline std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bit-flip";
    case ChannelKind::BitPhaseFlip: return "bit-phase-flip";
    case ChannelKind::PhaseFlip: return "phase-flip";
    case ChannelKind::PhaseDamping: return "phase-damping";
    case ChannelKind::AmplitudeDamping: return "amplitude-damping";
    case ChannelKind::Identity: return "identity";
    case ChannelKind::Custom: return "custom";
  }
  return "custom";
}

/// Parses one of the five physical channel identifiers.
inline std::optional<ChannelKind> parse_channel_kind(std::string_view id) {
  for (auto kind : kPhysicalChannels) {
    if (to_string(kind) == id) return kind;
  }
  return std::nullopt;
}

/// Error probability p in [0, 1].
class DecoherenceParameter {
 public:
  explicit DecoherenceParameter(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("decoherence parameter p=" + std::to_string(p) +
                        " outside [0, 1]");
    }
  }
  double value() const { return p_; }

 private:
  double p_;
};

/// Single-qubit channel in operator-sum form. Completeness is not enforced
/// at construction; see is_trace_preserving.
struct KrausChannel {
  ChannelKind kind = ChannelKind::Custom;
  double p = 0.0;
  std::vector<Matrix2> operators;

  /// sum_k K_k^dagger K_k
  Matrix2 completeness_sum() const {
    Matrix2 sum;
    for (const auto& k : operators) sum = sum + k.adjoint() * k;
    return sum;
  }

  /// Applies the channel to a single-qubit operator.
  Matrix2 apply(const Matrix2& rho) const {
    Matrix2 out;
    for (const auto& k : operators) out = out + k * rho * k.adjoint();
    return out;
  }
};

inline bool is_trace_preserving(const KrausChannel& ch,
                                double tol = tol::kCompleteness) {
  if (ch.operators.empty()) return false;
  return max_abs_diff(ch.completeness_sum(), Matrix2::identity()) <= tol;
}

/// K0 = sqrt(1-p) I, K1 = sqrt(p) sigma_axis.
inline KrausChannel flip_channel(PauliAxis axis, DecoherenceParameter param) {
  const double p = param.value();
  KrausChannel ch;
  switch (axis) {
    case PauliAxis::X: ch.kind = ChannelKind::BitFlip; break;
    case PauliAxis::Y: ch.kind = ChannelKind::BitPhaseFlip; break;
    case PauliAxis::Z: ch.kind = ChannelKind::PhaseFlip; break;
  }
  ch.p = p;
  ch.operators = {std::sqrt(1.0 - p) * Matrix2::identity(),
                  std::sqrt(p) * pauli(axis)};
  return ch;
}

inline KrausChannel flip_channel(PauliAxis axis, double p) {
  return flip_channel(axis, DecoherenceParameter(p));
}

/// K0 = diag(1, sqrt(1-p)), K1 = diag(0, sqrt(p)). Populations are untouched.
inline KrausChannel phase_damping(DecoherenceParameter param) {
  const double p = param.value();
  return KrausChannel{ChannelKind::PhaseDamping, p,
                      {Matrix2::diagonal({1.0, std::sqrt(1.0 - p)}),
                       Matrix2::diagonal({0.0, std::sqrt(p)})}};
}

inline KrausChannel phase_damping(double p) {
  return phase_damping(DecoherenceParameter(p));
}

/// K0 = diag(1, sqrt(1-p)), K1 = sqrt(p) |0><1|.
inline KrausChannel amplitude_damping(DecoherenceParameter param) {
  const double p = param.value();
  Matrix2 k1;
  k1(0, 1) = std::sqrt(p);
  return KrausChannel{ChannelKind::AmplitudeDamping, p,
                      {Matrix2::diagonal({1.0, std::sqrt(1.0 - p)}), k1}};
}

inline KrausChannel amplitude_damping(double p) {
  return amplitude_damping(DecoherenceParameter(p));
}

inline KrausChannel identity_channel() {
  return KrausChannel{ChannelKind::Identity, 0.0, {Matrix2::identity()}};
}

/// Builds a physical channel from its kind. Identity and Custom are rejected.
inline KrausChannel make_channel(ChannelKind kind, DecoherenceParameter p) {
  switch (kind) {
    case ChannelKind::BitFlip: return flip_channel(PauliAxis::X, p);
    case ChannelKind::BitPhaseFlip: return flip_channel(PauliAxis::Y, p);
    case ChannelKind::PhaseFlip: return flip_channel(PauliAxis::Z, p);
    case ChannelKind::PhaseDamping: return phase_damping(p);
    case ChannelKind::AmplitudeDamping: return amplitude_damping(p);
    case ChannelKind::Identity:
    case ChannelKind::Custom: break;
  }
  throw ConfigError("channel kind '" + std::string(to_string(kind)) +
                    "' has no parameterised Kraus set");
}

inline KrausChannel make_channel(ChannelKind kind, double p) {
  return make_channel(kind, DecoherenceParameter(p));
}

/// rho -> sum_{i,j} (K_i^A (x) K_j^B) rho (K_i^A (x) K_j^B)^dagger.
///
/// No renormalisation is applied. Throws InvalidChannelError when either
/// Kraus set is incomplete.
inline DensityMatrix apply_local(const KrausChannel& chA, const KrausChannel& chB,
                                 const DensityMatrix& rho) {
  if (!is_trace_preserving(chA)) {
    throw InvalidChannelError("channel on qubit A is not trace preserving");
  }
  if (!is_trace_preserving(chB)) {
    throw InvalidChannelError("channel on qubit B is not trace preserving");
  }
  Matrix4 out;
  for (const auto& ka : chA.operators) {
    for (const auto& kb : chB.operators) {
      const Matrix4 k = kron(ka, kb);
      out = out + k * rho.matrix() * k.adjoint();
    }
  }
#if DECOLAB_VALIDATE_EVOLVED
  return DensityMatrix(out);
#else
  return DensityMatrix::unchecked(out);
#endif
}

/// Same channel on both qubits.
inline DensityMatrix apply_both(const KrausChannel& ch, const DensityMatrix& rho) {
  return apply_local(ch, ch, rho);
}

struct DecayModel {
  double gamma = 0.0;
  double t = 0.0;
};

/// p = 1 - exp(-gamma t).
inline DecoherenceParameter time_to_p(const DecayModel& model) {
  if (!(model.gamma >= 0.0) || !(model.t >= 0.0)) {
    throw DomainError("decay rate and time must be non-negative");
  }
  return DecoherenceParameter(-std::expm1(-model.gamma * model.t));
}

}  // namespace decolab

#endif  // DECOLAB_CHANNELS_HPP

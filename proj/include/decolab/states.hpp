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

#ifndef DECOLAB_STATES_HPP
#define DECOLAB_STATES_HPP

#include <cmath>
#include <cstddef>
#include <string>

#include "decolab/eigen.hpp"
#include "decolab/errors.hpp"
#include "decolab/matrix.hpp"
#include "decolab/tolerances.hpp"

// Re-validate states produced by channel evolution. On by default; define
// as 0 to skip the eigen-decomposition in hot sweep loops.
#ifndef DECOLAB_VALIDATE_EVOLVED
#define DECOLAB_VALIDATE_EVOLVED 1
#endif

namespace decolab {

/// Outcome of density-matrix validation. `ok()` iff every check passed.
struct StateDiagnostics {
  bool finite = true;
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;

  bool ok() const {
    return finite && hermiticity_defect <= tol::kHermitian &&
           trace_defect <= tol::kTrace && min_eigenvalue >= -tol::kPsdClamp;
  }
  std::string describe() const {
    if (!finite) return "non-finite entries";
    return "hermiticity defect " + std::to_string(hermiticity_defect) +
           ", trace defect " + std::to_string(trace_defect) +
           ", min eigenvalue " + std::to_string(min_eigenvalue);
  }
};

inline StateDiagnostics diagnose_state(const Matrix4& m) {
  StateDiagnostics d;
  d.finite = m.all_finite();
  if (!d.finite) return d;
  d.hermiticity_defect = m.hermiticity_defect();
  d.trace_defect = std::abs(m.trace() - Complex{1.0, 0.0});
  if (d.hermiticity_defect <= tol::kHermitian) {
    d.min_eigenvalue = hermitian_eigenvalues(m).min();
  }
  return d;
}

/// Two-qubit density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Validating constructor; throws InvalidStateError.
  explicit DensityMatrix(const Matrix4& m) : m_(m) {
    const auto d = diagnose_state(m);
    if (!d.ok()) throw InvalidStateError("invalid density matrix: " + d.describe());
  }

  /// Skips validation. For states that are valid by construction, such as
  /// the image of a valid state under a complete Kraus set.
  static DensityMatrix unchecked(const Matrix4& m) {
    return DensityMatrix(m, Unchecked{});
  }

  const Matrix4& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  struct Unchecked {};
  DensityMatrix(const Matrix4& m, Unchecked) : m_(m) {}

  Matrix4 m_;
};

/// Werner mixing weight r in [0, 1].
class WernerParameter {
 public:
  explicit WernerParameter(double r) : r_(r) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw DomainError("Werner parameter r=" + std::to_string(r) +
                        " outside [0, 1]");
    }
  }
  double value() const { return r_; }

 private:
  double r_;
};

inline DensityMatrix maximally_mixed() {
  return DensityMatrix::unchecked(0.25 * Matrix4::identity());
}

/// |psi-><psi-| with |psi-> = (|01> - |10>)/sqrt(2).
inline DensityMatrix singlet() {
  Matrix4 m;
  m(1, 1) = 0.5;
  m(2, 2) = 0.5;
  m(1, 2) = -0.5;
  m(2, 1) = -0.5;
  return DensityMatrix::unchecked(m);
}

/// r |psi-><psi-| + (1 - r)/4 I, written entrywise so that the endpoints
/// are exact.
inline DensityMatrix werner(WernerParameter param) {
  const double r = param.value();
  const double outer = (1.0 - r) / 4.0;
  const double inner = (1.0 + r) / 4.0;
  Matrix4 m = Matrix4::diagonal({outer, inner, inner, outer});
  m(1, 2) = -r / 2.0;
  m(2, 1) = -r / 2.0;
  return DensityMatrix::unchecked(m);
}

inline DensityMatrix werner(double r) { return werner(WernerParameter(r)); }

/// True iff every entry off the main and anti-diagonal has |entry| <= tol.
inline bool is_x_state(const DensityMatrix& rho, double tol = tol::kXState) {
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(m(i, j)) > tol) return false;
    }
  return true;
}

/// Exchanges qubits A and B (basis permutation |01> <-> |10>).
inline DensityMatrix swap_qubits(const DensityMatrix& rho) {
  constexpr std::size_t perm[4] = {0, 2, 1, 3};
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(perm[i], perm[j]) = rho(i, j);
  return DensityMatrix::unchecked(out);
}

}  // namespace decolab

#endif  // DECOLAB_STATES_HPP

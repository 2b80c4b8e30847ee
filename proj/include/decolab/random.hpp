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

// Random generators for property checks.

#ifndef DECOLAB_RANDOM_HPP
#define DECOLAB_RANDOM_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "decolab/matrix.hpp"
#include "decolab/states.hpp"

namespace decolab {

/// Haar-random SU(2) element times a random global phase.
template <class Rng>
Matrix2 random_unitary2(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  double q[4];
  double norm = 0.0;
  for (double& x : q) {
    x = normal(rng);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  const Complex a{q[0] / norm, q[1] / norm};
  const Complex b{q[2] / norm, q[3] / norm};
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const Complex phase = std::polar(1.0, angle(rng));
  return Matrix2::from_rows({{phase * a, -phase * std::conj(b)},
                             {phase * b, phase * std::conj(a)}});
}

/// diag(e^{i theta_k}) with independent uniform phases.
template <class Rng>
Matrix4 random_phase_unitary(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  Matrix4 u;
  for (std::size_t k = 0; k < 4; ++k) u(k, k) = std::polar(1.0, angle(rng));
  return u;
}

/// G G^dagger / Tr for a complex Ginibre G (full rank almost surely).
template <class Rng>
DensityMatrix random_density_matrix(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix4 g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = Complex{normal(rng), normal(rng)};
  Matrix4 m = (g * g.adjoint()).hermitian_part();
  m = (1.0 / m.trace().real()) * m;
  return DensityMatrix(m);
}

}  // namespace decolab

#endif  // DECOLAB_RANDOM_HPP

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

#ifndef DECOLAB_EIGEN_HPP
#define DECOLAB_EIGEN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>

#include "decolab/errors.hpp"
#include "decolab/matrix.hpp"
#include "decolab/tolerances.hpp"

namespace decolab {

/// Real eigenvalues of a Hermitian matrix, sorted descending.
template <std::size_t N>
struct HermitianSpectrum {
  std::array<double, N> eigenvalues{};

  double sum() const {
    return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
  }
  double min() const { return eigenvalues[N - 1]; }
  double max() const { return eigenvalues[0]; }
};

/// Eigenvalues (descending) and the unitary whose columns are the
/// matching eigenvectors: m = V diag(values) V^dagger.
template <std::size_t N>
struct EigenDecomposition {
  std::array<double, N> values{};
  SquareMatrix<N> vectors;

  SquareMatrix<N> reconstruct() const {
    return vectors * SquareMatrix<N>::diagonal(values) * vectors.adjoint();
  }
};

namespace detail {

template <std::size_t N>
double off_diagonal_norm(const SquareMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Unitary J, equal to the identity outside rows/cols (p, q), such that
// (J^dagger a J)(p, q) = 0. The phase e^{-i phi} turns the pivot block real
// symmetric, then a real Givens rotation annihilates it.
template <std::size_t N>
SquareMatrix<N> jacobi_rotation(const SquareMatrix<N>& a, std::size_t p,
                                std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  auto j = SquareMatrix<N>::identity();
  const Complex conj_phase = std::conj(phase);
  j(p, p) = c;
  j(p, q) = s;
  j(q, p) = -s * conj_phase;
  j(q, q) = c * conj_phase;
  return j;
}

}  // namespace detail

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Throws NotHermitianError when max|m - m^dagger| exceeds tol::kHermitian
/// and ConvergenceError after tol::kJacobiMaxSweeps sweeps.
template <std::size_t N>
EigenDecomposition<N> hermitian_eigensystem(const SquareMatrix<N>& m) {
  if (!m.all_finite()) throw NotFiniteError("matrix has non-finite entries");
  const double defect = m.hermiticity_defect();
  if (defect > tol::kHermitian) {
    throw NotHermitianError("matrix is not Hermitian (defect " +
                            std::to_string(defect) + ")");
  }

  SquareMatrix<N> a = m.hermitian_part();
  auto v = SquareMatrix<N>::identity();
  const double threshold =
      tol::kJacobiOffDiagonal * std::max(1.0, a.frobenius_norm());

  int sweep = 0;
  while (detail::off_diagonal_norm(a) >= threshold) {
    if (sweep++ >= tol::kJacobiMaxSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(tol::kJacobiMaxSweeps) +
                             " sweeps");
    }
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        if (std::abs(a(p, q)) == 0.0) continue;
        const auto j = detail::jacobi_rotation(a, p, q);
        a = j.adjoint() * a * j;
        // Rotation leaves (p, q) at rounding level; pin it.
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * j;
      }
    }
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenDecomposition<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

template <std::size_t N>
HermitianSpectrum<N> hermitian_eigenvalues(const SquareMatrix<N>& m) {
  return HermitianSpectrum<N>{hermitian_eigensystem(m).values};
}

/// Principal square root of a Hermitian positive-semidefinite matrix.
///
/// Eigenvalues in [-tol::kPsdReject, 0) are rounding noise and clamp to 0;
/// anything more negative throws NotPsdError.
template <std::size_t N>
SquareMatrix<N> psd_sqrt(const SquareMatrix<N>& m) {
  const auto eig = hermitian_eigensystem(m);
  std::array<double, N> roots{};
  for (std::size_t k = 0; k < N; ++k) {
    const double lambda = eig.values[k];
    if (lambda < -tol::kPsdReject) {
      throw NotPsdError("matrix has eigenvalue " + std::to_string(lambda));
    }
    roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  const auto s = eig.vectors * SquareMatrix<N>::diagonal(roots) *
                 eig.vectors.adjoint();
  return s.hermitian_part();
}

}  // namespace decolab

#endif  // DECOLAB_EIGEN_HPP

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

#ifndef DECOLAB_MEASURES_HPP
#define DECOLAB_MEASURES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "decolab/eigen.hpp"
#include "decolab/errors.hpp"
#include "decolab/matrix.hpp"
#include "decolab/states.hpp"
#include "decolab/tolerances.hpp"

namespace decolab {

namespace detail {

// Clamps rounding-level negatives to zero; rejects real violations.
inline double clamp_eigenvalue(double lambda) {
  if (lambda < -tol::kPsdReject) {
    throw NotPsdError("eigenvalue " + std::to_string(lambda) +
                      " below -" + std::to_string(tol::kPsdReject));
  }
  return lambda > 0.0 ? lambda : 0.0;
}

// -x log2 x with 0 log 0 = 0.
inline double entropy_term(double x) {
  return x > 0.0 ? -x * std::log2(x) : 0.0;
}

}  // namespace detail

/// Probability vector on the computational basis: a diagonal state.
struct IncoherentState {
  std::array<double, 4> diag{};

  bool is_valid(double tol = 1e-12) const {
    double s = 0.0;
    for (double d : diag) {
      if (d < 0.0) return false;
      s += d;
    }
    return std::abs(s - 1.0) <= tol;
  }
  DensityMatrix to_density_matrix() const {
    return DensityMatrix(Matrix4::diagonal(diag));
  }
};

/// Keeps the diagonal of rho and drops every coherence.
inline DensityMatrix dephase(const DensityMatrix& rho) {
  return DensityMatrix::unchecked(Matrix4::diagonal(rho.matrix().real_diagonal()));
}

/// Shannon entropy in bits of a probability vector.
inline double shannon_entropy(const std::array<double, 4>& probs) {
  double s = 0.0;
  for (double x : probs) s += detail::entropy_term(detail::clamp_eigenvalue(x));
  return s;
}

/// S(rho) = -Tr rho log2 rho, in bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy(hermitian_eigenvalues(rho.matrix()).eigenvalues);
}

/// Quantum relative entropy in bits. `finite` is false (and `value` is
/// +infinity) when supp(rho) is not contained in supp(sigma).
struct RelativeEntropy {
  double value = 0.0;
  bool finite = true;

  static RelativeEntropy infinite() {
    return {std::numeric_limits<double>::infinity(), false};
  }
};

/// S(rho || sigma) for a diagonal sigma: -S(rho) - sum_i rho_ii log2 sigma_i.
inline RelativeEntropy relative_entropy_to_incoherent(
    const DensityMatrix& rho, const std::array<double, 4>& sigma) {
  double cross = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double pi = rho(i, i).real();
    if (pi <= tol::kPsdClamp) continue;
    if (sigma[i] <= 0.0) return RelativeEntropy::infinite();
    cross -= pi * std::log2(sigma[i]);
  }
  return {std::max(0.0, cross - von_neumann_entropy(rho)), true};
}

/// S(rho || sigma) through the eigen-decomposition of sigma; works for any
/// sigma.
inline RelativeEntropy relative_entropy_spectral(const DensityMatrix& rho,
                                                 const DensityMatrix& sigma) {
  const auto eig = hermitian_eigensystem(sigma.matrix());
  double cross = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    // <v_k| rho |v_k>
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        overlap += std::conj(eig.vectors(i, k)) * rho(i, j) * eig.vectors(j, k);
    const double weight = overlap.real();
    const double lambda = detail::clamp_eigenvalue(eig.values[k]);
    if (lambda <= tol::kPsdClamp) {
      if (weight > tol::kPsdClamp) return RelativeEntropy::infinite();
      continue;
    }
    cross -= weight * std::log2(lambda);
  }
  return {std::max(0.0, cross - von_neumann_entropy(rho)), true};
}

inline bool is_diagonal(const Matrix4& m, double tol) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j && std::abs(m(i, j)) > tol) return false;
  return true;
}

/// S(rho || sigma); diagonal sigma takes the closed-form path.
inline RelativeEntropy relative_entropy(const DensityMatrix& rho,
                                        const DensityMatrix& sigma) {
  if (is_diagonal(sigma.matrix(), 0.0)) {
    return relative_entropy_to_incoherent(rho, sigma.matrix().real_diagonal());
  }
  return relative_entropy_spectral(rho, sigma);
}

/// Relative entropy of coherence, S(dephase(rho)) - S(rho), in bits.
inline double reqc(const DensityMatrix& rho) {
  const double value =
      shannon_entropy(rho.matrix().real_diagonal()) - von_neumann_entropy(rho);
  if (value < 0.0 && value >= -tol::kReqcClamp) return 0.0;
  return value;
}

/// Eigenvalues eps_1 >= ... >= eps_4 >= 0 of rho (Y(x)Y) rho* (Y(x)Y).
struct ConcurrenceSpectrum {
  std::array<double, 4> eps{};

  double concurrence() const {
    const double c = std::sqrt(eps[0]) - std::sqrt(eps[1]) -
                     std::sqrt(eps[2]) - std::sqrt(eps[3]);
    return std::clamp(c, 0.0, 1.0);
  }
};

/// The spin-flipped state (Y(x)Y) rho* (Y(x)Y).
inline Matrix4 spin_flip(const DensityMatrix& rho) {
  const Matrix4 yy = kron(pauli(PauliAxis::Y), pauli(PauliAxis::Y));
  return yy * rho.matrix().conj() * yy;
}

/// Spectrum of R, obtained from the Hermitian matrix
/// sqrt(rho) rho~ sqrt(rho), which is similar to R.
inline ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix& rho) {
  const Matrix4 root = psd_sqrt(rho.matrix());
  const Matrix4 m = (root * spin_flip(rho) * root).hermitian_part();
  const auto values = hermitian_eigenvalues(m).eigenvalues;
  ConcurrenceSpectrum spec;
  const double cutoff = tol::kSpectrumRank * std::max(values[0], 0.0);
  for (std::size_t k = 0; k < 4; ++k) {
    const double e = detail::clamp_eigenvalue(values[k]);
    spec.eps[k] = e > cutoff ? e : 0.0;
  }
  return spec;
}

/// Wootters concurrence for an arbitrary two-qubit state.
inline double concurrence_general(const DensityMatrix& rho) {
  return concurrence_spectrum(rho).concurrence();
}

/// Closed-form concurrence of an X state:
/// 2 max{0, |rho_23| - sqrt(rho_11 rho_44), |rho_14| - sqrt(rho_22 rho_33)}
/// (1-based indices). Throws NotXStateError for other states.
inline double concurrence_x(const DensityMatrix& rho) {
  if (!is_x_state(rho, tol::kXState)) {
    throw NotXStateError("state has entries off the X pattern");
  }
  const auto d = rho.matrix().real_diagonal();
  auto geo = [](double a, double b) {
    return std::sqrt(std::max(a, 0.0) * std::max(b, 0.0));
  };
  const double inner = std::abs(rho(1, 2)) - geo(d[0], d[3]);
  const double outer = std::abs(rho(0, 3)) - geo(d[1], d[2]);
  return std::clamp(2.0 * std::max({0.0, inner, outer}), 0.0, 1.0);
}

/// Result of probing the variational definition of coherence by sampling.
struct VariationalCheck {
  double min_sampled = 0.0;   // min over sampled sigma and dephase(rho)
  double closed_form = 0.0;   // S(rho_d) - S(rho)
  double at_dephased = 0.0;   // S(rho || rho_d) by the spectral route
  std::size_t argmin = 0;     // 0 = dephase(rho), k = k-th random sample
};

/// Draws a point uniformly from the probability simplex (normalised
/// exponential spacings).
template <class Rng>
IncoherentState random_incoherent_state(Rng& rng) {
  std::exponential_distribution<double> exp1(1.0);
  IncoherentState s;
  double total = 0.0;
  for (double& d : s.diag) {
    d = exp1(rng);
    total += d;
  }
  for (double& d : s.diag) d /= total;
  return s;
}

/// Compares min_{sigma incoherent} S(rho||sigma) over n_samples random
/// sigma (plus rho_d) against the closed form.
inline VariationalCheck variational_reqc_check(const DensityMatrix& rho,
                                               std::size_t n_samples,
                                               std::uint64_t seed) {
  VariationalCheck out;
  out.closed_form = reqc(rho);
  out.at_dephased = relative_entropy_spectral(rho, dephase(rho)).value;
  out.min_sampled =
      relative_entropy_to_incoherent(rho, rho.matrix().real_diagonal()).value;

  std::mt19937_64 rng(seed);
  for (std::size_t k = 1; k <= n_samples; ++k) {
    const auto sigma = random_incoherent_state(rng);
    const auto s = relative_entropy_to_incoherent(rho, sigma.diag);
    if (s.value < out.min_sampled) {
      out.min_sampled = s.value;
      out.argmin = k;
    }
  }
  return out;
}

}  // namespace decolab

#endif  // DECOLAB_MEASURES_HPP

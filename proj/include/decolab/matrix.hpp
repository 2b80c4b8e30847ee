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

#ifndef DECOLAB_MATRIX_HPP
#define DECOLAB_MATRIX_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "decolab/errors.hpp"

namespace decolab {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense N x N complex matrix stored row-major. Value type; every operation
/// returns a new matrix.
///
/// Two-qubit matrices use the basis |00>, |01>, |10>, |11> with qubit A as
/// the left tensor factor, so index 2*a + b addresses |a b>.
template <std::size_t N>
class SquareMatrix {
  static_assert(N == 2 || N == 4, "only single- and two-qubit matrices");

 public:
  static constexpr std::size_t kDim = N;

  SquareMatrix() { entries_.fill(Complex{0.0, 0.0}); }

  /// Builds a matrix from nested rows, checking shape and finiteness.
  static SquareMatrix from_rows(
      const std::vector<std::vector<Complex>>& rows) {
    if (rows.size() != N) {
      throw DimensionError("expected " + std::to_string(N) + " rows, got " +
                           std::to_string(rows.size()));
    }
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) {
      if (rows[i].size() != N) {
        throw DimensionError("row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(N));
      }
      for (std::size_t j = 0; j < N; ++j) {
        if (!is_finite(rows[i][j])) {
          throw NotFiniteError("entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") is not finite");
        }
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const std::array<double, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * N + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * N + j];
  }

  const std::array<Complex, N * N>& entries() const { return entries_; }

  SquareMatrix adjoint() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
  }

  /// Entrywise complex conjugate in the computational basis.
  SquareMatrix conj() const {
    SquareMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.entries_[k] = std::conj(entries_[k]);
    return out;
  }

  Complex trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  std::array<double, N> real_diagonal() const {
    std::array<double, N> d{};
    for (std::size_t i = 0; i < N; ++i) d[i] = (*this)(i, i).real();
    return d;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : entries_) s += std::norm(z);
    return std::sqrt(s);
  }

  bool all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Complex z) { return is_finite(z); });
  }

  /// Largest |m(i,j) - conj(m(j,i))|.
  double hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
  }

  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  /// (m + m^dagger) / 2
  SquareMatrix hermitian_part() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return out;
  }

  friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t k = 0; k < N * N; ++k)
      out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
  }

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t k = 0; k < N * N; ++k)
      out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend SquareMatrix operator*(Complex s, const SquareMatrix& a) {
    SquareMatrix out;
    for (std::size_t k = 0; k < N * N; ++k) out.entries_[k] = s * a.entries_[k];
    return out;
  }

  friend SquareMatrix operator*(double s, const SquareMatrix& a) {
    return Complex{s, 0.0} * a;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
    for (std::size_t i = 0; i < N; ++i) {
      os << (i == 0 ? "[[" : " [");
      for (std::size_t j = 0; j < N; ++j) {
        os << m(i, j) << (j + 1 < N ? ", " : "");
      }
      os << (i + 1 < N ? "]\n" : "]]");
    }
    return os;
  }

 private:
  std::array<Complex, N * N> entries_;
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

/// Largest entrywise |a - b|.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return (a - b).max_abs();
}

enum class PauliAxis { X, Y, Z };

inline Matrix2 pauli(PauliAxis axis) {
  Matrix2 m;
  switch (axis) {
    case PauliAxis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliAxis::Y:
      m(0, 1) = Complex{0.0, -1.0};
      m(1, 0) = Complex{0.0, 1.0};
      break;
    case PauliAxis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

/// Kronecker product: kron(a, b)(2i + k, 2j + l) = a(i, j) * b(k, l).
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

/// Runtime-shaped Kronecker product for callers holding nested rows; only
/// 2x2 (x) 2x2 is supported.
inline Matrix4 kron(const std::vector<std::vector<Complex>>& a,
                    const std::vector<std::vector<Complex>>& b) {
  return kron(Matrix2::from_rows(a), Matrix2::from_rows(b));
}

}  // namespace decolab

#endif  // DECOLAB_MATRIX_HPP

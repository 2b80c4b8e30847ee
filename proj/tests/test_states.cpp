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

#include <gtest/gtest.h>

#include "decolab/states.hpp"

namespace decolab {
namespace {

TEST(Singlet, Entries) {
  const auto s = singlet();
  EXPECT_EQ(s(1, 1), Complex(0.5));
  EXPECT_EQ(s(2, 2), Complex(0.5));
  EXPECT_EQ(s(1, 2), Complex(-0.5));
  EXPECT_EQ(s(2, 1), Complex(-0.5));
  EXPECT_EQ(s.matrix().trace(), Complex(1.0));
}

TEST(Singlet, PureAndEqualsWernerOne) {
  const auto ev = hermitian_eigenvalues(singlet().matrix()).eigenvalues;
  EXPECT_NEAR(ev[0], 1.0, 1e-14);
  EXPECT_NEAR(ev[3], 0.0, 1e-14);
  EXPECT_EQ(werner(1.0), singlet());
}

TEST(Werner, Endpoints) {
  EXPECT_EQ(werner(0.0).matrix(), Matrix4::diagonal({0.25, 0.25, 0.25, 0.25}));
  EXPECT_EQ(werner(0.0), maximally_mixed());
}

TEST(Werner, HalfSpectrum) {
  // r P + (1-r)/4 I has eigenvalues (1+3r)/4 once and (1-r)/4 three times.
  const auto ev = hermitian_eigenvalues(werner(0.5).matrix()).eigenvalues;
  EXPECT_NEAR(ev[0], 0.625, 1e-14);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(ev[k], 0.125, 1e-14);
}

TEST(Werner, EntriesMatchMixture) {
  for (double r : {0.0, 0.2, 1.0 / 3.0, 0.7, 1.0}) {
    const Matrix4 mix = r * singlet().matrix() + ((1.0 - r) / 4.0) * Matrix4::identity();
    EXPECT_LE(max_abs_diff(werner(r).matrix(), mix), 1e-15) << r;
  }
}

TEST(Werner, DomainErrors) {
  EXPECT_THROW(werner(-0.01), DomainError);
  EXPECT_THROW(werner(1.0 + 1e-12), DomainError);
  EXPECT_THROW(WernerParameter(std::nan("")), DomainError);
}

TEST(WernerProperty, ValidOnFineGrid) {
  for (int i = 0; i <= 1000; ++i) {
    const double r = i / 1000.0;
    EXPECT_TRUE(diagnose_state(werner(r).matrix()).ok()) << r;
    EXPECT_NO_THROW(DensityMatrix{werner(r).matrix()});
  }
}

TEST(WernerProperty, Affine) {
  for (int i = 0; i < 100; ++i) {
    const double a = i / 100.0, b = (i + 7) % 101 / 100.0;
    const Matrix4 mid = 0.5 * (werner(a).matrix() + werner(b).matrix());
    EXPECT_LE(max_abs_diff(werner(0.5 * (a + b)).matrix(), mid), 1e-12);
  }
}

TEST(WernerProperty, SwapSymmetric) {
  for (int i = 0; i <= 100; ++i) {
    const auto rho = werner(i / 100.0);
    EXPECT_LE(max_abs_diff(swap_qubits(rho).matrix(), rho.matrix()), 1e-12);
  }
}

TEST(DensityMatrix, ValidationFailures) {
  EXPECT_THROW(DensityMatrix{Matrix4::identity()}, InvalidStateError);  // trace 4
  Matrix4 neg = Matrix4::diagonal({0.6, 0.5, 0.0, -0.1});
  EXPECT_THROW(DensityMatrix{neg}, InvalidStateError);
  Matrix4 nonherm = werner(0.5).matrix();
  nonherm(0, 1) = 0.01;
  EXPECT_THROW(DensityMatrix{nonherm}, InvalidStateError);
}

TEST(IsXState, Cases) {
  EXPECT_TRUE(is_x_state(werner(0.7)));
  EXPECT_TRUE(is_x_state(maximally_mixed()));
  Matrix4 m = Matrix4::diagonal({0.4, 0.3, 0.2, 0.1});
  m(0, 1) = 0.1;
  m(1, 0) = 0.1;
  EXPECT_FALSE(is_x_state(DensityMatrix(m)));
  Matrix4 anti = Matrix4::diagonal({0.4, 0.3, 0.2, 0.1});
  anti(0, 3) = Complex{0.1, 0.05};
  anti(3, 0) = Complex{0.1, -0.05};
  EXPECT_TRUE(is_x_state(DensityMatrix(anti)));
}

}  // namespace
}  // namespace decolab

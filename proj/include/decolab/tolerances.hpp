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

#ifndef DECOLAB_TOLERANCES_HPP
#define DECOLAB_TOLERANCES_HPP

namespace decolab::tol {

// Max |m - m^dagger| entry accepted as Hermitian.
inline constexpr double kHermitian = 1e-10;
// Negative eigenvalues down to this are treated as rounding noise.
inline constexpr double kPsdClamp = 1e-10;
// Below this an eigenvalue is a genuine violation of positivity.
inline constexpr double kPsdReject = 1e-8;
inline constexpr double kTrace = 1e-10;
inline constexpr double kXState = 1e-10;
inline constexpr double kCompleteness = 1e-12;

// Jacobi stops when the off-diagonal Frobenius norm drops below this
// (scaled by max(1, ||m||_F)).
inline constexpr double kJacobiOffDiagonal = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Eigenvalues of the concurrence matrix below kSpectrumRank * eps_1 are
// below the solver's resolution and are set to zero before sqrt.
inline constexpr double kSpectrumRank = 1e-14;

inline constexpr double kReqcClamp = 1e-12;

inline constexpr double kEpsZero = 1e-9;
inline constexpr int kBisectionMaxIter = 60;
inline constexpr double kBisectionInterval = 1e-10;
inline constexpr double kPlateauSlope = 1e-6;
// Shortest plateau, as a fraction of the swept range. Keeps extrema out.
inline constexpr double kPlateauMinSpan = 0.05;

}  // namespace decolab::tol

#endif  // DECOLAB_TOLERANCES_HPP

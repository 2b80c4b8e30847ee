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

// Prints coherence and concurrence of a Werner state as phase damping acts
// on both qubits over time.

#include <cstdio>

#include "decolab/channels.hpp"
#include "decolab/measures.hpp"
#include "decolab/states.hpp"

int main() {
  using namespace decolab;
  const double gamma = 0.5;
  const auto rho0 = werner(0.8);

  std::printf("%6s %10s %12s %12s\n", "t", "p", "reqc", "concurrence");
  for (int step = 0; step <= 10; ++step) {
    const double t = 0.5 * step;
    const auto p = time_to_p(DecayModel{gamma, t});
    const auto rho = apply_both(phase_damping(p), rho0);
    std::printf("%6.2f %10.6f %12.8f %12.8f\n", t, p.value(), reqc(rho),
                concurrence_x(rho));
  }
}

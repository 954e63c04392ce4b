// Copyright 2026 The qcosim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "qcosim/errors.hpp"

namespace qcosim {

/// Two-slit configuration: wave amplitudes A, B and phases.
struct SlitConfig {
    double amp_a = 0.0;
    double amp_b = 0.0;
    double phase_a = 0.0;
    double phase_b = 0.0;
};

struct ScanPoint {
    double delta_phase = 0.0;
    double intensity = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
};

/// Screen intensity A^2 + B^2 + 2AB cos(phase_a - phase_b).
double intensity(const SlitConfig& cfg);

/// Sweeps the phase difference over [-pi, pi] in `steps` uniform points
/// (endpoints included) and reports, per point, the two-slit intensity and
/// the exact Cos-circuit p0/p1 for a qubit initialized with the same
/// amplitudes. Amplitudes must satisfy A^2 + B^2 = 1 for the circuit
/// columns; then p0 = intensity / 2 at every point.
std::vector<ScanPoint> phase_scan(const SlitConfig& base, std::size_t steps);

}  // namespace qcosim

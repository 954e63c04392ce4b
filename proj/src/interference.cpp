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

#include "qcosim/interference.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "qcosim/qsim.hpp"

namespace qcosim {

double intensity(const SlitConfig& cfg) {
    return cfg.amp_a * cfg.amp_a + cfg.amp_b * cfg.amp_b +
           2.0 * cfg.amp_a * cfg.amp_b * std::cos(cfg.phase_a - cfg.phase_b);
}

std::vector<ScanPoint> phase_scan(const SlitConfig& base, std::size_t steps) {
    if (steps < 2) throw BadDimensionError("phase_scan: steps must be >= 2");

    constexpr double pi = std::numbers::pi;
    std::vector<ScanPoint> out;
    out.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        // Endpoint-exact interpolation from -pi to pi.
        const double t = static_cast<double>(k) / static_cast<double>(steps - 1);
        const double delta = -pi * (1.0 - t) + pi * t;

        SlitConfig cfg = base;
        cfg.phase_a = delta;
        cfg.phase_b = 0.0;

        // QubitInit validates A^2 + B^2 = 1 for the circuit columns.
        const QubitInit init(std::polar(base.amp_a, delta),
                             std::complex<double>{base.amp_b, 0.0});
        const ProbEstimate est = exact_probability(init, CircuitKind::Cos);
        out.push_back({delta, intensity(cfg), est.p0, est.p1});
    }
    return out;
}

}  // namespace qcosim

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

// The two-dimensional demo pair ("dog"/"cat") used across the test suites,
// plus reference values frozen from the oracle computations so regressions
// show up as exact-number diffs.

#pragma once

#include <complex>
#include <numbers>

#include "qcosim/embedding.hpp"

namespace fixtures {

inline qcosim::ComplexEmbedding dog() {
    return {{0.4, std::sqrt(1.0 - 0.16)}, {std::numbers::pi / 6.0, std::numbers::pi / 2.0}};
}

inline qcosim::ComplexEmbedding cat() {
    return {{0.5, std::sqrt(1.0 - 0.25)}, {std::numbers::pi / 4.0, std::numbers::pi / 3.0}};
}

// Exact circuit probabilities for the pair, qubit order
// (cos_1, sin_1, cos_2, sin_2); frozen from oracle::p0_cos / p0_sin.
inline constexpr double kP0Cos1 = 0.97118332989710643;
inline constexpr double kP0Sin1 = 0.373746807267063;
inline constexpr double kP0Cos2 = 0.93231846178828681;
inline constexpr double kP0Sin2 = 0.74959918028911232;

// Exact similarity, frozen from oracle::hermitian_cosine.
inline constexpr double kSimRe = 0.88057151950118973;
inline constexpr double kSimIm = -0.3450988876391845;
inline constexpr double kSimMagnitude = 0.94577980693522756;

// Density-matrix diagonal (c_i^2 / 2).
inline constexpr double kRhoDim1 = 0.205;
inline constexpr double kRhoDim2 = 0.795;

// Scaling factors and qubit amplitudes of dimension 1.
inline constexpr double kC1 = 0.6403124237432849;
inline constexpr double kAlpha1 = 0.62469504755442429;
inline constexpr double kBeta1 = 0.78086880944303028;

inline std::complex<double> similarity_value() { return {kSimRe, kSimIm}; }

}  // namespace fixtures

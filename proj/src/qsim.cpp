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

#include "qcosim/qsim.hpp"

#include <algorithm>
#include <cmath>

namespace qcosim {

namespace {

constexpr double kNormTol = 1e-12;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

ProbEstimate analytic(double p0) { return {clamp01(p0), 1.0 - clamp01(p0), 0, 0.0}; }

}  // namespace

QubitInit::QubitInit(std::complex<double> a0, std::complex<double> a1) : amp0(a0), amp1(a1) {
    const double total = std::norm(amp0) + std::norm(amp1);
    if (std::abs(total - 1.0) > kNormTol)
        throw NotNormalizedError("QubitInit: |amp0|^2 + |amp1|^2 must be 1");
}

NoiseModel::NoiseModel(double flip) : readout_flip(flip) {
    if (!(flip >= 0.0 && flip < 0.5))
        throw std::invalid_argument("NoiseModel: readout_flip must lie in [0, 0.5)");
}

RunMode RunMode::sampled(std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("RunMode: shots must be >= 1");
    return {shots, seed};
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::size_t qubit_index) {
    return seed ^ splitmix64(static_cast<std::uint64_t>(qubit_index));
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

ProbEstimate exact_probability(const QubitInit& init, CircuitKind kind) {
    const double alpha = std::abs(init.amp0);
    const double beta = std::abs(init.amp1);
    const double delta = std::arg(init.amp0) - std::arg(init.amp1);
    const double wave = kind == CircuitKind::Cos ? std::cos(delta) : std::sin(delta);
    return analytic(0.5 * (1.0 + 2.0 * alpha * beta * wave));
}

ProbEstimate sample(const QubitInit& init, CircuitKind kind, std::uint64_t shots,
                    std::uint64_t seed, std::optional<NoiseModel> noise) {
    if (shots == 0) throw std::invalid_argument("sample: shots must be >= 1");
    const double p_true = exact_probability(init, kind).p0;
    const double flip = noise ? noise->readout_flip : 0.0;
    // Bernoulli(p_true) followed by an independent bit flip is
    // Bernoulli(p_true(1-f) + (1-p_true)f); one uniform per shot decides both.
    const double p_eff = p_true * (1.0 - flip) + (1.0 - p_true) * flip;

    SplitMix64 rng(seed);
    std::uint64_t count0 = 0;
    for (std::uint64_t s = 0; s < shots; ++s)
        count0 += rng.next_unit() < p_eff ? 1u : 0u;

    ProbEstimate est;
    est.p0 = static_cast<double>(count0) / static_cast<double>(shots);
    est.p1 = 1.0 - est.p0;
    est.shots = shots;
    est.std_err = std::sqrt(est.p0 * est.p1 / static_cast<double>(shots));
    return est;
}

ProbEstimate mitigate_readout(const ProbEstimate& raw, const NoiseModel& noise) {
    const double f = noise.readout_flip;
    const double scale = 1.0 - 2.0 * f;
    ProbEstimate out;
    out.p0 = clamp01((raw.p0 - f) / scale);
    out.p1 = 1.0 - out.p0;
    out.shots = raw.shots;
    out.std_err = raw.std_err / scale;
    return out;
}

std::vector<ProbEstimate> run_register(const std::vector<QubitInit>& inits,
                                       const std::vector<CircuitKind>& kinds,
                                       const RunMode& mode,
                                       std::optional<NoiseModel> noise) {
    if (inits.size() != kinds.size())
        throw DimensionMismatchError("run_register: inits and kinds differ in length");
    std::vector<ProbEstimate> out;
    out.reserve(inits.size());
    for (std::size_t k = 0; k < inits.size(); ++k) {
        out.push_back(mode.is_exact()
                          ? exact_probability(inits[k], kinds[k])
                          : sample(inits[k], kinds[k], mode.shots, sub_seed(mode.seed, k), noise));
    }
    return out;
}

}  // namespace qcosim

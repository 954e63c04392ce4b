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

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcosim/errors.hpp"

namespace qcosim {

// Every circuit simulated here is a tensor product of independent
// single-qubit circuits, so states are stored as one (amp0, amp1) pair per
// qubit and never as a 2^N statevector.

/// Initial single-qubit state amp0|0> + amp1|1>.
/// Must be normalized: |amp0|^2 + |amp1|^2 = 1 within 1e-12.
struct QubitInit {
    std::complex<double> amp0;
    std::complex<double> amp1;

    QubitInit(std::complex<double> a0, std::complex<double> a1);
};

/// Cos: H then measure. Sin: S then H then measure.
/// The S gate shifts the |1> amplitude by pi/2, turning the interference
/// term from a cosine of the phase difference into a sine.
enum class CircuitKind { Cos, Sin };

/// Probability of measuring |0> / |1>, either analytic (shots = 0,
/// std_err = 0) or estimated from shot counts with
/// std_err = sqrt(p0 * p1 / shots).
struct ProbEstimate {
    double p0 = 0.0;
    double p1 = 0.0;
    std::uint64_t shots = 0;
    double std_err = 0.0;
};

/// Symmetric readout error: each measured bit flips with this probability.
struct NoiseModel {
    double readout_flip = 0.0;

    explicit NoiseModel(double flip);
};

/// Exact evaluation or seeded shot sampling.
struct RunMode {
    std::uint64_t shots = 0;  // 0 means exact
    std::uint64_t seed = 0;

    static RunMode exact() { return {}; }
    static RunMode sampled(std::uint64_t shots, std::uint64_t seed);
    bool is_exact() const { return shots == 0; }
};

/// SplitMix64 mixing function (finalizer applied to x).
std::uint64_t splitmix64(std::uint64_t x);

/// Per-qubit stream seed inside a register: seed XOR splitmix64(k).
/// This derivation is part of the reproducibility contract; two runs with
/// the same register layout and seed produce identical counts.
std::uint64_t sub_seed(std::uint64_t seed, std::size_t qubit_index);

/// Deterministic 64-bit generator used by the sampler.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit();

  private:
    std::uint64_t state_;
};

/// Analytic measurement probabilities after the circuit:
///   Cos: p0 = (1 + 2*alpha*beta*cos(phi_a - phi_b)) / 2
///   Sin: p0 = (1 + 2*alpha*beta*sin(phi_a - phi_b)) / 2
/// where alpha e^{i phi_a} = amp0 and beta e^{i phi_b} = amp1.
ProbEstimate exact_probability(const QubitInit& init, CircuitKind kind);

/// Draws `shots` Bernoulli outcomes at the exact p0 (with each bit then
/// flipped at the noise model's readout probability, when given) and
/// returns the empirical estimate. Deterministic in all arguments.
ProbEstimate sample(const QubitInit& init, CircuitKind kind, std::uint64_t shots,
                    std::uint64_t seed, std::optional<NoiseModel> noise = std::nullopt);

/// Inverts a symmetric readout flip: p0 -> clamp((p0 - f) / (1 - 2f), 0, 1),
/// with the standard error scaled by 1 / (1 - 2f).
ProbEstimate mitigate_readout(const ProbEstimate& raw, const NoiseModel& noise);

/// Element-wise exact_probability or sample over a register of independent
/// qubits. Qubit k samples with sub_seed(mode.seed, k), so results do not
/// depend on evaluation order. Noise applies to sampling only.
std::vector<ProbEstimate> run_register(const std::vector<QubitInit>& inits,
                                       const std::vector<CircuitKind>& kinds,
                                       const RunMode& mode,
                                       std::optional<NoiseModel> noise = std::nullopt);

}  // namespace qcosim

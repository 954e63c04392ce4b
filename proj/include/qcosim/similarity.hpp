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

#include "qcosim/embedding.hpp"
#include "qcosim/qsim.hpp"

namespace qcosim {

enum class Method { ClassicalOracle, QuantumExact, QuantumSampled };

/// Complex cosine similarity with per-dimension contributions and, for
/// sampled runs, propagated standard errors on both components.
struct SimilarityResult {
    std::complex<double> value;
    double magnitude = 0.0;
    std::vector<std::complex<double>> per_dim;
    Method method = Method::ClassicalOracle;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    double stderr_real = 0.0;
    double stderr_imag = 0.0;
};

/// Direct classical evaluation: value = sum_i a_i b_i e^{i(phase_b - phase_a)}
/// over magnitudes a_i, b_i, divided by the product of norms. Inputs need
/// not be unit; they are normalized internally.
SimilarityResult classical_similarity(const ComplexEmbedding& a, const ComplexEmbedding& b);

/// Circuit-based estimate. Each non-degenerate dimension i contributes two
/// qubits, Cos then Sin in register order, both initialized to
/// alpha_i e^{i phi_a}|0> + beta_i e^{i phi_b}|1>. The similarity is
/// reconstructed from the |0> probabilities as
///   Re = (1/2) sum c_i^2 (2 p0_cos,i - 1)
///   Im = -(1/2) sum c_i^2 (2 p0_sin,i - 1)
/// (the sine of the phase difference changes sign with its argument, hence
/// the minus). Inputs must be unit-normalized. When `mitigate` is set and a
/// noise model is given, per-qubit readout mitigation is applied before
/// reconstruction. In exact mode the result matches classical_similarity
/// to floating-point accuracy.
SimilarityResult quantum_similarity(const ComplexEmbedding& a, const ComplexEmbedding& b,
                                    const RunMode& mode,
                                    std::optional<NoiseModel> noise = std::nullopt,
                                    bool mitigate = false);

/// Real-vector shortcut: all relative phases are 0 or pi, so the Sin
/// qubits' expected contribution vanishes and they are skipped entirely;
/// one Cos qubit per non-degenerate dimension. Im is identically 0.
SimilarityResult quantum_similarity_real(const RealEmbedding& a, const RealEmbedding& b,
                                         const RunMode& mode,
                                         std::optional<NoiseModel> noise = std::nullopt,
                                         bool mitigate = false);

/// sqrt(Re^2 + Im^2) of the similarity value.
double magnitude(const SimilarityResult& result);

/// Result of factoring the leading dimension's phase difference out of the
/// similarity: value(a, b) = e^{i global_phase} * value(reduced_a, reduced_b),
/// and the magnitudes agree.
struct PhaseFactored {
    double global_phase = 0.0;
    ComplexEmbedding reduced_a;
    ComplexEmbedding reduced_b;
};

/// Shifts every phase of b by -(phase_b[0] - phase_a[0]) so the leading
/// dimension carries zero relative phase. Requires nonzero magnitudes in
/// dimension 0 of both inputs.
PhaseFactored phase_factor(const ComplexEmbedding& a, const ComplexEmbedding& b);

}  // namespace qcosim

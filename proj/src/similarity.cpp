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

#include "qcosim/similarity.hpp"

#include <cmath>

namespace qcosim {

namespace {

constexpr double kUnitNormTol = 1e-9;

void require_unit(double norm, const char* what) {
    if (norm == 0.0) throw ZeroVectorError(std::string(what) + ": zero vector");
    if (std::abs(norm - 1.0) > kUnitNormTol)
        throw NotNormalizedError(std::string(what) + ": input must be unit-normalized");
}

struct RegisterQubit {
    std::size_t dim_index;
    double c_sq;
};

/// Shared reconstruction: walks the register in (Cos[, Sin]) groups per
/// non-degenerate dimension and accumulates value, per-dim contributions
/// and variance terms.
SimilarityResult reconstruct(std::size_t dim, const std::vector<RegisterQubit>& layout,
                             const std::vector<ProbEstimate>& probs, bool with_sin,
                             const RunMode& mode) {
    SimilarityResult result;
    result.per_dim.assign(dim, {0.0, 0.0});
    double re = 0.0;
    double im = 0.0;
    double var_re = 0.0;
    double var_im = 0.0;

    const std::size_t stride = with_sin ? 2 : 1;
    for (std::size_t q = 0; q < layout.size(); ++q) {
        const RegisterQubit& rq = layout[q];
        const ProbEstimate& cos_est = probs[q * stride];
        const double re_i = 0.5 * rq.c_sq * (2.0 * cos_est.p0 - 1.0);
        re += re_i;
        var_re += rq.c_sq * rq.c_sq * cos_est.std_err * cos_est.std_err;

        double im_i = 0.0;
        if (with_sin) {
            const ProbEstimate& sin_est = probs[q * stride + 1];
            im_i = -0.5 * rq.c_sq * (2.0 * sin_est.p0 - 1.0);
            im += im_i;
            var_im += rq.c_sq * rq.c_sq * sin_est.std_err * sin_est.std_err;
        }
        result.per_dim[rq.dim_index] = {re_i, im_i};
    }

    result.value = {re, im};
    result.magnitude = std::abs(result.value);
    result.stderr_real = std::sqrt(var_re);
    result.stderr_imag = std::sqrt(var_im);
    result.method = mode.is_exact() ? Method::QuantumExact : Method::QuantumSampled;
    result.shots = mode.shots;
    result.seed = mode.seed;
    return result;
}

std::vector<ProbEstimate> maybe_mitigate(std::vector<ProbEstimate> probs,
                                         const std::optional<NoiseModel>& noise, bool mitigate) {
    if (mitigate && noise && noise->readout_flip > 0.0)
        for (ProbEstimate& p : probs) p = mitigate_readout(p, *noise);
    return probs;
}

}  // namespace

SimilarityResult classical_similarity(const ComplexEmbedding& a, const ComplexEmbedding& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("classical_similarity: dimension mismatch");
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) throw ZeroVectorError("classical_similarity: zero vector");

    SimilarityResult result;
    result.method = Method::ClassicalOracle;
    result.per_dim.resize(a.dim());
    std::complex<double> total{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double mag = a.magnitudes()[i] * b.magnitudes()[i] / (na * nb);
        const std::complex<double> term = std::polar(mag, b.phases()[i] - a.phases()[i]);
        result.per_dim[i] = term;
        total += term;
    }
    result.value = total;
    result.magnitude = std::abs(total);
    return result;
}

SimilarityResult quantum_similarity(const ComplexEmbedding& a, const ComplexEmbedding& b,
                                    const RunMode& mode, std::optional<NoiseModel> noise,
                                    bool mitigate) {
    const std::vector<EncodedDimension> encoded = encode_pair(a, b);

    std::vector<RegisterQubit> layout;
    std::vector<QubitInit> inits;
    std::vector<CircuitKind> kinds;
    layout.reserve(encoded.size());
    inits.reserve(2 * encoded.size());
    kinds.reserve(2 * encoded.size());
    for (const EncodedDimension& d : encoded) {
        if (d.degenerate()) continue;
        layout.push_back({d.index, d.c * d.c});
        const QubitInit init(std::polar(d.alpha, d.phi_a), std::polar(d.beta, d.phi_b));
        inits.push_back(init);
        kinds.push_back(CircuitKind::Cos);
        inits.push_back(init);
        kinds.push_back(CircuitKind::Sin);
    }

    const std::vector<ProbEstimate> probs =
        maybe_mitigate(run_register(inits, kinds, mode, noise), noise, mitigate);
    return reconstruct(encoded.size(), layout, probs, /*with_sin=*/true, mode);
}

SimilarityResult quantum_similarity_real(const RealEmbedding& a, const RealEmbedding& b,
                                         const RunMode& mode, std::optional<NoiseModel> noise,
                                         bool mitigate) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("quantum_similarity_real: dimension mismatch");
    require_unit(a.norm(), "quantum_similarity_real");
    require_unit(b.norm(), "quantum_similarity_real");

    std::vector<RegisterQubit> layout;
    std::vector<QubitInit> inits;
    std::vector<CircuitKind> kinds;
    layout.reserve(a.dim());
    inits.reserve(a.dim());
    kinds.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double ai = a.values()[i];
        const double bi = b.values()[i];
        const double c = std::hypot(ai, bi);
        if (c == 0.0) continue;
        layout.push_back({i, c * c});
        // Signed real amplitudes are valid qubit amplitudes; a negative
        // component is just a phase of pi.
        inits.emplace_back(std::complex<double>{ai / c, 0.0}, std::complex<double>{bi / c, 0.0});
        kinds.push_back(CircuitKind::Cos);
    }

    const std::vector<ProbEstimate> probs =
        maybe_mitigate(run_register(inits, kinds, mode, noise), noise, mitigate);
    return reconstruct(a.dim(), layout, probs, /*with_sin=*/false, mode);
}

double magnitude(const SimilarityResult& result) {
    return std::hypot(result.value.real(), result.value.imag());
}

PhaseFactored phase_factor(const ComplexEmbedding& a, const ComplexEmbedding& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("phase_factor: dimension mismatch");
    if (a.magnitudes()[0] == 0.0 || b.magnitudes()[0] == 0.0)
        throw DegenerateLeadingDimensionError(
            "phase_factor: leading dimension must have nonzero magnitudes");

    const double global = b.phases()[0] - a.phases()[0];
    std::vector<double> shifted = b.phases();
    for (double& p : shifted) p -= global;
    return {global, a, ComplexEmbedding(b.magnitudes(), std::move(shifted))};
}

}  // namespace qcosim

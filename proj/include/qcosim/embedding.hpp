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
#include <cstddef>
#include <vector>

#include "qcosim/errors.hpp"

namespace qcosim {

/// Wraps an angle in radians into the canonical range (-pi, pi].
double canonical_phase(double phase);

/// Real-valued embedding vector. Immutable after construction.
class RealEmbedding {
  public:
    explicit RealEmbedding(std::vector<double> values);

    std::size_t dim() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double norm() const;

  private:
    std::vector<double> values_;
};

/// Complex-valued embedding in magnitude/phase form. Magnitudes are
/// non-negative; phases are canonicalized to (-pi, pi] on construction.
class ComplexEmbedding {
  public:
    ComplexEmbedding(std::vector<double> magnitudes, std::vector<double> phases);

    std::size_t dim() const { return magnitudes_.size(); }
    const std::vector<double>& magnitudes() const { return magnitudes_; }
    const std::vector<double>& phases() const { return phases_; }
    double norm() const;

    /// Component i as a complex number: magnitude * e^{i*phase}.
    std::complex<double> component(std::size_t i) const;

  private:
    std::vector<double> magnitudes_;
    std::vector<double> phases_;
};

/// Per-dimension qubit payload for a pair of embeddings: amplitudes
/// alpha/beta with alpha^2 + beta^2 = 1, the two phases, and the scaling
/// factor c = sqrt(a_i^2 + b_i^2). A dimension where both inputs vanish is
/// degenerate (c = 0, alpha = beta = 0) and contributes nothing downstream.
struct EncodedDimension {
    double alpha = 0.0;
    double beta = 0.0;
    double phi_a = 0.0;
    double phi_b = 0.0;
    double c = 0.0;
    std::size_t index = 0;

    bool degenerate() const { return c == 0.0; }
};

/// Scales a vector to unit L2 norm. Phases of a complex embedding are
/// unchanged. Throws ZeroVectorError when every component is zero.
RealEmbedding normalize(const RealEmbedding& v);
ComplexEmbedding normalize(const ComplexEmbedding& v);

/// Reinterprets a real vector as a complex one: magnitude |v_i|, phase 0
/// for non-negative components and pi for negative ones.
ComplexEmbedding as_complex(const RealEmbedding& v);

/// Packs a 2N-dimensional real vector into an N-dimensional complex vector:
/// consecutive pairs (x, y) become magnitude sqrt(x^2 + y^2) and phase
/// +-arccos(x / magnitude), signed by y. Zero pairs get phase 0.
/// Throws OddDimensionError when the input length is odd.
ComplexEmbedding pack_real_to_complex(const RealEmbedding& v);

/// Inverse of pack_real_to_complex: component i expands to the pair
/// (m_i cos p_i, m_i sin p_i), interleaved in order.
RealEmbedding unpack_complex_to_real(const ComplexEmbedding& v);

/// Keeps the first k components and renormalizes to unit length.
/// Throws BadDimensionError unless 1 <= k <= dim(v).
RealEmbedding truncate(const RealEmbedding& v, std::size_t k);
ComplexEmbedding truncate(const ComplexEmbedding& v, std::size_t k);

/// Builds the per-dimension qubit payloads for two unit-normalized
/// embeddings of equal dimension: c_i = sqrt(a_i^2 + b_i^2),
/// alpha_i = a_i / c_i, beta_i = b_i / c_i, phases copied.
/// For unit inputs the c_i^2 sum to 2.
std::vector<EncodedDimension> encode_pair(const ComplexEmbedding& a,
                                          const ComplexEmbedding& b);

}  // namespace qcosim

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

#include "qcosim/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcosim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitNormTol = 1e-9;

double sum_of_squares(const std::vector<double>& xs) {
    double total = 0.0;
    for (double x : xs) total += x * x;
    return total;
}

void require_unit(double norm, const char* what) {
    if (norm == 0.0) throw ZeroVectorError(std::string(what) + ": zero vector");
    if (std::abs(norm - 1.0) > kUnitNormTol)
        throw NotNormalizedError(std::string(what) + ": input must be unit-normalized");
}

}  // namespace

double canonical_phase(double phase) {
    double p = std::remainder(phase, kTwoPi);
    if (p <= -std::numbers::pi) p += kTwoPi;
    return p;
}

RealEmbedding::RealEmbedding(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidEmbeddingError("embedding must have at least one component");
}

double RealEmbedding::norm() const { return std::sqrt(sum_of_squares(values_)); }

ComplexEmbedding::ComplexEmbedding(std::vector<double> magnitudes, std::vector<double> phases)
    : magnitudes_(std::move(magnitudes)), phases_(std::move(phases)) {
    if (magnitudes_.empty())
        throw InvalidEmbeddingError("embedding must have at least one component");
    if (magnitudes_.size() != phases_.size())
        throw DimensionMismatchError("magnitude and phase lists differ in length");
    for (double m : magnitudes_)
        if (!(m >= 0.0)) throw InvalidEmbeddingError("magnitudes must be non-negative");
    for (double& p : phases_) p = canonical_phase(p);
}

double ComplexEmbedding::norm() const { return std::sqrt(sum_of_squares(magnitudes_)); }

std::complex<double> ComplexEmbedding::component(std::size_t i) const {
    return std::polar(magnitudes_[i], phases_[i]);
}

RealEmbedding normalize(const RealEmbedding& v) {
    const double n = v.norm();
    if (n == 0.0) throw ZeroVectorError("normalize: zero vector");
    std::vector<double> out = v.values();
    for (double& x : out) x /= n;
    return RealEmbedding(std::move(out));
}

ComplexEmbedding normalize(const ComplexEmbedding& v) {
    const double n = v.norm();
    if (n == 0.0) throw ZeroVectorError("normalize: zero vector");
    std::vector<double> mags = v.magnitudes();
    for (double& m : mags) m /= n;
    return ComplexEmbedding(std::move(mags), v.phases());
}

ComplexEmbedding as_complex(const RealEmbedding& v) {
    std::vector<double> mags(v.dim());
    std::vector<double> phases(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const double x = v.values()[i];
        mags[i] = std::abs(x);
        phases[i] = x < 0.0 ? std::numbers::pi : 0.0;
    }
    return ComplexEmbedding(std::move(mags), std::move(phases));
}

ComplexEmbedding pack_real_to_complex(const RealEmbedding& v) {
    if (v.dim() % 2 != 0)
        throw OddDimensionError("pack_real_to_complex: dimension must be even");
    const std::size_t n = v.dim() / 2;
    std::vector<double> mags(n);
    std::vector<double> phases(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = v.values()[2 * i];
        const double y = v.values()[2 * i + 1];
        const double m = std::hypot(x, y);
        mags[i] = m;
        if (m == 0.0) {
            phases[i] = 0.0;  // phase of zero is undefined; pick 0
            continue;
        }
        // Same angle as +-arccos(x / m) signed by y, but stable when the
        // pair is nearly axis-aligned.
        phases[i] = std::atan2(y, x);
    }
    return ComplexEmbedding(std::move(mags), std::move(phases));
}

RealEmbedding unpack_complex_to_real(const ComplexEmbedding& v) {
    std::vector<double> out(2 * v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const double m = v.magnitudes()[i];
        const double p = v.phases()[i];
        out[2 * i] = m * std::cos(p);
        out[2 * i + 1] = m * std::sin(p);
    }
    return RealEmbedding(std::move(out));
}

RealEmbedding truncate(const RealEmbedding& v, std::size_t k) {
    if (k < 1 || k > v.dim()) throw BadDimensionError("truncate: k out of range");
    std::vector<double> prefix(v.values().begin(), v.values().begin() + k);
    return normalize(RealEmbedding(std::move(prefix)));
}

ComplexEmbedding truncate(const ComplexEmbedding& v, std::size_t k) {
    if (k < 1 || k > v.dim()) throw BadDimensionError("truncate: k out of range");
    std::vector<double> mags(v.magnitudes().begin(), v.magnitudes().begin() + k);
    std::vector<double> phases(v.phases().begin(), v.phases().begin() + k);
    return normalize(ComplexEmbedding(std::move(mags), std::move(phases)));
}

std::vector<EncodedDimension> encode_pair(const ComplexEmbedding& a, const ComplexEmbedding& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("encode_pair: dimension mismatch");
    require_unit(a.norm(), "encode_pair");
    require_unit(b.norm(), "encode_pair");

    std::vector<EncodedDimension> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double ai = a.magnitudes()[i];
        const double bi = b.magnitudes()[i];
        EncodedDimension& d = out[i];
        d.index = i;
        d.phi_a = a.phases()[i];
        d.phi_b = b.phases()[i];
        d.c = std::hypot(ai, bi);
        if (d.c > 0.0) {
            d.alpha = ai / d.c;
            d.beta = bi / d.c;
        }
    }
    return out;
}

}  // namespace qcosim

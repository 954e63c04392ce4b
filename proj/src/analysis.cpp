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

#include "qcosim/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace qcosim {

namespace {

constexpr double kUnitNormTol = 1e-9;

}  // namespace

DensityMatrix::DensityMatrix(std::vector<double> diagonal) : diagonal_(std::move(diagonal)) {
    for (double d : diagonal_)
        if (!(d >= 0.0)) throw std::invalid_argument("DensityMatrix: entries must be >= 0");
}

double DensityMatrix::trace() const {
    double total = 0.0;
    for (double d : diagonal_) total += d;
    return total;
}

DensityMatrix density_matrix(const ComplexEmbedding& a, const ComplexEmbedding& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("density_matrix: dimension mismatch");
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) throw ZeroVectorError("density_matrix: zero vector");
    if (std::abs(na - 1.0) > kUnitNormTol || std::abs(nb - 1.0) > kUnitNormTol)
        throw NotNormalizedError("density_matrix: inputs must be unit-normalized");

    std::vector<double> diag(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double ai = a.magnitudes()[i];
        const double bi = b.magnitudes()[i];
        diag[i] = 0.5 * (ai * ai + bi * bi);
    }
    return DensityMatrix(std::move(diag));
}

std::vector<EigenEntry> spectrum(const DensityMatrix& rho) {
    std::vector<EigenEntry> out(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) out[i] = {rho.diagonal()[i], i};
    std::stable_sort(out.begin(), out.end(), [](const EigenEntry& x, const EigenEntry& y) {
        return x.eigenvalue > y.eigenvalue;
    });
    return out;
}

std::complex<double> expectation(const DensityMatrix& rho,
                                 const std::vector<ProbEstimate>& probs_cos,
                                 const std::vector<ProbEstimate>& probs_sin) {
    if (probs_cos.size() != rho.dim() || probs_sin.size() != rho.dim())
        throw DimensionMismatchError("expectation: probability lists must match dimension");
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        const double d = rho.diagonal()[i];
        re += d * (2.0 * probs_cos[i].p0 - 1.0);
        im += d * (2.0 * probs_sin[i].p0 - 1.0);
    }
    return {re, -im};
}

}  // namespace qcosim

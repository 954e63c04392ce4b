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

#include "qcosim/embedding.hpp"
#include "qcosim/qsim.hpp"

namespace qcosim {

/// Diagonal density matrix with entries c_i^2 / 2. Stored as the diagonal
/// only; it is diagonal by construction because the dimensions are treated
/// as statistically independent. Unit trace for unit-norm inputs.
class DensityMatrix {
  public:
    explicit DensityMatrix(std::vector<double> diagonal);

    std::size_t dim() const { return diagonal_.size(); }
    const std::vector<double>& diagonal() const { return diagonal_; }
    double trace() const;

  private:
    std::vector<double> diagonal_;
};

struct EigenEntry {
    double eigenvalue = 0.0;
    std::size_t index = 0;
};

/// Builds the density matrix of a unit-normalized pair:
/// diagonal_i = (a_i^2 + b_i^2) / 2.
DensityMatrix density_matrix(const ComplexEmbedding& a, const ComplexEmbedding& b);

/// Eigenvalues of the (diagonal) density matrix: the diagonal entries,
/// sorted descending, each tagged with its original dimension index.
std::vector<EigenEntry> spectrum(const DensityMatrix& rho);

/// Expectation-value form of the similarity:
///   sum_i d_i (2 p0_cos,i - 1) - i * sum_i d_i (2 p0_sin,i - 1)
/// over the diagonal weights d_i. Agrees with the per-qubit reconstruction
/// in quantum_similarity when fed the same probabilities.
std::complex<double> expectation(const DensityMatrix& rho,
                                 const std::vector<ProbEstimate>& probs_cos,
                                 const std::vector<ProbEstimate>& probs_sin);

}  // namespace qcosim

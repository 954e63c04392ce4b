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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "qcosim/similarity.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qcosim;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("classical_similarity: self-similarity is 1") {
    gen::Rng rng(31);
    const ComplexEmbedding v = gen::unit_complex(rng, 12);
    const SimilarityResult r = classical_similarity(v, v);
    CHECK(std::abs(r.value - std::complex<double>{1.0, 0.0}) < 1e-12);
    CHECK(r.method == Method::ClassicalOracle);
}

TEST_CASE("classical_similarity: demo pair") {
    const SimilarityResult r = classical_similarity(fixtures::dog(), fixtures::cat());
    CHECK(std::abs(r.value - fixtures::similarity_value()) < 1e-12);
    CHECK(std::abs(r.value.real() - 0.881) < 5e-4);
    CHECK(std::abs(r.value.imag() - (-0.345)) < 5e-4);
    // Live cross-check against the independent summation oracle.
    CHECK(std::abs(r.value - oracle::hermitian_cosine(fixtures::dog(), fixtures::cat())) < 1e-12);
}

TEST_CASE("classical_similarity: matches the independent oracle on random pairs") {
    gen::Rng rng(32);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t dim = rng.index(1, 48);
        const ComplexEmbedding a = gen::unit_complex(rng, dim);
        const ComplexEmbedding b = gen::unit_complex(rng, dim);
        const SimilarityResult r = classical_similarity(a, b);
        CHECK(std::abs(r.value - oracle::hermitian_cosine(a, b)) < 1e-12);
        // value equals the sum of per-dimension contributions.
        std::complex<double> total{0.0, 0.0};
        for (const auto& t : r.per_dim) total += t;
        CHECK(std::abs(r.value - total) < 1e-9);
        CHECK(r.magnitude == doctest::Approx(std::abs(r.value)).epsilon(1e-12));
    }
}

TEST_CASE("classical_similarity: normalizes non-unit inputs internally") {
    const ComplexEmbedding a({3.0, 4.0}, {0.2, -0.4});
    const ComplexEmbedding b({1.0, 2.0}, {0.1, 0.3});
    const SimilarityResult scaled = classical_similarity(a, b);
    const SimilarityResult unit = classical_similarity(normalize(a), normalize(b));
    CHECK(std::abs(scaled.value - unit.value) < 1e-12);
}

TEST_CASE("classical_similarity: conjugate symmetry") {
    gen::Rng rng(33);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t dim = rng.index(1, 16);
        const ComplexEmbedding a = gen::unit_complex(rng, dim);
        const ComplexEmbedding b = gen::unit_complex(rng, dim);
        CHECK(std::abs(classical_similarity(b, a).value -
                       std::conj(classical_similarity(a, b).value)) < 1e-12);
    }
}

TEST_CASE("classical_similarity: input validation") {
    const ComplexEmbedding a({1.0}, {0.0});
    const ComplexEmbedding b({1.0, 0.0}, {0.0, 0.0});
    CHECK_THROWS_AS(classical_similarity(a, b), DimensionMismatchError);
    const ComplexEmbedding zero({0.0, 0.0}, {0.0, 0.0});
    CHECK_THROWS_AS(classical_similarity(zero, b), ZeroVectorError);
}

TEST_CASE("quantum_similarity: exact mode equals the classical oracle on the demo pair") {
    const SimilarityResult q =
        quantum_similarity(fixtures::dog(), fixtures::cat(), RunMode::exact());
    const SimilarityResult c = classical_similarity(fixtures::dog(), fixtures::cat());
    CHECK(std::abs(q.value - c.value) < 1e-12);
    CHECK(std::abs(q.value - fixtures::similarity_value()) < 1e-12);
    CHECK(q.method == Method::QuantumExact);
    CHECK(q.stderr_real == 0.0);
    CHECK(q.stderr_imag == 0.0);
}

TEST_CASE("quantum_similarity: exact mode equals the classical oracle on random pairs") {
    gen::Rng rng(34);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t dim = rng.index(1, 64);
        const ComplexEmbedding a = gen::unit_complex(rng, dim);
        const ComplexEmbedding b = gen::unit_complex(rng, dim);
        const std::complex<double> q = quantum_similarity(a, b, RunMode::exact()).value;
        const std::complex<double> c = classical_similarity(a, b).value;
        CHECK(std::abs(q.real() - c.real()) < 1e-10);
        CHECK(std::abs(q.imag() - c.imag()) < 1e-10);
    }
}

TEST_CASE("quantum_similarity: orthogonal real unit vectors give zero") {
    const ComplexEmbedding a({1.0, 0.0}, {0.0, 0.0});
    const ComplexEmbedding b({0.0, 1.0}, {0.0, 0.0});
    const SimilarityResult r = quantum_similarity(a, b, RunMode::exact());
    CHECK(std::abs(r.value) < 1e-12);
}

TEST_CASE("quantum_similarity: sampled demo run stays within 4 sigma and is reproducible") {
    const SimilarityResult exact =
        quantum_similarity(fixtures::dog(), fixtures::cat(), RunMode::exact());
    const SimilarityResult s1 =
        quantum_similarity(fixtures::dog(), fixtures::cat(), RunMode::sampled(10000, 7));
    const SimilarityResult s2 =
        quantum_similarity(fixtures::dog(), fixtures::cat(), RunMode::sampled(10000, 7));
    CHECK(s1.value == s2.value);
    CHECK(s1.stderr_real == s2.stderr_real);
    CHECK(s1.method == Method::QuantumSampled);
    CHECK(s1.shots == 10000);
    CHECK(std::abs(s1.value.real() - exact.value.real()) <= 4.0 * s1.stderr_real);
    CHECK(std::abs(s1.value.imag() - exact.value.imag()) <= 4.0 * s1.stderr_imag);
}

TEST_CASE("quantum_similarity: zero-phase inputs reduce to the real dot product") {
    gen::Rng rng(40);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t dim = rng.index(1, 24);
        std::vector<double> ma = gen::unit_complex(rng, dim).magnitudes();
        std::vector<double> mb = gen::unit_complex(rng, dim).magnitudes();
        const std::vector<double> zeros(dim, 0.0);
        const ComplexEmbedding a(ma, zeros);
        const ComplexEmbedding b(mb, zeros);
        const SimilarityResult r = quantum_similarity(a, b, RunMode::exact());
        CHECK(std::abs(r.value.imag()) < 1e-12);
        CHECK(std::abs(r.value.real() - oracle::dot(ma, mb)) < 1e-12);
    }
}

TEST_CASE("quantum_similarity: degenerate dimensions contribute zero") {
    const ComplexEmbedding a({0.6, 0.0, 0.8}, {0.1, 0.0, 0.2});
    const ComplexEmbedding b({0.8, 0.0, 0.6}, {0.3, 0.0, 0.4});
    const SimilarityResult r = quantum_similarity(a, b, RunMode::exact());
    CHECK(r.per_dim[1] == std::complex<double>{0.0, 0.0});
    CHECK(std::abs(r.value - classical_similarity(a, b).value) < 1e-12);
}

TEST_CASE("quantum_similarity: rejects non-normalized input") {
    const ComplexEmbedding not_unit({0.5, 0.5}, {0.0, 0.0});
    CHECK_THROWS_AS(quantum_similarity(not_unit, not_unit, RunMode::exact()),
                    NotNormalizedError);
}

TEST_CASE("quantum_similarity_real: identical vectors") {
    gen::Rng rng(35);
    const RealEmbedding v = gen::unit_real(rng, 10);
    const SimilarityResult r = quantum_similarity_real(v, v, RunMode::exact());
    CHECK(r.value.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.value.imag() == 0.0);
}

TEST_CASE("quantum_similarity_real: exact mode equals the dot product oracle") {
    gen::Rng rng(36);
    for (int rep = 0; rep < 50; ++rep) {
        const RealEmbedding a = gen::unit_real(rng, 128);
        const RealEmbedding b = gen::unit_real(rng, 128);
        const SimilarityResult r = quantum_similarity_real(a, b, RunMode::exact());
        CHECK(std::abs(r.value.real() - oracle::dot(a.values(), b.values())) < 1e-12);
        CHECK(r.value.imag() == 0.0);
        CHECK(r.stderr_imag == 0.0);
    }
}

TEST_CASE("quantum_similarity_real: sampled estimate within 5 sigma of exact") {
    const auto [a, b] = gen::synthetic_real_pair(42, 128, 0.8682);
    const double exact = oracle::dot(a.values(), b.values());
    const SimilarityResult r = quantum_similarity_real(a, b, RunMode::sampled(4096, 3));
    CHECK(r.value.imag() == 0.0);
    CHECK(std::abs(r.value.real() - exact) <= 5.0 * r.stderr_real);
    CHECK(r.stderr_real <= 1.0 / std::sqrt(4096.0));
}

TEST_CASE("magnitude: unit, demo and zero values") {
    SimilarityResult r;
    r.value = {1.0, 0.0};
    CHECK(magnitude(r) == 1.0);
    r.value = fixtures::similarity_value();
    CHECK(std::abs(magnitude(r) - fixtures::kSimMagnitude) < 1e-12);
    CHECK(std::abs(magnitude(r) - 0.9458) < 5e-5);
    r.value = {0.0, 0.0};
    CHECK(magnitude(r) == 0.0);
}

TEST_CASE("phase_factor: common phase offset reduces to a real similarity") {
    const double offset = 0.9;
    const ComplexEmbedding a({0.6, 0.8}, {0.3, -0.7});
    const ComplexEmbedding b({0.8, 0.6}, {0.3 + offset, -0.7 + offset});
    const PhaseFactored pf = phase_factor(a, b);
    CHECK(pf.global_phase == doctest::Approx(offset).epsilon(1e-12));
    const SimilarityResult reduced = classical_similarity(pf.reduced_a, pf.reduced_b);
    CHECK(std::abs(reduced.value.imag()) < 1e-12);
}

TEST_CASE("phase_factor: demo pair global phase and magnitude invariance") {
    const PhaseFactored pf = phase_factor(fixtures::dog(), fixtures::cat());
    CHECK(pf.global_phase == doctest::Approx(pi / 12.0).epsilon(1e-12));
    const double reduced_mag = classical_similarity(pf.reduced_a, pf.reduced_b).magnitude;
    CHECK(std::abs(reduced_mag - fixtures::kSimMagnitude) < 1e-12);
}

TEST_CASE("phase_factor: magnitude preserved and value rotated on random pairs") {
    gen::Rng rng(37);
    int tested = 0;
    while (tested < 200) {
        const std::size_t dim = rng.index(1, 24);
        const ComplexEmbedding a = gen::unit_complex(rng, dim);
        const ComplexEmbedding b = gen::unit_complex(rng, dim);
        if (a.magnitudes()[0] == 0.0 || b.magnitudes()[0] == 0.0) continue;
        ++tested;
        const PhaseFactored pf = phase_factor(a, b);
        const std::complex<double> original = classical_similarity(a, b).value;
        const std::complex<double> reduced =
            classical_similarity(pf.reduced_a, pf.reduced_b).value;
        CHECK(std::abs(std::abs(original) - std::abs(reduced)) < 1e-12);
        CHECK(std::abs(original - std::polar(1.0, pf.global_phase) * reduced) < 1e-12);
    }
}

TEST_CASE("phase_factor: degenerate leading dimension is rejected") {
    const ComplexEmbedding a({0.0, 1.0}, {0.0, 0.0});
    const ComplexEmbedding b({1.0, 0.0}, {0.0, 0.0});
    CHECK_THROWS_AS(phase_factor(a, b), DegenerateLeadingDimensionError);
}

TEST_CASE("quantum_similarity: reported stderr matches the spread over repeated runs") {
    gen::Rng rng(38);
    const ComplexEmbedding a = gen::unit_complex(rng, 8);
    const ComplexEmbedding b = gen::unit_complex(rng, 8);
    std::vector<double> reals;
    double stderr_sum = 0.0;
    for (int run = 0; run < 100; ++run) {
        const SimilarityResult r = quantum_similarity(a, b, RunMode::sampled(4096, run));
        reals.push_back(r.value.real());
        stderr_sum += r.stderr_real;
    }
    double mean = 0.0;
    for (double x : reals) mean += x;
    mean /= static_cast<double>(reals.size());
    double var = 0.0;
    for (double x : reals) var += (x - mean) * (x - mean);
    const double sd = std::sqrt(var / (static_cast<double>(reals.size()) - 1.0));
    const double reported = stderr_sum / static_cast<double>(reals.size());
    CHECK(sd < 2.0 * reported);
    CHECK(sd > reported / 2.0);
}

TEST_CASE("similarity results satisfy the Cauchy-Schwarz bound") {
    gen::Rng rng(39);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t dim = rng.index(1, 32);
        const ComplexEmbedding a = gen::unit_complex(rng, dim);
        const ComplexEmbedding b = gen::unit_complex(rng, dim);
        CHECK(classical_similarity(a, b).magnitude <= 1.0 + 1e-12);
        CHECK(quantum_similarity(a, b, RunMode::exact()).magnitude <= 1.0 + 1e-12);
        // Sampled estimates may exceed 1 only within sampling noise.
        const SimilarityResult s = quantum_similarity(a, b, RunMode::sampled(2048, rep));
        CHECK(s.magnitude <= 1.0 + 4.0 * (s.stderr_real + s.stderr_imag));
    }
}

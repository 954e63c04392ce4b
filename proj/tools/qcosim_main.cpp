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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcosim/analysis.hpp"
#include "qcosim/embedding.hpp"
#include "qcosim/interference.hpp"
#include "qcosim/json_io.hpp"
#include "qcosim/qsim.hpp"
#include "qcosim/similarity.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 2 input error, 3 configuration error.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

struct RunConfig {
    std::string mode = "exact";
    std::uint64_t shots = 4096;
    std::uint64_t seed = 0;
    double noise_flip = 0.0;
    bool mitigate = false;
    std::string output = "json";
};

std::optional<qcosim::NoiseModel> noise_from(const RunConfig& cfg) {
    if (cfg.noise_flip > 0.0) return qcosim::NoiseModel(cfg.noise_flip);
    return std::nullopt;
}

qcosim::RunMode mode_from(const RunConfig& cfg) {
    if (cfg.mode == "shots") return qcosim::RunMode::sampled(cfg.shots, cfg.seed);
    return qcosim::RunMode::exact();
}

qcosim::EmbeddingData load_and_prepare(const std::string& path, std::size_t truncate_k) {
    qcosim::EmbeddingData data = qcosim::load_embedding_file(path);
    if (truncate_k == 0) return data;
    if (const auto* real = std::get_if<qcosim::RealEmbedding>(&data))
        return qcosim::truncate(*real, truncate_k);
    return qcosim::truncate(std::get<qcosim::ComplexEmbedding>(data), truncate_k);
}

std::string method_name(const qcosim::SimilarityResult& r) {
    switch (r.method) {
        case qcosim::Method::ClassicalOracle: return "classical";
        case qcosim::Method::QuantumExact: return "exact";
        case qcosim::Method::QuantumSampled: return "shots";
    }
    return "unknown";
}

int cmd_similarity(const std::string& file_a, const std::string& file_b,
                   std::size_t truncate_k, const RunConfig& cfg) {
    const qcosim::EmbeddingData raw_a = load_and_prepare(file_a, truncate_k);
    const qcosim::EmbeddingData raw_b = load_and_prepare(file_b, truncate_k);

    const qcosim::RunMode mode = mode_from(cfg);
    const std::optional<qcosim::NoiseModel> noise = noise_from(cfg);

    qcosim::SimilarityResult quantum;
    qcosim::SimilarityResult classical;
    if (qcosim::is_real(raw_a) && qcosim::is_real(raw_b)) {
        const qcosim::RealEmbedding a = qcosim::normalize(std::get<qcosim::RealEmbedding>(raw_a));
        const qcosim::RealEmbedding b = qcosim::normalize(std::get<qcosim::RealEmbedding>(raw_b));
        classical = qcosim::classical_similarity(qcosim::as_complex(a), qcosim::as_complex(b));
        quantum = qcosim::quantum_similarity_real(a, b, mode, noise, cfg.mitigate);
    } else {
        const qcosim::ComplexEmbedding a = qcosim::normalize(qcosim::as_complex(raw_a));
        const qcosim::ComplexEmbedding b = qcosim::normalize(qcosim::as_complex(raw_b));
        classical = qcosim::classical_similarity(a, b);
        quantum = qcosim::quantum_similarity(a, b, mode, noise, cfg.mitigate);
    }

    const double delta = std::abs(quantum.value - classical.value);
    if (cfg.output == "csv") {
        std::cout << "classical_re,classical_im,quantum_re,quantum_im,"
                     "stderr_re,stderr_im,magnitude,delta\n"
                  << qcosim::format_double(classical.value.real()) << ','
                  << qcosim::format_double(classical.value.imag()) << ','
                  << qcosim::format_double(quantum.value.real()) << ','
                  << qcosim::format_double(quantum.value.imag()) << ','
                  << qcosim::format_double(quantum.stderr_real) << ','
                  << qcosim::format_double(quantum.stderr_imag) << ','
                  << qcosim::format_double(quantum.magnitude) << ','
                  << qcosim::format_double(delta) << '\n';
        return kExitOk;
    }

    json q;
    q["re"] = quantum.value.real();
    q["im"] = quantum.value.imag();
    q["stderr_re"] = quantum.stderr_real;
    q["stderr_im"] = quantum.stderr_imag;
    q["method"] = method_name(quantum);
    if (quantum.method == qcosim::Method::QuantumSampled) {
        q["shots"] = quantum.shots;
        q["seed"] = quantum.seed;
    }

    json doc;
    doc["classical"] = {{"re", classical.value.real()}, {"im", classical.value.imag()}};
    doc["quantum"] = q;
    doc["magnitude"] = quantum.magnitude;
    doc["delta"] = delta;
    std::cout << doc.dump() << '\n';
    return kExitOk;
}

int cmd_double_slit(double amp_a, double amp_b, std::size_t steps) {
    // Circuit columns need unit amplitude pairs; scale user input.
    const double norm = std::hypot(amp_a, amp_b);
    if (norm == 0.0) {
        std::cerr << "double-slit: amplitudes must not both be zero\n";
        return kExitConfig;
    }
    const qcosim::SlitConfig cfg{amp_a / norm, amp_b / norm, 0.0, 0.0};
    std::cout << "delta_phase,intensity,p0,p1\n";
    for (const qcosim::ScanPoint& pt : qcosim::phase_scan(cfg, steps)) {
        std::cout << qcosim::format_double(pt.delta_phase) << ','
                  << qcosim::format_double(pt.intensity) << ','
                  << qcosim::format_double(pt.p0) << ','
                  << qcosim::format_double(pt.p1) << '\n';
    }
    return kExitOk;
}

int cmd_analyze(const std::string& file_a, const std::string& file_b) {
    const qcosim::ComplexEmbedding a =
        qcosim::normalize(qcosim::as_complex(qcosim::load_embedding_file(file_a)));
    const qcosim::ComplexEmbedding b =
        qcosim::normalize(qcosim::as_complex(qcosim::load_embedding_file(file_b)));

    const qcosim::DensityMatrix rho = qcosim::density_matrix(a, b);
    json spectrum = json::array();
    for (const qcosim::EigenEntry& e : qcosim::spectrum(rho))
        spectrum.push_back({{"eigenvalue", e.eigenvalue}, {"index", e.index}});

    json doc;
    doc["diagonal"] = rho.diagonal();
    doc["trace"] = rho.trace();
    doc["spectrum"] = spectrum;
    std::cout << doc.dump() << '\n';
    return kExitOk;
}

int cmd_pack(const std::string& file, const std::string& direction) {
    const qcosim::EmbeddingData data = qcosim::load_embedding_file(file);
    if (direction == "to-complex") {
        const auto* real = std::get_if<qcosim::RealEmbedding>(&data);
        if (!real) throw qcosim::EmbeddingFormatError("pack to-complex: input must be real");
        std::cout << qcosim::embedding_to_json(qcosim::pack_real_to_complex(*real)) << '\n';
    } else {
        const auto* cplx = std::get_if<qcosim::ComplexEmbedding>(&data);
        if (!cplx) throw qcosim::EmbeddingFormatError("pack to-real: input must be complex");
        std::cout << qcosim::embedding_to_json(qcosim::unpack_complex_to_real(*cplx)) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex cosine similarity between embeddings via single-qubit interference circuits"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string file_a;
    std::string file_b;
    std::size_t truncate_k = 0;

    const auto noise_flip_check = CLI::Validator(
        [](std::string& s) -> std::string {
            const double f = std::stod(s);
            if (f < 0.0 || f >= 0.5) return "readout flip probability must lie in [0, 0.5)";
            return {};
        },
        "FLIP");

    CLI::App* sim = app.add_subcommand("similarity", "Classical and circuit-based similarity of two embedding files");
    sim->add_option("file_a", file_a, "first embedding JSON file")->required();
    sim->add_option("file_b", file_b, "second embedding JSON file")->required();
    sim->add_option("--mode", cfg.mode, "exact | shots")->check(CLI::IsMember({"exact", "shots"}));
    sim->add_option("--shots", cfg.shots, "shots per qubit in shots mode")->check(CLI::PositiveNumber);
    sim->add_option("--seed", cfg.seed, "sampling seed");
    sim->add_option("--noise-flip", cfg.noise_flip, "readout bit-flip probability")->check(noise_flip_check);
    sim->add_flag("--mitigate", cfg.mitigate, "invert the readout flip before reconstruction");
    sim->add_option("--truncate", truncate_k, "keep the first K dimensions, renormalized");
    sim->add_option("--output", cfg.output, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    double amp_a = 0.0;
    double amp_b = 0.0;
    std::size_t steps = 0;
    CLI::App* slit = app.add_subcommand("double-slit", "Phase scan of the two-slit intensity and its circuit analogue");
    slit->add_option("--A", amp_a, "first slit amplitude")->required()->check(CLI::NonNegativeNumber);
    slit->add_option("--B", amp_b, "second slit amplitude")->required()->check(CLI::NonNegativeNumber);
    slit->add_option("--steps", steps, "number of scan points over [-pi, pi]")->required();

    CLI::App* analyze = app.add_subcommand("analyze", "Density-matrix diagonal, trace and spectrum of an embedding pair");
    analyze->add_option("file_a", file_a, "first embedding JSON file")->required();
    analyze->add_option("file_b", file_b, "second embedding JSON file")->required();

    std::string pack_direction;
    CLI::App* pack = app.add_subcommand("pack", "Convert between real and complex embedding representations");
    pack->add_option("file", file_a, "embedding JSON file")->required();
    pack->add_option("direction", pack_direction, "to-complex | to-real")
        ->required()
        ->check(CLI::IsMember({"to-complex", "to-real"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (cfg.mitigate && cfg.noise_flip == 0.0) {
        std::cerr << "similarity: --mitigate requires --noise-flip > 0\n";
        return kExitConfig;
    }
    if (slit->parsed() && steps < 2) {
        std::cerr << "double-slit: --steps must be >= 2\n";
        return kExitConfig;
    }

    try {
        if (sim->parsed()) return cmd_similarity(file_a, file_b, truncate_k, cfg);
        if (slit->parsed()) return cmd_double_slit(amp_a, amp_b, steps);
        if (analyze->parsed()) return cmd_analyze(file_a, file_b);
        if (pack->parsed()) return cmd_pack(file_a, pack_direction);
    } catch (const qcosim::EmbeddingFormatError& e) {
        std::cerr << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}

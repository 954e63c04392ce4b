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

#include "qcosim/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcosim {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* where) {
    if (!j.is_number()) throw EmbeddingFormatError(std::string(where) + ": expected a number");
    return j.get<double>();
}

EmbeddingData from_json(const json& doc) {
    if (!doc.is_object()) throw EmbeddingFormatError("embedding: expected a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw EmbeddingFormatError("embedding: missing string field \"kind\"");
    if (!doc.contains("values") || !doc["values"].is_array())
        throw EmbeddingFormatError("embedding: missing array field \"values\"");

    const std::string kind = doc["kind"].get<std::string>();
    const json& values = doc["values"];
    if (values.empty()) throw EmbeddingFormatError("embedding: \"values\" must be non-empty");

    if (kind == "real") {
        std::vector<double> out;
        out.reserve(values.size());
        for (const json& v : values) out.push_back(require_number(v, "real values"));
        return RealEmbedding(std::move(out));
    }
    if (kind == "complex") {
        std::vector<double> mags;
        std::vector<double> phases;
        mags.reserve(values.size());
        phases.reserve(values.size());
        for (const json& v : values) {
            if (!v.is_array() || v.size() != 2)
                throw EmbeddingFormatError(
                    "complex values: expected [magnitude, phase_radians] pairs");
            mags.push_back(require_number(v[0], "complex magnitude"));
            phases.push_back(require_number(v[1], "complex phase"));
        }
        try {
            return ComplexEmbedding(std::move(mags), std::move(phases));
        } catch (const InvalidEmbeddingError& e) {
            throw EmbeddingFormatError(e.what());
        }
    }
    throw EmbeddingFormatError("embedding: \"kind\" must be \"real\" or \"complex\"");
}

}  // namespace

EmbeddingData parse_embedding_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw EmbeddingFormatError(std::string("invalid JSON: ") + e.what());
    }
    return from_json(doc);
}

EmbeddingData load_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EmbeddingFormatError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_embedding_json(buf.str());
}

std::string embedding_to_json(const RealEmbedding& v) {
    json doc;
    doc["kind"] = "real";
    doc["values"] = v.values();
    return doc.dump();
}

std::string embedding_to_json(const ComplexEmbedding& v) {
    json pairs = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i)
        pairs.push_back({v.magnitudes()[i], v.phases()[i]});
    json doc;
    doc["kind"] = "complex";
    doc["values"] = pairs;
    return doc.dump();
}

ComplexEmbedding as_complex(const EmbeddingData& data) {
    if (const auto* real = std::get_if<RealEmbedding>(&data)) return as_complex(*real);
    return std::get<ComplexEmbedding>(data);
}

bool is_real(const EmbeddingData& data) {
    return std::holds_alternative<RealEmbedding>(data);
}

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace qcosim

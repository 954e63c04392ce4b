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

#include <string>
#include <variant>

#include "qcosim/embedding.hpp"

namespace qcosim {

// Embedding file format:
//   { "kind": "real",    "values": [n1, n2, ...] }
//   { "kind": "complex", "values": [[magnitude, phase_radians], ...] }
// Numbers are doubles serialized with full round-trip precision.

using EmbeddingData = std::variant<RealEmbedding, ComplexEmbedding>;

/// Parses an embedding document. Throws EmbeddingFormatError on schema or
/// JSON errors.
EmbeddingData parse_embedding_json(const std::string& text);

/// Reads and parses an embedding file. Throws EmbeddingFormatError when the
/// file cannot be read or parsed.
EmbeddingData load_embedding_file(const std::string& path);

std::string embedding_to_json(const RealEmbedding& v);
std::string embedding_to_json(const ComplexEmbedding& v);

/// Converts either variant to the complex representation (real components
/// become magnitude/phase with phase 0 or pi).
ComplexEmbedding as_complex(const EmbeddingData& data);

bool is_real(const EmbeddingData& data);

/// Shortest decimal form of a double that parses back to the same value.
std::string format_double(double x);

}  // namespace qcosim

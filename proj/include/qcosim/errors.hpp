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

#include <stdexcept>

namespace qcosim {

/// All components of a vector are zero where a direction is required.
class ZeroVectorError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Two vectors (or a vector and a register) disagree on length.
class DimensionMismatchError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A dimension or count parameter is outside its valid range.
class BadDimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Real-to-complex packing requires an even number of components.
class OddDimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Phase factoring needs a nonzero magnitude in the leading dimension.
class DegenerateLeadingDimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An operation that assumes unit L2 norm received a non-unit vector.
class NotNormalizedError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A vector violates a structural invariant (negative magnitude, empty, ...).
class InvalidEmbeddingError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An embedding file or JSON document does not match the expected schema.
class EmbeddingFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcosim

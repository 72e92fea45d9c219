// Copyright 2026 The diagdiff Authors
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
#include <string>

namespace diagdiff {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (JSON shape, unknown kinds, bad literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A diagram layer or composition whose wire types do not line up.
class TypeCheckError : public Error {
 public:
  using Error::Error;
};

/// Tensor shapes that cannot be combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A box that has no meaning in the requested scalar rig, or a parameter
/// index that is outside the supplied parameter vector.
class InterpretError : public Error {
 public:
  using Error::Error;
};

/// No gradient rule is registered for a box kind.
class MissingRuleError : public Error {
 public:
  using Error::Error;
};

/// Bubble colour lookups and registrations.
class ColourError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument to a numeric routine (bad shift rule, zero dimension...).
class ValueError : public Error {
 public:
  using Error::Error;
};

}  // namespace diagdiff

// Copyright 2026 The mdmorph Authors.
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

#ifndef MDMORPH_ERRORS_H_
#define MDMORPH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mdmorph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document (JSON, TSV, mapping table).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed document that violates a data invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Precondition violation by the caller (empty word, untrained model, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace mdmorph

#endif  // MDMORPH_ERRORS_H_

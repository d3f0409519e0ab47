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

#ifndef MDMORPH_DIALECT_H_
#define MDMORPH_DIALECT_H_

#include <array>
#include <optional>
#include <string_view>

namespace mdmorph {

enum class Dialect { kMsa, kEgy, kGlf, kLev };

inline constexpr std::array<Dialect, 4> kAllDialects = {
    Dialect::kMsa, Dialect::kEgy, Dialect::kGlf, Dialect::kLev};

// Lowercase wire identifier: "msa", "egy", "glf", "lev".
std::string_view DialectId(Dialect dialect);
std::string_view DialectDisplayName(Dialect dialect);
std::optional<Dialect> FindDialect(std::string_view id);

// Throws InvalidArgument for anything but the four identifiers.
Dialect ParseDialect(std::string_view id);

// Dialect selection for a request: automatic or one fixed dialect.
enum class DialectChoice { kAuto, kMsa, kEgy, kGlf, kLev };

DialectChoice ParseDialectChoice(std::string_view id);
std::string_view DialectChoiceId(DialectChoice choice);
std::optional<Dialect> FixedDialect(DialectChoice choice);

}  // namespace mdmorph

#endif  // MDMORPH_DIALECT_H_

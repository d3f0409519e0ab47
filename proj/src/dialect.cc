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

#include "mdmorph/dialect.h"

#include <string>

#include "mdmorph/errors.h"
#include "mdmorph/features.h"

namespace mdmorph {

std::string_view DialectId(Dialect dialect) {
  switch (dialect) {
    case Dialect::kMsa: return "msa";
    case Dialect::kEgy: return "egy";
    case Dialect::kGlf: return "glf";
    case Dialect::kLev: return "lev";
  }
  return "";
}

std::string_view DialectDisplayName(Dialect dialect) {
  switch (dialect) {
    case Dialect::kMsa: return "MSA";
    case Dialect::kEgy: return "Egyptian";
    case Dialect::kGlf: return "Gulf";
    case Dialect::kLev: return "Levantine";
  }
  return "";
}

std::optional<Dialect> FindDialect(std::string_view id) {
  for (Dialect d : kAllDialects) {
    if (DialectId(d) == id) return d;
  }
  return std::nullopt;
}

Dialect ParseDialect(std::string_view id) {
  if (auto d = FindDialect(id)) return *d;
  throw InvalidArgument("unknown dialect '" + std::string(id) + "'");
}

DialectChoice ParseDialectChoice(std::string_view id) {
  if (id == "auto") return DialectChoice::kAuto;
  switch (ParseDialect(id)) {
    case Dialect::kMsa: return DialectChoice::kMsa;
    case Dialect::kEgy: return DialectChoice::kEgy;
    case Dialect::kGlf: return DialectChoice::kGlf;
    case Dialect::kLev: return DialectChoice::kLev;
  }
  return DialectChoice::kAuto;
}

std::string_view DialectChoiceId(DialectChoice choice) {
  if (auto d = FixedDialect(choice)) return DialectId(*d);
  return "auto";
}

std::optional<Dialect> FixedDialect(DialectChoice choice) {
  switch (choice) {
    case DialectChoice::kAuto: return std::nullopt;
    case DialectChoice::kMsa: return Dialect::kMsa;
    case DialectChoice::kEgy: return Dialect::kEgy;
    case DialectChoice::kGlf: return Dialect::kGlf;
    case DialectChoice::kLev: return Dialect::kLev;
  }
  return std::nullopt;
}

std::optional<size_t> FindFeature(std::string_view name) {
  for (size_t i = 0; i < kNumFeatures; ++i) {
    if (kFeatureNames[i] == name) return i;
  }
  return std::nullopt;
}

FeatureBundle UnspecifiedBundle() {
  FeatureBundle bundle;
  bundle.fill(std::string(kUnspecified));
  return bundle;
}

bool IsValidFeatureValue(std::string_view value) {
  if (value.empty()) return false;
  for (char c : value) {
    if (c == ':' || c == '+' || c == ' ' || c == '\t' || c == '\n') {
      return false;
    }
  }
  return true;
}

}  // namespace mdmorph

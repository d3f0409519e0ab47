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

#ifndef MDMORPH_PIPELINE_H_
#define MDMORPH_PIPELINE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdmorph/dialect.h"
#include "mdmorph/did.h"
#include "mdmorph/disambiguator.h"
#include "mdmorph/morph_db.h"
#include "mdmorph/tagger.h"

namespace mdmorph {

struct DialectResources {
  MorphDatabase db;
  TaggerModel tagger;
};

using Registry = std::map<Dialect, DialectResources>;

enum class ViewId { kDiacPos, kTokenized, kLemmatized };

inline constexpr std::array<ViewId, 3> kAllViews = {
    ViewId::kDiacPos, ViewId::kTokenized, ViewId::kLemmatized};

std::string_view ViewName(ViewId view);
// Throws InvalidArgument for anything but diac_pos, tokenized, lemmatized.
ViewId ParseViewId(std::string_view name);

struct DocumentResult {
  Dialect dialect_used = Dialect::kMsa;
  // Present only when the dialect was chosen automatically.
  std::optional<std::map<std::string, double>> dialect_scores;
  std::vector<DisambiguatedWord> words;
  std::map<std::string, std::string> views;  // keyed by ViewName
};

// Splits on Unicode whitespace, then peels leading and trailing punctuation
// characters off each piece as separate tokens.
std::vector<std::string> WordTokenize(std::string_view text);

// diac_pos: "diac/POS" per word (the raw word when the dialect has no
// diacritized forms); tokenized: top-analysis tokens joined as written;
// lemmatized: top-analysis lemmas. Words are space-joined.
std::string RenderView(const std::vector<DisambiguatedWord>& words,
                       ViewId view, bool supports_diacritization);

// Detects the dialect (choice == kAuto) or takes the requested one, then
// disambiguates with that dialect's resources. `identifier` is consulted
// only for kAuto. Throws InvalidArgument("empty input") on blank text.
DocumentResult Process(std::string_view text, DialectChoice choice,
                       const Registry& registry,
                       const DialectIdentifier* identifier);

}  // namespace mdmorph

#endif  // MDMORPH_PIPELINE_H_

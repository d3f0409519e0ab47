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

#include "mdmorph/pipeline.h"

#include <algorithm>

#include "mdmorph/errors.h"
#include "mdmorph/utf8.h"

namespace mdmorph {

std::string_view ViewName(ViewId view) {
  switch (view) {
    case ViewId::kDiacPos: return "diac_pos";
    case ViewId::kTokenized: return "tokenized";
    case ViewId::kLemmatized: return "lemmatized";
  }
  return "";
}

ViewId ParseViewId(std::string_view name) {
  for (ViewId view : kAllViews) {
    if (ViewName(view) == name) return view;
  }
  throw InvalidArgument("unknown view '" + std::string(name) + "'");
}

std::vector<std::string> WordTokenize(std::string_view text) {
  std::vector<std::string> tokens;
  for (const auto& piece : SplitOnWhitespace(text)) {
    const std::u32string chars = DecodeUtf8(piece);
    size_t begin = 0;
    size_t end = chars.size();
    while (begin < end && IsPunctuation(chars[begin])) ++begin;
    while (end > begin && IsPunctuation(chars[end - 1])) --end;
    for (size_t i = 0; i < begin; ++i) {
      tokens.push_back(EncodeUtf8(std::u32string(1, chars[i])));
    }
    if (begin < end) {
      tokens.push_back(
          EncodeUtf8(std::u32string_view(chars).substr(begin, end - begin)));
    }
    // An all-punctuation piece was fully consumed by the leading loop.
    for (size_t i = std::max(begin, end); i < chars.size(); ++i) {
      tokens.push_back(EncodeUtf8(std::u32string(1, chars[i])));
    }
  }
  return tokens;
}

std::string RenderView(const std::vector<DisambiguatedWord>& words,
                       ViewId view, bool supports_diacritization) {
  std::string out;
  for (const auto& word : words) {
    if (!out.empty()) out.push_back(' ');
    const Analysis& top = word.top();
    switch (view) {
      case ViewId::kDiacPos:
        out += supports_diacritization ? top.diac : word.raw;
        out.push_back('/');
        out += top.pos();
        break;
      case ViewId::kTokenized:
        for (const auto& token : top.tokens) out += token;
        break;
      case ViewId::kLemmatized:
        out += top.lemma;
        break;
    }
  }
  return out;
}

DocumentResult Process(std::string_view text, DialectChoice choice,
                       const Registry& registry,
                       const DialectIdentifier* identifier) {
  if (SplitOnWhitespace(text).empty()) throw InvalidArgument("empty input");
  DocumentResult result;
  if (auto fixed = FixedDialect(choice)) {
    result.dialect_used = *fixed;
  } else {
    if (identifier == nullptr) {
      throw InvalidArgument("automatic dialect selection needs a DID model");
    }
    DidResult did = identifier->Identify(text);
    const auto dialect = FindDialect(did.label);
    if (!dialect) {
      throw Error("DID model produced unknown dialect '" + did.label + "'");
    }
    result.dialect_used = *dialect;
    result.dialect_scores = std::move(did.scores);
  }
  const auto it = registry.find(result.dialect_used);
  if (it == registry.end()) {
    throw Error("no resources loaded for dialect '" +
                std::string(DialectId(result.dialect_used)) + "'");
  }
  const DialectResources& resources = it->second;
  result.words = Disambiguate(WordTokenize(text), resources.db, resources.tagger);
  for (ViewId view : kAllViews) {
    result.views[std::string(ViewName(view))] = RenderView(
        result.words, view, resources.db.supports_diacritization());
  }
  return result;
}

}  // namespace mdmorph

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

#include "mdmorph/analyzer.h"

#include <algorithm>
#include <tuple>

#include "mdmorph/errors.h"
#include "mdmorph/script.h"
#include "mdmorph/utf8.h"

namespace mdmorph {
namespace {

// Precedence: stem < prefix < suffix.
FeatureBundle MergeFeatures(const MorphEntry& prefix, const MorphEntry& stem,
                            const MorphEntry& suffix) {
  FeatureBundle bundle = UnspecifiedBundle();
  for (const MorphEntry* entry : {&stem, &prefix, &suffix}) {
    for (const auto& [name, value] : entry->features) {
      if (auto index = FindFeature(name)) bundle[*index] = value;
    }
  }
  return bundle;
}

Analysis Combine(const MorphEntry& prefix, const MorphEntry& stem,
                 const MorphEntry& suffix) {
  Analysis a;
  a.diac = prefix.diac + stem.diac + suffix.diac;
  a.lemma = stem.lemma;
  a.gloss = stem.gloss;
  a.features = MergeFeatures(prefix, stem, suffix);
  for (const MorphEntry* entry : {&prefix, &stem, &suffix}) {
    a.tokens.insert(a.tokens.end(), entry->tokens.begin(), entry->tokens.end());
  }
  return a;
}

bool AllPunctuation(std::string_view word) {
  const std::u32string chars = DecodeUtf8(word);
  return !chars.empty() &&
         std::all_of(chars.begin(), chars.end(), IsPunctuation);
}

std::string CheckedWord(std::string_view word) {
  std::string trimmed = TrimSpace(word);
  if (trimmed.empty()) throw InvalidArgument("cannot analyze an empty word");
  return trimmed;
}

}  // namespace

std::string_view AnalysisSourceName(AnalysisSource source) {
  return source == AnalysisSource::kLexicon ? "lexicon" : "backoff";
}

bool AnalysisLess(const Analysis& a, const Analysis& b) {
  return std::tie(a.diac, a.lemma, a.gloss, a.features, a.tokens, a.source) <
         std::tie(b.diac, b.lemma, b.gloss, b.features, b.tokens, b.source);
}

std::string TrimSpace(std::string_view text) {
  std::u32string chars = DecodeUtf8(text);
  size_t begin = 0;
  size_t end = chars.size();
  while (begin < end && IsUnicodeSpace(chars[begin])) ++begin;
  while (end > begin && IsUnicodeSpace(chars[end - 1])) --end;
  return EncodeUtf8(std::u32string_view(chars).substr(begin, end - begin));
}

std::vector<Analysis> Analyze(std::string_view word, const MorphDatabase& db) {
  const std::u32string form = DecodeUtf8(MatchForm(CheckedWord(word)));
  const size_t n = form.size();
  std::vector<Analysis> result;
  for (size_t plen = 0; plen <= db.max_prefix_len() && plen < n; ++plen) {
    const auto& prefixes = db.PrefixesMatching(EncodeUtf8(form.substr(0, plen)));
    if (prefixes.empty()) continue;
    for (size_t xlen = 0; xlen <= db.max_suffix_len() && plen + xlen < n;
         ++xlen) {
      const auto& suffixes =
          db.SuffixesMatching(EncodeUtf8(form.substr(n - xlen)));
      if (suffixes.empty()) continue;
      const auto& stems =
          db.StemsMatching(EncodeUtf8(form.substr(plen, n - plen - xlen)));
      for (size_t pi : prefixes) {
        const MorphEntry& prefix = db.prefixes()[pi];
        for (size_t si : stems) {
          const MorphEntry& stem = db.stems()[si];
          if (!db.PrefixStemCompatible(prefix.category, stem.category)) {
            continue;
          }
          for (size_t xi : suffixes) {
            const MorphEntry& suffix = db.suffixes()[xi];
            if (db.StemSuffixCompatible(stem.category, suffix.category) &&
                db.PrefixSuffixCompatible(prefix.category, suffix.category)) {
              result.push_back(Combine(prefix, stem, suffix));
            }
          }
        }
      }
    }
  }
  std::sort(result.begin(), result.end(), AnalysisLess);
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Analysis> AnalyzeWithBackoff(std::string_view word,
                                         const MorphDatabase& db) {
  std::vector<Analysis> result = Analyze(word, db);
  if (!result.empty()) return result;

  const std::string raw = CheckedWord(word);
  const std::string normalized = Normalize(raw);
  Analysis backoff;
  backoff.diac = db.supports_diacritization() ? normalized : raw;
  backoff.lemma = normalized;
  backoff.gloss = std::string(kBackoffGloss);
  backoff.features[kPos] = AllPunctuation(raw) ? "punc" : "noun_prop";
  backoff.tokens = {backoff.diac};
  backoff.source = AnalysisSource::kBackoff;
  result.push_back(std::move(backoff));
  return result;
}

double AverageAmbiguity(std::span<const std::string> words,
                        const MorphDatabase& db) {
  if (words.empty()) throw InvalidArgument("empty word list");
  double total = 0.0;
  for (const auto& word : words) {
    total += static_cast<double>(AnalyzeWithBackoff(word, db).size());
  }
  return total / static_cast<double>(words.size());
}

}  // namespace mdmorph

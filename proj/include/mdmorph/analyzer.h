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

#ifndef MDMORPH_ANALYZER_H_
#define MDMORPH_ANALYZER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdmorph/features.h"
#include "mdmorph/morph_db.h"

namespace mdmorph {

enum class AnalysisSource { kLexicon, kBackoff };

std::string_view AnalysisSourceName(AnalysisSource source);

// One out-of-context reading of a word.
struct Analysis {
  std::string diac;
  std::string lemma;
  std::string gloss;
  FeatureBundle features = UnspecifiedBundle();
  std::vector<std::string> tokens;
  AnalysisSource source = AnalysisSource::kLexicon;
  // Set by the disambiguator; zero out of context.
  double score = 0.0;

  const std::string& pos() const { return features[kPos]; }

  bool operator==(const Analysis&) const = default;
};

// Total order on (diac, lemma, gloss, features, tokens, source).
bool AnalysisLess(const Analysis& a, const Analysis& b);

inline constexpr std::string_view kBackoffGloss = "NO_ANALYSIS";

// Every prefix-stem-suffix reading licensed by the three compatibility
// tables, deduplicated and sorted by AnalysisLess. Throws InvalidArgument
// when the word is empty or whitespace.
std::vector<Analysis> Analyze(std::string_view word, const MorphDatabase& db);

// Same as Analyze, but an unknown word yields a single proper-noun reading
// (or a punctuation reading for all-punctuation tokens).
std::vector<Analysis> AnalyzeWithBackoff(std::string_view word,
                                         const MorphDatabase& db);

// Mean number of AnalyzeWithBackoff readings per word.
double AverageAmbiguity(std::span<const std::string> words,
                        const MorphDatabase& db);

// Trims Unicode whitespace from both ends.
std::string TrimSpace(std::string_view text);

}  // namespace mdmorph

#endif  // MDMORPH_ANALYZER_H_

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

#ifndef MDMORPH_DISAMBIGUATOR_H_
#define MDMORPH_DISAMBIGUATOR_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "mdmorph/analyzer.h"
#include "mdmorph/morph_db.h"
#include "mdmorph/tagger.h"

namespace mdmorph {

// A word with its analyses ranked in context; analyses.front() is the
// in-context choice.
struct DisambiguatedWord {
  std::string raw;
  std::vector<Analysis> analyses;

  const Analysis& top() const { return analyses.front(); }
};

using FeatureWeights = std::array<double, kNumFeatures>;

inline constexpr FeatureWeights kUniformWeights = {1, 1, 1, 1, 1, 1,
                                                   1, 1, 1, 1, 1};

// Weighted fraction of features on which the analysis agrees with `tag`.
double Agreement(const Analysis& analysis, const CombinedTag& tag,
                 const FeatureWeights& weights = kUniformWeights);

// Expected agreement of the analysis under a tag posterior:
// sum_t P(t) * Agreement(analysis, t). `posterior[i]` belongs to `tags[i]`.
double ScoreAnalysis(const Analysis& analysis,
                     std::span<const CombinedTag> tags,
                     std::span<const double> posterior,
                     const FeatureWeights& weights = kUniformWeights);

// Ranking order: score descending, then diac and lemma ascending, then the
// remaining AnalysisLess fields.
bool RanksBefore(const Analysis& a, const Analysis& b);

// Analyzes every word (with backoff), scores each reading against the
// tagger posterior at its position and sorts by RanksBefore.
std::vector<DisambiguatedWord> Disambiguate(
    const std::vector<std::string>& sentence, const MorphDatabase& db,
    const TaggerModel& model, const FeatureWeights& weights = kUniformWeights);

}  // namespace mdmorph

#endif  // MDMORPH_DISAMBIGUATOR_H_

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

#include "mdmorph/disambiguator.h"

#include <algorithm>

#include "mdmorph/errors.h"

namespace mdmorph {

double Agreement(const Analysis& analysis, const CombinedTag& tag,
                 const FeatureWeights& weights) {
  double total = 0.0;
  double agree = 0.0;
  for (size_t i = 0; i < kNumFeatures; ++i) {
    total += weights[i];
    if (analysis.features[i] == tag.values[i]) agree += weights[i];
  }
  if (!(total > 0.0)) throw InvalidArgument("feature weights sum to zero");
  return agree / total;
}

double ScoreAnalysis(const Analysis& analysis,
                     std::span<const CombinedTag> tags,
                     std::span<const double> posterior,
                     const FeatureWeights& weights) {
  if (tags.size() != posterior.size()) {
    throw InvalidArgument("posterior and tag list differ in size");
  }
  double score = 0.0;
  for (size_t t = 0; t < tags.size(); ++t) {
    if (posterior[t] == 0.0) continue;
    score += posterior[t] * Agreement(analysis, tags[t], weights);
  }
  // Rounding can push a full-agreement score a hair past 1.
  return std::clamp(score, 0.0, 1.0);
}

bool RanksBefore(const Analysis& a, const Analysis& b) {
  if (a.score != b.score) return a.score > b.score;
  return AnalysisLess(a, b);
}

std::vector<DisambiguatedWord> Disambiguate(
    const std::vector<std::string>& sentence, const MorphDatabase& db,
    const TaggerModel& model, const FeatureWeights& weights) {
  std::vector<DisambiguatedWord> words;
  if (sentence.empty()) return words;
  const auto posteriors = PredictTags(sentence, model);
  const std::span<const CombinedTag> tags(model.tags());
  for (size_t i = 0; i < sentence.size(); ++i) {
    DisambiguatedWord word{sentence[i], AnalyzeWithBackoff(sentence[i], db)};
    for (auto& analysis : word.analyses) {
      analysis.score = ScoreAnalysis(analysis, tags, posteriors[i], weights);
    }
    std::sort(word.analyses.begin(), word.analyses.end(), RanksBefore);
    words.push_back(std::move(word));
  }
  return words;
}

}  // namespace mdmorph

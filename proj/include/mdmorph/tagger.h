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

#ifndef MDMORPH_TAGGER_H_
#define MDMORPH_TAGGER_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdmorph/analyzer.h"
#include "mdmorph/features.h"
#include "mdmorph/script.h"

namespace mdmorph {

// Unfactored tag: all eleven feature values of a word at once.
struct CombinedTag {
  FeatureBundle values = UnspecifiedBundle();

  // Colon-joined values in feature order, e.g. "verb:p:3:m:s:a:i:na:na:na:na".
  std::string Serialize() const;
  // Throws ParseError unless given exactly eleven valid values.
  static CombinedTag Parse(std::string_view text);
  static CombinedTag FromAnalysis(const Analysis& analysis);

  auto operator<=>(const CombinedTag&) const = default;
};

using TaggedSentence = std::vector<std::pair<std::string, CombinedTag>>;

// Reads the `word TAB tag` corpus format; blank lines separate sentences.
// Words are converted from `encoding` to Arabic script.
std::vector<TaggedSentence> ParseTaggedCorpus(
    std::string_view text, Encoding encoding = Encoding::kArabic);

// First-order HMM over combined tags. Stores raw counts; probabilities are
// add-k smoothed on demand. Words are keyed by their match form so that
// diacritized and undiacritized spellings share statistics.
class TaggerModel {
 public:
  static constexpr double kDefaultSmoothing = 0.1;

  TaggerModel() = default;

  static TaggerModel Train(const std::vector<TaggedSentence>& corpus,
                           double k = kDefaultSmoothing);

  bool trained() const { return !tags_.empty(); }
  double k() const { return k_; }
  size_t num_tags() const { return tags_.size(); }

  // Sorted by serialized form; index i of every posterior refers to tags()[i].
  const std::vector<CombinedTag>& tags() const { return tags_; }
  const std::vector<std::string>& tag_names() const { return tag_names_; }
  int TagIndex(std::string_view serialized) const;

  int64_t num_sentences() const { return num_sentences_; }
  int64_t initial_count(int tag) const { return initial_[tag]; }
  int64_t transition_count(int from, int to) const {
    return transitions_[from][to];
  }
  int64_t transitions_from(int tag) const { return transitions_from_[tag]; }
  // Emission count of `word` (any spelling) with `tag`.
  int64_t emission_count(std::string_view word, int tag) const;
  int64_t tag_count(int tag) const { return tag_counts_[tag]; }
  size_t vocabulary_size() const { return emissions_.size(); }
  bool InVocabulary(std::string_view word) const;

  double InitialProb(int tag) const;
  double TransitionProb(int from, int to) const;
  // Known words: (count + k) / (tag_count + k * (V + 1)). Unknown words get
  // the constant 1 / (V + 1) for every tag, so only context decides them.
  double EmissionProb(int tag, std::string_view word) const;

  // Self-describing JSON document with every count. Byte-stable.
  std::string ToJson() const;
  static TaggerModel FromJson(std::string_view document);

 private:
  void Finalize();

  double k_ = kDefaultSmoothing;
  std::vector<CombinedTag> tags_;
  std::vector<std::string> tag_names_;
  std::map<std::string, int, std::less<>> tag_index_;
  int64_t num_sentences_ = 0;
  std::vector<int64_t> initial_;
  std::vector<std::vector<int64_t>> transitions_;
  std::vector<int64_t> transitions_from_;
  std::vector<int64_t> tag_counts_;
  // match form -> tag index -> count
  std::map<std::string, std::map<int, int64_t>, std::less<>> emissions_;
};

// Exact per-position marginals P(tag_i | sentence) via scaled
// forward-backward. Row i is aligned with model.tags().
std::vector<std::vector<double>> PredictTags(
    const std::vector<std::string>& sentence, const TaggerModel& model);

}  // namespace mdmorph

#endif  // MDMORPH_TAGGER_H_

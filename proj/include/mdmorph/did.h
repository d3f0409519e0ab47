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

#ifndef MDMORPH_DID_H_
#define MDMORPH_DID_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mdmorph {

// Add-k smoothed n-gram language model over symbol sequences. Histories are
// padded with `kBos`; every sequence ends with `kEos`. The vocabulary size
// counts the training symbols plus end-of-sequence and unknown, and may be
// widened so several models share one vocabulary.
class NgramLm {
 public:
  static constexpr std::string_view kBos = "<s>";
  static constexpr std::string_view kEos = "</s>";

  NgramLm() = default;
  NgramLm(int order, double k);

  void Add(const std::vector<std::string>& symbols);
  void SetVocabularySize(int64_t size) { vocabulary_size_ = size; }

  // Sum of log P(symbol | history) over the sequence and the final kEos.
  double LogProb(const std::vector<std::string>& symbols) const;

  int order() const { return order_; }
  double k() const { return k_; }
  int64_t vocabulary_size() const;
  // Distinct symbols seen in training, kEos excluded.
  const std::map<std::string, int64_t>& symbol_counts() const {
    return symbol_counts_;
  }

  std::string ToJsonString() const;
  static NgramLm FromJsonString(std::string_view document);

 private:
  friend class DidModel;

  std::string HistoryKey(const std::vector<std::string>& padded,
                         size_t position) const;

  int order_ = 1;
  double k_ = 0.5;
  int64_t vocabulary_size_ = 0;
  std::map<std::string, int64_t> symbol_counts_;
  // history key -> next symbol -> count
  std::map<std::string, std::map<std::string, int64_t>> counts_;
  std::map<std::string, int64_t> history_totals_;
};

// One symbol per code point.
std::vector<std::string> CharSymbols(std::string_view text);

// Log probability of `text` under a character LM.
double CharLmLogProb(std::string_view text, const NgramLm& lm);
// Log probability of the whitespace tokens of `text` under a word LM.
double WordLmLogProb(std::string_view text, const NgramLm& lm);

struct DidResult {
  std::string label;
  std::map<std::string, double> scores;  // posterior per label
};

// Anything that can pick a dialect for a text.
class DialectIdentifier {
 public:
  virtual ~DialectIdentifier() = default;
  virtual DidResult Identify(std::string_view text) const = 0;
};

struct DidOptions {
  double k = 0.5;        // feature smoothing
  double lm_k = 0.5;     // language-model smoothing
  double lambda = 1.0;   // weight of the two LM scores
  int char_lm_order = 5;
};

enum class DidFeature { kWord = 0, kChar1, kChar2, kChar3 };
inline constexpr size_t kNumDidFeatures = 4;
std::string_view DidFeatureName(DidFeature family);

// Extracted feature counts: whitespace word unigrams and code point 1-, 2-
// and 3-grams of the raw text (spaces included).
std::map<std::string, int64_t> ExtractDidFeatures(std::string_view text,
                                                  DidFeature family);

// Multinomial naive Bayes over word and character n-gram counts, fused
// additively with per-label character 5-gram and word unigram LM scores.
class DidModel final : public DialectIdentifier {
 public:
  DidModel() = default;

  // corpus: (label, sentence) pairs.
  static DidModel Train(
      const std::vector<std::pair<std::string, std::string>>& corpus,
      const DidOptions& options = {});

  bool trained() const { return !labels_.empty(); }

  // Canonical dialect order first (msa, egy, glf, lev), then other labels
  // sorted. Ties in Identify go to the earlier label.
  const std::vector<std::string>& labels() const { return labels_; }
  const DidOptions& options() const { return options_; }
  void set_lambda(double lambda) { options_.lambda = lambda; }

  int64_t label_count(size_t label) const { return label_counts_[label]; }
  double LogPrior(size_t label) const;

  // Smoothed log P(feature | label) with the family's shared vocabulary plus
  // one unseen bucket.
  double FeatureLogLikelihood(DidFeature family, size_t label,
                              std::string_view feature) const;
  int64_t feature_count(DidFeature family, size_t label,
                        std::string_view feature) const;
  int64_t feature_total(DidFeature family, size_t label) const;
  size_t feature_vocabulary_size(DidFeature family) const;

  const NgramLm& char_lm(size_t label) const { return char_lms_[label]; }
  const NgramLm& word_lm(size_t label) const { return word_lms_[label]; }

  // Fused log score per label, aligned with labels().
  std::vector<double> LogScores(std::string_view text) const;

  // Softmax of LogScores. Text that is empty after trimming returns the
  // priors.
  DidResult Identify(std::string_view text) const override;

  std::string ToJson() const;
  static DidModel FromJson(std::string_view document);

 private:
  struct FeatureTable {
    std::vector<std::map<std::string, int64_t, std::less<>>> counts;
    std::vector<int64_t> totals;
    size_t vocabulary_size = 0;
  };

  void FinalizeVocabularies();

  DidOptions options_;
  std::vector<std::string> labels_;
  std::vector<int64_t> label_counts_;
  int64_t total_count_ = 0;
  std::array<FeatureTable, kNumDidFeatures> features_;
  std::vector<NgramLm> char_lms_;
  std::vector<NgramLm> word_lms_;
};

// Reads the `label TAB sentence` training format.
std::vector<std::pair<std::string, std::string>> ParseDidCorpus(
    std::string_view text);

}  // namespace mdmorph

#endif  // MDMORPH_DID_H_

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

#include "mdmorph/did.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mdmorph/dialect.h"
#include "mdmorph/errors.h"
#include "mdmorph/utf8.h"

namespace mdmorph {

using nlohmann::json;

namespace {

constexpr std::string_view kModelType = "mdmorph-did";
constexpr char kHistorySeparator = '\x1f';

bool IsBlank(std::string_view text) {
  return SplitOnWhitespace(text).empty();
}

std::vector<std::string> OrderLabels(const std::set<std::string>& labels) {
  std::vector<std::string> ordered;
  for (Dialect d : kAllDialects) {
    if (labels.count(std::string(DialectId(d)))) {
      ordered.emplace_back(DialectId(d));
    }
  }
  for (const auto& label : labels) {
    if (!FindDialect(label)) ordered.push_back(label);
  }
  return ordered;
}

}  // namespace

NgramLm::NgramLm(int order, double k) : order_(order), k_(k) {
  if (order < 1) throw InvalidArgument("n-gram order must be at least 1");
  if (!(k > 0.0)) throw InvalidArgument("smoothing constant must be positive");
}

std::string NgramLm::HistoryKey(const std::vector<std::string>& padded,
                                size_t position) const {
  std::string key;
  for (size_t i = position + 1 - order_; i < position; ++i) {
    key += padded[i];
    key.push_back(kHistorySeparator);
  }
  return key;
}

void NgramLm::Add(const std::vector<std::string>& symbols) {
  std::vector<std::string> padded(order_ - 1, std::string(kBos));
  padded.insert(padded.end(), symbols.begin(), symbols.end());
  padded.emplace_back(kEos);
  for (size_t i = order_ - 1; i < padded.size(); ++i) {
    const std::string key = HistoryKey(padded, i);
    ++counts_[key][padded[i]];
    ++history_totals_[key];
    if (i + 1 < padded.size()) ++symbol_counts_[padded[i]];
  }
}

int64_t NgramLm::vocabulary_size() const {
  if (vocabulary_size_ > 0) return vocabulary_size_;
  return static_cast<int64_t>(symbol_counts_.size()) + 2;
}

double NgramLm::LogProb(const std::vector<std::string>& symbols) const {
  std::vector<std::string> padded(order_ - 1, std::string(kBos));
  padded.insert(padded.end(), symbols.begin(), symbols.end());
  padded.emplace_back(kEos);
  const double v = static_cast<double>(vocabulary_size());
  double total = 0.0;
  for (size_t i = order_ - 1; i < padded.size(); ++i) {
    const std::string key = HistoryKey(padded, i);
    double count = 0.0;
    double history = 0.0;
    if (const auto it = counts_.find(key); it != counts_.end()) {
      history = static_cast<double>(history_totals_.at(key));
      if (const auto jt = it->second.find(padded[i]); jt != it->second.end()) {
        count = static_cast<double>(jt->second);
      }
    }
    total += std::log((count + k_) / (history + k_ * v));
  }
  return total;
}

std::string NgramLm::ToJsonString() const {
  json doc;
  doc["order"] = order_;
  doc["k"] = k_;
  doc["vocabulary_size"] = vocabulary_size_;
  doc["symbols"] = symbol_counts_;
  doc["counts"] = counts_;
  return doc.dump();
}

NgramLm NgramLm::FromJsonString(std::string_view document) {
  const json doc = json::parse(document);
  NgramLm lm(doc.at("order").get<int>(), doc.at("k").get<double>());
  lm.vocabulary_size_ = doc.at("vocabulary_size").get<int64_t>();
  lm.symbol_counts_ =
      doc.at("symbols").get<std::map<std::string, int64_t>>();
  lm.counts_ = doc.at("counts")
                   .get<std::map<std::string, std::map<std::string, int64_t>>>();
  for (const auto& [key, row] : lm.counts_) {
    int64_t total = 0;
    for (const auto& [symbol, count] : row) {
      if (count < 0) throw ParseError("language model: negative count");
      total += count;
    }
    lm.history_totals_[key] = total;
  }
  return lm;
}

std::vector<std::string> CharSymbols(std::string_view text) {
  std::vector<std::string> symbols;
  for (char32_t cp : DecodeUtf8(text)) {
    symbols.emplace_back();
    AppendUtf8(cp, &symbols.back());
  }
  return symbols;
}

double CharLmLogProb(std::string_view text, const NgramLm& lm) {
  return lm.LogProb(CharSymbols(text));
}

double WordLmLogProb(std::string_view text, const NgramLm& lm) {
  return lm.LogProb(SplitOnWhitespace(text));
}

std::string_view DidFeatureName(DidFeature family) {
  switch (family) {
    case DidFeature::kWord: return "word";
    case DidFeature::kChar1: return "char1";
    case DidFeature::kChar2: return "char2";
    case DidFeature::kChar3: return "char3";
  }
  return "";
}

std::map<std::string, int64_t> ExtractDidFeatures(std::string_view text,
                                                  DidFeature family) {
  std::map<std::string, int64_t> counts;
  if (family == DidFeature::kWord) {
    for (auto& word : SplitOnWhitespace(text)) ++counts[std::move(word)];
    return counts;
  }
  const size_t n = static_cast<size_t>(family);  // kChar1 == 1, ...
  const std::u32string chars = DecodeUtf8(text);
  for (size_t i = 0; i + n <= chars.size(); ++i) {
    ++counts[EncodeUtf8(std::u32string_view(chars).substr(i, n))];
  }
  return counts;
}

DidModel DidModel::Train(
    const std::vector<std::pair<std::string, std::string>>& corpus,
    const DidOptions& options) {
  if (corpus.empty()) throw InvalidArgument("empty DID training corpus");
  if (!(options.k > 0.0) || !(options.lm_k > 0.0)) {
    throw InvalidArgument("smoothing constants must be positive");
  }
  if (options.lambda < 0.0) throw InvalidArgument("lambda must be >= 0");
  std::set<std::string> label_set;
  for (const auto& [label, sentence] : corpus) {
    if (label.empty()) throw InvalidArgument("empty DID label");
    if (IsBlank(sentence)) throw InvalidArgument("empty DID training sentence");
    label_set.insert(label);
  }
  if (label_set.size() < 2) {
    throw InvalidArgument("DID training needs at least two labels");
  }

  DidModel model;
  model.options_ = options;
  model.labels_ = OrderLabels(label_set);
  const size_t num_labels = model.labels_.size();
  model.label_counts_.assign(num_labels, 0);
  for (auto& table : model.features_) {
    table.counts.assign(num_labels, {});
    table.totals.assign(num_labels, 0);
  }
  model.char_lms_.assign(num_labels, NgramLm(options.char_lm_order, options.lm_k));
  model.word_lms_.assign(num_labels, NgramLm(1, options.lm_k));

  for (const auto& [label, sentence] : corpus) {
    const size_t d = std::find(model.labels_.begin(), model.labels_.end(),
                               label) - model.labels_.begin();
    ++model.label_counts_[d];
    ++model.total_count_;
    for (size_t f = 0; f < kNumDidFeatures; ++f) {
      for (const auto& [feature, count] :
           ExtractDidFeatures(sentence, static_cast<DidFeature>(f))) {
        model.features_[f].counts[d][feature] += count;
        model.features_[f].totals[d] += count;
      }
    }
    model.char_lms_[d].Add(CharSymbols(sentence));
    model.word_lms_[d].Add(SplitOnWhitespace(sentence));
  }
  model.FinalizeVocabularies();
  return model;
}

void DidModel::FinalizeVocabularies() {
  for (auto& table : features_) {
    std::set<std::string_view> vocab;
    for (const auto& counts : table.counts) {
      for (const auto& [feature, count] : counts) vocab.insert(feature);
    }
    table.vocabulary_size = vocab.size();
  }
  auto share = [](std::vector<NgramLm>& lms) {
    std::set<std::string_view> symbols;
    for (const auto& lm : lms) {
      for (const auto& [symbol, count] : lm.symbol_counts()) {
        symbols.insert(symbol);
      }
    }
    for (auto& lm : lms) {
      lm.SetVocabularySize(static_cast<int64_t>(symbols.size()) + 2);
    }
  };
  share(char_lms_);
  share(word_lms_);
}

double DidModel::LogPrior(size_t label) const {
  return std::log(static_cast<double>(label_counts_[label]) /
                  static_cast<double>(total_count_));
}

int64_t DidModel::feature_count(DidFeature family, size_t label,
                                std::string_view feature) const {
  const auto& counts = features_[static_cast<size_t>(family)].counts[label];
  const auto it = counts.find(feature);
  return it == counts.end() ? 0 : it->second;
}

int64_t DidModel::feature_total(DidFeature family, size_t label) const {
  return features_[static_cast<size_t>(family)].totals[label];
}

size_t DidModel::feature_vocabulary_size(DidFeature family) const {
  return features_[static_cast<size_t>(family)].vocabulary_size;
}

double DidModel::FeatureLogLikelihood(DidFeature family, size_t label,
                                      std::string_view feature) const {
  const double k = options_.k;
  const double count = static_cast<double>(feature_count(family, label, feature));
  const double total = static_cast<double>(feature_total(family, label));
  const double buckets =
      static_cast<double>(feature_vocabulary_size(family)) + 1.0;
  return std::log((count + k) / (total + k * buckets));
}

std::vector<double> DidModel::LogScores(std::string_view text) const {
  if (!trained()) throw InvalidArgument("DID model is not trained");
  std::vector<double> scores(labels_.size());
  std::array<std::map<std::string, int64_t>, kNumDidFeatures> extracted;
  for (size_t f = 0; f < kNumDidFeatures; ++f) {
    extracted[f] = ExtractDidFeatures(text, static_cast<DidFeature>(f));
  }
  const auto chars = CharSymbols(text);
  const auto words = SplitOnWhitespace(text);
  for (size_t d = 0; d < labels_.size(); ++d) {
    double score = LogPrior(d);
    for (size_t f = 0; f < kNumDidFeatures; ++f) {
      for (const auto& [feature, count] : extracted[f]) {
        score += static_cast<double>(count) *
                 FeatureLogLikelihood(static_cast<DidFeature>(f), d, feature);
      }
    }
    if (options_.lambda != 0.0) {
      score += options_.lambda *
               (char_lms_[d].LogProb(chars) + word_lms_[d].LogProb(words));
    }
    scores[d] = score;
  }
  return scores;
}

DidResult DidModel::Identify(std::string_view text) const {
  if (!trained()) throw InvalidArgument("DID model is not trained");
  std::vector<double> posterior(labels_.size());
  if (IsBlank(text)) {
    for (size_t d = 0; d < labels_.size(); ++d) {
      posterior[d] = static_cast<double>(label_counts_[d]) /
                     static_cast<double>(total_count_);
    }
  } else {
    const std::vector<double> scores = LogScores(text);
    const double max = *std::max_element(scores.begin(), scores.end());
    double sum = 0.0;
    for (size_t d = 0; d < scores.size(); ++d) {
      posterior[d] = std::exp(scores[d] - max);
      sum += posterior[d];
    }
    for (double& p : posterior) p /= sum;
  }
  DidResult result;
  size_t best = 0;
  for (size_t d = 0; d < labels_.size(); ++d) {
    result.scores[labels_[d]] = posterior[d];
    if (posterior[d] > posterior[best]) best = d;
  }
  result.label = labels_[best];
  return result;
}

std::string DidModel::ToJson() const {
  json doc;
  doc["type"] = kModelType;
  doc["version"] = 1;
  doc["k"] = options_.k;
  doc["lm_k"] = options_.lm_k;
  doc["lambda"] = options_.lambda;
  doc["char_lm_order"] = options_.char_lm_order;
  doc["labels"] = labels_;
  json per_label = json::object();
  for (size_t d = 0; d < labels_.size(); ++d) {
    json entry;
    entry["count"] = label_counts_[d];
    json features = json::object();
    for (size_t f = 0; f < kNumDidFeatures; ++f) {
      features[std::string(DidFeatureName(static_cast<DidFeature>(f)))] =
          features_[f].counts[d];
    }
    entry["features"] = features;
    entry["char_lm"] = json::parse(char_lms_[d].ToJsonString());
    entry["word_lm"] = json::parse(word_lms_[d].ToJsonString());
    per_label[labels_[d]] = entry;
  }
  doc["per_label"] = per_label;
  return doc.dump() + "\n";
}

DidModel DidModel::FromJson(std::string_view document) {
  try {
    const json doc = json::parse(document);
    if (doc.at("type").get<std::string>() != kModelType) {
      throw ParseError("DID model: wrong document type");
    }
    DidModel model;
    model.options_.k = doc.at("k").get<double>();
    model.options_.lm_k = doc.at("lm_k").get<double>();
    model.options_.lambda = doc.at("lambda").get<double>();
    model.options_.char_lm_order = doc.at("char_lm_order").get<int>();
    model.labels_ = doc.at("labels").get<std::vector<std::string>>();
    if (model.labels_.size() < 2) {
      throw ParseError("DID model: fewer than two labels");
    }
    const json& per_label = doc.at("per_label");
    for (auto& table : model.features_) {
      table.counts.assign(model.labels_.size(), {});
      table.totals.assign(model.labels_.size(), 0);
    }
    for (size_t d = 0; d < model.labels_.size(); ++d) {
      const json& entry = per_label.at(model.labels_[d]);
      const int64_t count = entry.at("count").get<int64_t>();
      if (count <= 0) throw ParseError("DID model: nonpositive label count");
      model.label_counts_.push_back(count);
      model.total_count_ += count;
      for (size_t f = 0; f < kNumDidFeatures; ++f) {
        const json& table =
            entry.at("features")
                .at(std::string(DidFeatureName(static_cast<DidFeature>(f))));
        for (const auto& [feature, value] : table.items()) {
          const int64_t c = value.get<int64_t>();
          if (c < 0) throw ParseError("DID model: negative count");
          model.features_[f].counts[d][feature] = c;
          model.features_[f].totals[d] += c;
        }
      }
      model.char_lms_.push_back(
          NgramLm::FromJsonString(entry.at("char_lm").dump()));
      model.word_lms_.push_back(
          NgramLm::FromJsonString(entry.at("word_lm").dump()));
    }
    model.FinalizeVocabularies();
    return model;
  } catch (const json::exception& e) {
    throw ParseError(std::string("DID model: ") + e.what());
  }
}

std::vector<std::pair<std::string, std::string>> ParseDidCorpus(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> corpus;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("DID corpus line " + std::to_string(line_no) +
                       ": expected 'label TAB sentence'");
    }
    corpus.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return corpus;
}

}  // namespace mdmorph

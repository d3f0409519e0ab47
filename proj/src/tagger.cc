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

#include "mdmorph/tagger.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mdmorph/errors.h"

namespace mdmorph {

using nlohmann::json;

namespace {

constexpr std::string_view kModelType = "mdmorph-tagger";

void CheckSmoothing(double k) {
  if (!(k > 0.0)) throw InvalidArgument("smoothing constant must be positive");
}

}  // namespace

std::string CombinedTag::Serialize() const {
  std::string out;
  for (size_t i = 0; i < kNumFeatures; ++i) {
    if (i > 0) out.push_back(':');
    out += values[i];
  }
  return out;
}

CombinedTag CombinedTag::Parse(std::string_view text) {
  CombinedTag tag;
  size_t field = 0;
  size_t begin = 0;
  while (true) {
    const size_t colon = text.find(':', begin);
    const std::string_view value = text.substr(
        begin, colon == std::string_view::npos ? std::string_view::npos
                                               : colon - begin);
    if (field >= kNumFeatures || !IsValidFeatureValue(value)) {
      throw ParseError("malformed combined tag '" + std::string(text) + "'");
    }
    tag.values[field++] = std::string(value);
    if (colon == std::string_view::npos) break;
    begin = colon + 1;
  }
  if (field != kNumFeatures) {
    throw ParseError("combined tag '" + std::string(text) + "' has " +
                     std::to_string(field) + " fields, expected 11");
  }
  return tag;
}

CombinedTag CombinedTag::FromAnalysis(const Analysis& analysis) {
  return CombinedTag{analysis.features};
}

std::vector<TaggedSentence> ParseTaggedCorpus(std::string_view text,
                                              Encoding encoding) {
  std::vector<TaggedSentence> corpus;
  TaggedSentence current;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      if (!current.empty()) corpus.push_back(std::move(current));
      current.clear();
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("corpus line " + std::to_string(line_no) +
                       ": expected 'word TAB tag'");
    }
    try {
      current.emplace_back(DecodeInput(line.substr(0, tab), encoding),
                           CombinedTag::Parse(line.substr(tab + 1)));
    } catch (const ParseError& e) {
      throw ParseError("corpus line " + std::to_string(line_no) + ": " +
                       e.what());
    }
  }
  if (!current.empty()) corpus.push_back(std::move(current));
  return corpus;
}

TaggerModel TaggerModel::Train(const std::vector<TaggedSentence>& corpus,
                               double k) {
  CheckSmoothing(k);
  if (corpus.empty()) throw InvalidArgument("empty training corpus");
  TaggerModel model;
  model.k_ = k;
  std::set<CombinedTag> tag_set;
  for (const auto& sentence : corpus) {
    if (sentence.empty()) throw InvalidArgument("empty training sentence");
    for (const auto& [word, tag] : sentence) tag_set.insert(tag);
  }
  for (const auto& tag : tag_set) model.tags_.push_back(tag);
  model.Finalize();

  for (const auto& sentence : corpus) {
    ++model.num_sentences_;
    int prev = -1;
    for (const auto& [word, tag] : sentence) {
      const int t = model.TagIndex(tag.Serialize());
      if (prev < 0) {
        ++model.initial_[t];
      } else {
        ++model.transitions_[prev][t];
        ++model.transitions_from_[prev];
      }
      ++model.emissions_[MatchForm(word)][t];
      ++model.tag_counts_[t];
      prev = t;
    }
  }
  return model;
}

void TaggerModel::Finalize() {
  std::sort(tags_.begin(), tags_.end(),
            [](const CombinedTag& a, const CombinedTag& b) {
              return a.Serialize() < b.Serialize();
            });
  const size_t n = tags_.size();
  tag_names_.clear();
  tag_index_.clear();
  for (size_t i = 0; i < n; ++i) {
    tag_names_.push_back(tags_[i].Serialize());
    tag_index_[tag_names_.back()] = static_cast<int>(i);
  }
  initial_.assign(n, 0);
  transitions_.assign(n, std::vector<int64_t>(n, 0));
  transitions_from_.assign(n, 0);
  tag_counts_.assign(n, 0);
}

int TaggerModel::TagIndex(std::string_view serialized) const {
  const auto it = tag_index_.find(serialized);
  return it == tag_index_.end() ? -1 : it->second;
}

int64_t TaggerModel::emission_count(std::string_view word, int tag) const {
  const auto it = emissions_.find(MatchForm(word));
  if (it == emissions_.end()) return 0;
  const auto jt = it->second.find(tag);
  return jt == it->second.end() ? 0 : jt->second;
}

bool TaggerModel::InVocabulary(std::string_view word) const {
  return emissions_.find(MatchForm(word)) != emissions_.end();
}

double TaggerModel::InitialProb(int tag) const {
  const double n = static_cast<double>(tags_.size());
  return (static_cast<double>(initial_[tag]) + k_) /
         (static_cast<double>(num_sentences_) + k_ * n);
}

double TaggerModel::TransitionProb(int from, int to) const {
  const double n = static_cast<double>(tags_.size());
  return (static_cast<double>(transitions_[from][to]) + k_) /
         (static_cast<double>(transitions_from_[from]) + k_ * n);
}

double TaggerModel::EmissionProb(int tag, std::string_view word) const {
  const double v = static_cast<double>(emissions_.size()) + 1.0;
  const auto it = emissions_.find(MatchForm(word));
  if (it == emissions_.end()) return 1.0 / v;
  const auto jt = it->second.find(tag);
  const double count = jt == it->second.end() ? 0.0 : jt->second;
  return (count + k_) / (static_cast<double>(tag_counts_[tag]) + k_ * v);
}

std::string TaggerModel::ToJson() const {
  json doc;
  doc["type"] = kModelType;
  doc["version"] = 1;
  doc["k"] = k_;
  doc["tags"] = tag_names_;
  doc["num_sentences"] = num_sentences_;
  json initial = json::object();
  json transitions = json::object();
  for (size_t i = 0; i < tags_.size(); ++i) {
    if (initial_[i] > 0) initial[tag_names_[i]] = initial_[i];
    json row = json::object();
    for (size_t j = 0; j < tags_.size(); ++j) {
      if (transitions_[i][j] > 0) row[tag_names_[j]] = transitions_[i][j];
    }
    if (!row.empty()) transitions[tag_names_[i]] = row;
  }
  json emissions = json::object();
  for (const auto& [word, counts] : emissions_) {
    json row = json::object();
    for (const auto& [tag, count] : counts) row[tag_names_[tag]] = count;
    emissions[word] = row;
  }
  doc["initial"] = initial;
  doc["transitions"] = transitions;
  doc["emissions"] = emissions;
  return doc.dump(1) + "\n";
}

TaggerModel TaggerModel::FromJson(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("tagger model: ") + e.what());
  }
  try {
    if (doc.at("type").get<std::string>() != kModelType) {
      throw ParseError("tagger model: wrong document type");
    }
    TaggerModel model;
    model.k_ = doc.at("k").get<double>();
    CheckSmoothing(model.k_);
    for (const auto& name : doc.at("tags")) {
      model.tags_.push_back(CombinedTag::Parse(name.get<std::string>()));
    }
    if (model.tags_.empty()) throw ParseError("tagger model: no tags");
    model.Finalize();
    auto index = [&](const std::string& name) {
      const int t = model.TagIndex(name);
      if (t < 0) throw ParseError("tagger model: undeclared tag " + name);
      return t;
    };
    auto count = [](const json& value) {
      const int64_t c = value.get<int64_t>();
      if (c < 0) throw ParseError("tagger model: negative count");
      return c;
    };
    model.num_sentences_ = count(doc.at("num_sentences"));
    for (const auto& [name, value] : doc.at("initial").items()) {
      model.initial_[index(name)] = count(value);
    }
    for (const auto& [from, row] : doc.at("transitions").items()) {
      const int f = index(from);
      for (const auto& [to, value] : row.items()) {
        model.transitions_[f][index(to)] = count(value);
        model.transitions_from_[f] += count(value);
      }
    }
    for (const auto& [word, row] : doc.at("emissions").items()) {
      auto& counts = model.emissions_[word];
      for (const auto& [name, value] : row.items()) {
        const int t = index(name);
        counts[t] = count(value);
        model.tag_counts_[t] += count(value);
      }
    }
    return model;
  } catch (const json::exception& e) {
    throw ParseError(std::string("tagger model: ") + e.what());
  }
}

std::vector<std::vector<double>> PredictTags(
    const std::vector<std::string>& sentence, const TaggerModel& model) {
  if (!model.trained()) throw InvalidArgument("tagger model is not trained");
  if (sentence.empty()) throw InvalidArgument("empty sentence");
  const size_t n = sentence.size();
  const int num_tags = static_cast<int>(model.num_tags());

  std::vector<std::vector<double>> emit(n, std::vector<double>(num_tags));
  for (size_t i = 0; i < n; ++i) {
    for (int t = 0; t < num_tags; ++t) {
      emit[i][t] = model.EmissionProb(t, sentence[i]);
    }
  }
  std::vector<std::vector<double>> trans(num_tags,
                                         std::vector<double>(num_tags));
  for (int t = 0; t < num_tags; ++t) {
    for (int u = 0; u < num_tags; ++u) trans[t][u] = model.TransitionProb(t, u);
  }

  // alpha[i] is normalized to sum 1; scale[i] is the normalizer.
  std::vector<std::vector<double>> alpha(n, std::vector<double>(num_tags));
  std::vector<double> scale(n);
  for (size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int u = 0; u < num_tags; ++u) {
      double prior;
      if (i == 0) {
        prior = model.InitialProb(u);
      } else {
        prior = 0.0;
        for (int t = 0; t < num_tags; ++t) prior += alpha[i - 1][t] * trans[t][u];
      }
      alpha[i][u] = prior * emit[i][u];
      sum += alpha[i][u];
    }
    scale[i] = sum;
    for (int u = 0; u < num_tags; ++u) alpha[i][u] /= sum;
  }

  std::vector<std::vector<double>> beta(n, std::vector<double>(num_tags, 1.0));
  for (size_t i = n - 1; i-- > 0;) {
    for (int t = 0; t < num_tags; ++t) {
      double sum = 0.0;
      for (int u = 0; u < num_tags; ++u) {
        sum += trans[t][u] * emit[i + 1][u] * beta[i + 1][u];
      }
      beta[i][t] = sum / scale[i + 1];
    }
  }

  std::vector<std::vector<double>> posterior(n, std::vector<double>(num_tags));
  for (size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int t = 0; t < num_tags; ++t) {
      posterior[i][t] = alpha[i][t] * beta[i][t];
      sum += posterior[i][t];
    }
    for (int t = 0; t < num_tags; ++t) posterior[i][t] /= sum;
  }
  return posterior;
}

}  // namespace mdmorph

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

#include "testing/oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "json.hpp"
#include "mdmorph/script.h"
#include "mdmorph/utf8.h"

namespace mdmorph::testing {

std::vector<Analysis> BruteForceAnalyze(std::string_view word,
                                        const MorphDatabase& db) {
  const std::string form = StripDiacritics(Normalize(TrimSpace(word)));
  std::vector<Analysis> out;
  for (const auto& p : db.prefixes()) {
    for (const auto& s : db.stems()) {
      for (const auto& x : db.suffixes()) {
        if (p.match_form + s.match_form + x.match_form != form) continue;
        if (s.match_form.empty()) continue;
        if (!db.compat_ab().count({p.category, s.category})) continue;
        if (!db.compat_bc().count({s.category, x.category})) continue;
        if (!db.compat_ac().count({p.category, x.category})) continue;
        Analysis a;
        a.diac = p.diac + s.diac + x.diac;
        a.lemma = s.lemma;
        a.gloss = s.gloss;
        std::map<std::string, std::string> merged;
        for (const auto& [k, v] : s.features) merged[k] = v;
        for (const auto& [k, v] : p.features) merged[k] = v;
        for (const auto& [k, v] : x.features) merged[k] = v;
        for (size_t i = 0; i < kNumFeatures; ++i) {
          const auto it = merged.find(std::string(kFeatureNames[i]));
          a.features[i] = it == merged.end() ? "na" : it->second;
        }
        for (const auto* e : {&p, &s, &x}) {
          for (const auto& t : e->tokens) a.tokens.push_back(t);
        }
        out.push_back(a);
      }
    }
  }
  std::sort(out.begin(), out.end(), AnalysisLess);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<double>> EnumeratePosteriors(
    const std::vector<std::string>& sentence, const TaggerModel& model) {
  const int num_tags = static_cast<int>(model.num_tags());
  const double k = model.k();
  const double nt = num_tags;
  const double v = static_cast<double>(model.vocabulary_size()) + 1.0;

  auto initial = [&](int t) {
    return (model.initial_count(t) + k) / (model.num_sentences() + k * nt);
  };
  auto transition = [&](int a, int b) {
    int64_t row = 0;
    for (int u = 0; u < num_tags; ++u) row += model.transition_count(a, u);
    return (model.transition_count(a, b) + k) / (row + k * nt);
  };
  auto emission = [&](int t, const std::string& w) {
    if (!model.InVocabulary(w)) return 1.0 / v;
    const int64_t total = model.tag_count(t);
    return (model.emission_count(w, t) + k) / (total + k * v);
  };

  const size_t n = sentence.size();
  std::vector<std::vector<double>> marginal(n, std::vector<double>(num_tags));
  std::vector<int> seq(n, 0);
  double z = 0.0;
  while (true) {
    double p = initial(seq[0]) * emission(seq[0], sentence[0]);
    for (size_t i = 1; i < n; ++i) {
      p *= transition(seq[i - 1], seq[i]) * emission(seq[i], sentence[i]);
    }
    z += p;
    for (size_t i = 0; i < n; ++i) marginal[i][seq[i]] += p;
    size_t pos = 0;
    while (pos < n && ++seq[pos] == num_tags) seq[pos++] = 0;
    if (pos == n) break;
  }
  for (auto& row : marginal) {
    for (double& x : row) x /= z;
  }
  return marginal;
}

namespace {

std::vector<std::string> Codepoints(std::string_view text) {
  std::vector<std::string> out;
  for (char32_t c : DecodeUtf8(text)) {
    std::string s;
    AppendUtf8(c, &s);
    out.push_back(s);
  }
  return out;
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (const auto& c : Codepoints(text)) {
    const char32_t cp = DecodeUtf8(c)[0];
    if (IsUnicodeSpace(cp)) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Log probability of `seq` under an add-k n-gram model, from the raw
// counts in the model's JSON dump.
double LmScore(const std::vector<std::string>& seq, const NgramLm& lm) {
  const nlohmann::json doc = nlohmann::json::parse(lm.ToJsonString());
  const int order = doc["order"].get<int>();
  const double k = doc["k"].get<double>();
  const double v = static_cast<double>(lm.vocabulary_size());
  std::vector<std::string> padded(order - 1, "<s>");
  padded.insert(padded.end(), seq.begin(), seq.end());
  padded.push_back("</s>");
  double total = 0.0;
  for (size_t i = order - 1; i < padded.size(); ++i) {
    std::string history;
    for (size_t j = i - (order - 1); j < i; ++j) history += padded[j] + '\x1f';
    double count = 0.0;
    double history_total = 0.0;
    if (doc["counts"].contains(history)) {
      for (const auto& [sym, c] : doc["counts"][history].items()) {
        history_total += c.get<double>();
        if (sym == padded[i]) count = c.get<double>();
      }
    }
    total += std::log((count + k) / (history_total + k * v));
  }
  return total;
}

}  // namespace

std::vector<double> OracleDidLogScores(std::string_view text,
                                       const DidModel& model) {
  const auto chars = Codepoints(text);
  const auto words = Words(text);
  // family -> feature -> count
  std::vector<std::map<std::string, int>> features(4);
  for (const auto& w : words) ++features[0][w];
  for (size_t n = 1; n <= 3; ++n) {
    for (size_t i = 0; i + n <= chars.size(); ++i) {
      std::string gram;
      for (size_t j = i; j < i + n; ++j) gram += chars[j];
      ++features[n][gram];
    }
  }
  int64_t total_docs = 0;
  for (size_t d = 0; d < model.labels().size(); ++d) {
    total_docs += model.label_count(d);
  }
  const double k = model.options().k;
  std::vector<double> scores;
  for (size_t d = 0; d < model.labels().size(); ++d) {
    double score = std::log(static_cast<double>(model.label_count(d)) /
                            static_cast<double>(total_docs));
    for (size_t f = 0; f < 4; ++f) {
      const auto family = static_cast<DidFeature>(f);
      const double denom = model.feature_total(family, d) +
                           k * (model.feature_vocabulary_size(family) + 1.0);
      for (const auto& [feature, count] : features[f]) {
        const double c = model.feature_count(family, d, feature);
        score += count * (std::log(c + k) - std::log(denom));
      }
    }
    const double lambda = model.options().lambda;
    if (lambda != 0.0) {
      score += lambda * (LmScore(chars, model.char_lm(d)) +
                         LmScore(words, model.word_lm(d)));
    }
    scores.push_back(score);
  }
  return scores;
}

}  // namespace mdmorph::testing

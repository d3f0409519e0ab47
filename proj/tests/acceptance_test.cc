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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Set MDMORPH_UPDATE_GOLDEN=1 to rewrite the
// stored golden responses instead of comparing against them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "mdmorph/analyzer.h"
#include "mdmorph/did.h"
#include "mdmorph/disambiguator.h"
#include "mdmorph/file_util.h"
#include "mdmorph/morph_db.h"
#include "mdmorph/service.h"
#include "mdmorph/tagger.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"
#include "testing/synthetic.h"

namespace mdmorph::testing {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Sci(double x) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(2);
  os << x;
  return os.str();
}

std::string Fixed(double x, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << x;
  return os.str();
}

// 500 random words over the toy-msa alphabet plus 50 built from its entries;
// exact equality with the brute-force enumeration in under 5 s.
Outcome AnalyzerOracle() {
  const MorphDatabase& db = ToyDb(Dialect::kMsa);
  std::set<char> letters;
  for (const auto* table : {&db.prefixes(), &db.stems(), &db.suffixes()}) {
    for (const MorphEntry& e : *table) {
      for (char c : Bw(e.match_form)) letters.insert(c);
    }
  }
  const std::string alphabet(letters.begin(), letters.end());
  std::mt19937 rng(2024);
  std::vector<std::string> words;
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 500; ++i) {
    std::string bw;
    for (int n = len(rng); n > 0; --n) bw.push_back(alphabet[pick(rng)]);
    words.push_back(Ar(bw));
  }
  // Every prefix/stem/suffix surface combination, both diacritized and
  // bare, then hamza and extra-letter variants until there are 50.
  std::vector<std::string> derived;
  for (const auto& p : db.prefixes()) {
    for (const auto& s : db.stems()) {
      for (const auto& x : db.suffixes()) {
        derived.push_back(p.diac + s.diac + x.diac);
        derived.push_back(p.match_form + s.match_form + x.match_form);
      }
    }
  }
  const std::vector<std::string> extras = {"A", "w", "t", "k", ">", "b"};
  for (size_t i = 0; derived.size() < 50; ++i) {
    derived.push_back(Ar(extras[i % extras.size()]) + derived[i] +
                      Ar(extras[(i + 1) % extras.size()]));
  }
  words.insert(words.end(), derived.begin(), derived.end());

  const auto start = Clock::now();
  int mismatches = 0;
  std::string first;
  for (const auto& w : words) {
    if (Analyze(w, db) != BruteForceAnalyze(w, db)) {
      if (mismatches++ == 0) first = Bw(w);
    }
  }
  const double secs = Seconds(start);
  Outcome o;
  o.pass = mismatches == 0 && secs < 5.0 && words.size() == 550;
  o.detail = std::to_string(words.size()) + " words, " +
             std::to_string(mismatches) + " mismatches" +
             (first.empty() ? "" : " (first: " + first + ")") + ", " +
             Fixed(secs, 3) + " s (limit 5 s)";
  return o;
}

// 200 random models with at most 5 tags and 6 word types; sentences of
// length 1..4; max |posterior - enumeration| <= 1e-9.
Outcome ForwardBackward() {
  std::mt19937 rng(99);
  double worst = 0.0;
  for (int m = 0; m < 200; ++m) {
    const int num_tags = 1 + m % 5;
    const int vocab = 1 + (m / 5) % 6;
    std::uniform_int_distribution<int> sentences(1, 12);
    const auto corpus =
        RandomTaggedCorpus(rng, num_tags, vocab, sentences(rng), 5);
    std::uniform_real_distribution<double> k(0.01, 2.0);
    const TaggerModel model = TaggerModel::Train(corpus, k(rng));
    std::uniform_int_distribution<int> word(0, vocab);  // includes one OOV
    for (int len = 1; len <= 4; ++len) {
      std::vector<std::string> sentence;
      for (int i = 0; i < len; ++i) {
        sentence.push_back("w" + std::to_string(word(rng)));
      }
      const auto got = PredictTags(sentence, model);
      const auto want = EnumeratePosteriors(sentence, model);
      for (size_t i = 0; i < got.size(); ++i) {
        for (size_t t = 0; t < got[i].size(); ++t) {
          worst = std::max(worst, std::abs(got[i][t] - want[i][t]));
        }
      }
    }
  }
  return {worst <= 1e-9,
          "200 models x 4 lengths, max abs diff " + Sci(worst) +
              " (tol 1e-9)"};
}

// Per-label log scores against the independent computation on 100 random
// inputs; posterior sums; empty input recovers priors with lambda = 0.
Outcome MnbOracle() {
  const DidCorpus corpus = MakeDidCorpus(123, 200, 25, 0.3);
  DidModel model = DidModel::Train(corpus.train);
  double worst_score = 0.0;
  double worst_sum = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::string& text = corpus.test[i].second;
    const auto got = model.LogScores(text);
    const auto want = OracleDidLogScores(text, model);
    for (size_t d = 0; d < got.size(); ++d) {
      worst_score = std::max(worst_score, std::abs(got[d] - want[d]));
    }
    double sum = 0.0;
    for (const auto& [label, p] : model.Identify(text).scores) sum += p;
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  model.set_lambda(0.0);
  const DidResult empty = model.Identify("");
  double worst_prior = 0.0;
  int64_t total = 0;
  for (size_t d = 0; d < model.labels().size(); ++d) total += model.label_count(d);
  for (size_t d = 0; d < model.labels().size(); ++d) {
    const double freq = static_cast<double>(model.label_count(d)) / total;
    worst_prior =
        std::max(worst_prior, std::abs(empty.scores.at(model.labels()[d]) - freq));
  }
  Outcome o;
  o.pass = worst_score <= 1e-9 && worst_sum <= 1e-9 && worst_prior <= 1e-9;
  o.detail = "max score diff " + Sci(worst_score) +
             ", max |sum-1| " + Sci(worst_sum) +
             ", max prior diff " + Sci(worst_prior) + " (tol 1e-9)";
  return o;
}

// 4 synthetic dialects, 2000 train / 200 test each, 30% shared vocabulary.
Outcome DidAccuracy() {
  const auto start = Clock::now();
  const DidCorpus corpus = MakeDidCorpus(4242, 2000, 200, 0.3);
  const DidModel model = DidModel::Train(corpus.train);
  int correct = 0;
  for (const auto& [label, text] : corpus.test) {
    if (model.Identify(text).label == label) ++correct;
  }
  const double accuracy = static_cast<double>(correct) / corpus.test.size();
  const double secs = Seconds(start);
  return {accuracy >= 0.90 && secs < 30.0,
          "accuracy " + Fixed(accuracy, 4) + " on " +
              std::to_string(corpus.test.size()) + " (min 0.90), " +
              Fixed(secs, 2) + " s (limit 30 s)"};
}

// 1000 gold sentences from a Markov chain over the synthetic lexicon's tags;
// train on 800, rank analyses of the other 200.
Outcome DisambiguationAccuracy() {
  const SyntheticMorphology synth;
  const MorphDatabase db = LoadDb(synth.db_document());
  std::mt19937 rng(555);
  const auto gold = synth.Sample(rng, 1000, 5, 10);
  const std::vector<TaggedSentence> train(gold.begin(), gold.begin() + 800);
  const TaggerModel model = TaggerModel::Train(train);
  int words = 0;
  int correct = 0;
  double baseline = 0.0;
  for (size_t s = 800; s < gold.size(); ++s) {
    std::vector<std::string> sentence;
    for (const auto& [word, tag] : gold[s]) sentence.push_back(word);
    const auto ranked = Disambiguate(sentence, db, model);
    for (size_t i = 0; i < ranked.size(); ++i) {
      const CombinedTag& want = gold[s][i].second;
      ++words;
      if (CombinedTag::FromAnalysis(ranked[i].top()) == want) ++correct;
      int matching = 0;
      for (const auto& a : ranked[i].analyses) {
        if (CombinedTag::FromAnalysis(a) == want) ++matching;
      }
      baseline += static_cast<double>(matching) / ranked[i].analyses.size();
    }
  }
  const double accuracy = static_cast<double>(correct) / words;
  baseline /= words;
  return {accuracy >= 0.85 && accuracy - baseline >= 0.20,
          "accuracy " + Fixed(accuracy, 4) + " (min 0.85), uniform baseline " +
              Fixed(baseline, 4) + ", gain " + Fixed(accuracy - baseline, 4) +
              " (min 0.20) over " + std::to_string(words) + " words"};
}

struct Golden {
  std::string name;
  std::string request;
  std::string response_path;
};

std::vector<Golden> LoadGoldens() {
  std::vector<Golden> goldens;
  const std::string suffix = ".request.json";
  std::vector<std::filesystem::path> paths;
  for (const auto& entry :
       std::filesystem::directory_iterator(DataPath("golden"))) {
    const std::string file = entry.path().filename().string();
    if (file.size() > suffix.size() &&
        file.compare(file.size() - suffix.size(), suffix.size(), suffix) == 0) {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& path : paths) {
    std::string name = path.filename().string();
    name.resize(name.size() - suffix.size());
    goldens.push_back({name, ReadFile(path.string()),
                       (path.parent_path() / (name + ".response.json")).string()});
  }
  return goldens;
}

// POSTs every stored request to a live server on the fixture config and
// compares the bodies with the stored responses byte for byte.
Outcome GoldenResponses(std::vector<json>* responses) {
  Service service;
  service.Load(FixtureConfig());
  HttpServer server(service);
  const int port = server.BindToAnyPort("127.0.0.1");
  std::thread thread([&server] { server.Listen(); });
  server.WaitUntilReady();
  httplib::Client client("127.0.0.1", port);

  const bool update = std::getenv("MDMORPH_UPDATE_GOLDEN") != nullptr;
  const auto goldens = LoadGoldens();
  int matched = 0;
  std::string failures;
  for (const Golden& g : goldens) {
    // Two posts so run-to-run drift inside one process shows up too.
    auto first = client.Post("/api/disambiguate", g.request, "application/json");
    auto second = client.Post("/api/disambiguate", g.request, "application/json");
    if (!first || !second || first->status != 200 ||
        first->body != second->body) {
      failures += " " + g.name + "(request)";
      continue;
    }
    const std::string body = first->body + "\n";
    responses->push_back(json::parse(first->body));
    if (update) WriteFile(g.response_path, body);
    std::string stored;
    try {
      stored = ReadFile(g.response_path);
    } catch (const std::exception&) {
      failures += " " + g.name + "(missing)";
      continue;
    }
    if (stored == body) {
      ++matched;
    } else {
      failures += " " + g.name;
    }
  }
  server.Stop();
  thread.join();
  return {goldens.size() == 10 && matched == 10,
          std::to_string(matched) + "/" + std::to_string(goldens.size()) +
              " byte-identical (need 10/10)" +
              (failures.empty() ? "" : ", mismatched:" + failures)};
}

// Views of every golden response agree with each word's top analysis.
Outcome ViewConsistency(const std::vector<json>& responses) {
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string piece; in >> piece;) out.push_back(piece);
    return out;
  };
  int words = 0;
  int bad = 0;
  for (const json& r : responses) {
    const auto tokenized = split(r["views"]["tokenized"]);
    const auto lemmatized = split(r["views"]["lemmatized"]);
    const auto diac_pos = split(r["views"]["diac_pos"]);
    const json& list = r["words"];
    if (tokenized.size() != list.size() || lemmatized.size() != list.size() ||
        diac_pos.size() != list.size()) {
      ++bad;
      continue;
    }
    for (size_t i = 0; i < list.size(); ++i) {
      ++words;
      const json& top = list[i]["top"];
      std::string joined = tokenized[i];
      joined.erase(std::remove(joined.begin(), joined.end(), '+'), joined.end());
      const std::string pos = diac_pos[i].substr(diac_pos[i].rfind('/') + 1);
      if (joined != top["diac"] || lemmatized[i] != top["lemma"] ||
          pos != top["pos"]) {
        ++bad;
      }
    }
  }
  return {!responses.empty() && bad == 0,
          std::to_string(words) + " words in " +
              std::to_string(responses.size()) + " responses, " +
              std::to_string(bad) + " inconsistent"};
}

Outcome DbStatsAmbiguity() {
  const CliResult r =
      RunCli({"db-stats", "--db", ToyDbPath(Dialect::kMsa), "--words",
              DataPath("fixtures/ambiguity-words.txt")});
  const std::string key = "avg_ambiguity ";
  const size_t at = r.out.find(key);
  std::string value = "missing";
  bool pass = false;
  if (r.exit_code == 0 && at != std::string::npos) {
    value = r.out.substr(at + key.size(), r.out.find('\n', at) - at - key.size());
    pass = std::abs(std::stod(value) - 1.5) < 1e-12;
  }
  return {pass, "db-stats exit " + std::to_string(r.exit_code) +
                    ", avg_ambiguity " + value + " (want 1.5)"};
}

int Run() {
  std::vector<json> golden_responses;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"analyzer-oracle-equivalence", AnalyzerOracle},
      {"forward-backward-vs-enumeration", ForwardBackward},
      {"mnb-oracle-equivalence", MnbOracle},
      {"did-synthetic-accuracy", DidAccuracy},
      {"disambiguation-synthetic-accuracy", DisambiguationAccuracy},
      {"pipeline-golden-responses",
       [&] { return GoldenResponses(&golden_responses); }},
      {"view-consistency",
       [&] { return ViewConsistency(golden_responses); }},
      {"db-stats-avg-ambiguity", DbStatsAmbiguity},
  };
  int failed = 0;
  for (const auto& [name, check] : checks) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail
              << std::endl;
  }
  std::cout << (checks.size() - failed) << "/" << checks.size()
            << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace mdmorph::testing

int main() { return mdmorph::testing::Run(); }

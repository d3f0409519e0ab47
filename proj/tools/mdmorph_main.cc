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

// Command-line entry point: training, batch analysis, database checks and
// the HTTP service.
//
// Exit status: 0 on success, 1 on runtime or data errors, 2 on usage errors.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdmorph/analyzer.h"
#include "mdmorph/did.h"
#include "mdmorph/errors.h"
#include "mdmorph/file_util.h"
#include "mdmorph/morph_db.h"
#include "mdmorph/pipeline.h"
#include "mdmorph/script.h"
#include "mdmorph/service.h"
#include "mdmorph/tagger.h"
#include "mdmorph/utf8.h"

namespace mdmorph {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// Thrown for flag combinations CLI11 cannot express.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string db;
  std::string tagger;
  std::string did_model;
  std::string dialect = "auto";
  std::string corpus;
  std::string out;
  std::string config;
  std::string words;
  std::string encoding;
  std::string text;
  int port = -1;
  double k = -1.0;
  double lm_k = 0.5;
  double lambda = 1.0;
};

// Positional text if given, else every line of standard input.
std::vector<std::string> InputLines(const Options& opts) {
  std::vector<std::string> lines;
  if (!opts.text.empty()) {
    lines.push_back(opts.text);
    return lines;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// --encoding if given, else the script of the --db document, else Arabic.
Encoding ResolveEncoding(const Options& opts, const std::string& db_document) {
  if (!opts.encoding.empty()) return ParseEncoding(opts.encoding);
  if (!db_document.empty()) return DeclaredScript(db_document);
  return Encoding::kArabic;
}

bool Blank(const std::string& line) { return SplitOnWhitespace(line).empty(); }

int RunAnalyze(const Options& opts) {
  const std::string doc = ReadFile(opts.db);
  const MorphDatabase db = LoadDb(doc);
  const Encoding encoding = ResolveEncoding(opts, doc);
  for (const auto& line : InputLines(opts)) {
    if (Blank(line)) continue;
    json words = json::array();
    for (const auto& word : WordTokenize(DecodeInput(line, encoding))) {
      json analyses = json::array();
      for (const auto& a : AnalyzeWithBackoff(word, db)) {
        json item = AnalysisToJson(a, encoding);
        item.erase("score");
        item["source"] = AnalysisSourceName(a.source);
        analyses.push_back(item);
      }
      words.push_back({{"raw", EncodeOutput(word, encoding)},
                       {"analyses", analyses}});
    }
    std::cout << json{{"text", line}, {"words", words}}.dump() << "\n";
  }
  return kExitOk;
}

int RunDisambiguate(const Options& opts) {
  const DialectChoice choice = ParseDialectChoice(opts.dialect);
  Service service;
  if (!opts.config.empty()) {
    if (!opts.db.empty() || !opts.tagger.empty()) {
      throw UsageError("--config cannot be combined with --db/--tagger");
    }
    ServiceConfig config = ServiceConfig::LoadFile(opts.config);
    if (!opts.encoding.empty()) config.encoding = ParseEncoding(opts.encoding);
    service.Load(config);
  } else {
    if (opts.db.empty() || opts.tagger.empty()) {
      throw UsageError("disambiguate needs --config or both --db and --tagger");
    }
    const std::string doc = ReadFile(opts.db);
    MorphDatabase db = LoadDb(doc);
    const Dialect dialect = db.dialect();
    if (auto fixed = FixedDialect(choice); fixed && *fixed != dialect) {
      throw UsageError("--dialect does not match the database dialect");
    }
    std::optional<DidModel> did;
    if (!opts.did_model.empty()) {
      did = DidModel::FromJson(ReadFile(opts.did_model));
    } else if (choice == DialectChoice::kAuto) {
      throw UsageError("--dialect auto needs --did-model or --config");
    }
    Registry registry;
    registry.emplace(dialect,
                     DialectResources{std::move(db), TaggerModel::FromJson(
                                                         ReadFile(opts.tagger))});
    service.Load(std::move(registry), std::move(did),
                 ResolveEncoding(opts, doc));
  }
  if (choice == DialectChoice::kAuto && service.did() == nullptr) {
    throw UsageError("--dialect auto needs a DID model");
  }
  const Encoding encoding = service.encoding();
  for (const auto& line : InputLines(opts)) {
    if (Blank(line)) continue;
    const DocumentResult result = Process(DecodeInput(line, encoding), choice,
                                          service.registry(), service.did());
    std::cout << DocumentToJson(result, encoding).dump() << "\n";
  }
  return kExitOk;
}

int RunDid(const Options& opts) {
  const DialectChoice choice = ParseDialectChoice(opts.dialect);
  const Encoding encoding =
      opts.encoding.empty() ? Encoding::kArabic : ParseEncoding(opts.encoding);
  std::optional<DidModel> model;
  if (choice == DialectChoice::kAuto) {
    model = DidModel::FromJson(ReadFile(opts.did_model));
  }
  for (const auto& line : InputLines(opts)) {
    json out;
    if (model) {
      const DidResult result = model->Identify(DecodeInput(line, encoding));
      out = {{"label", result.label}, {"scores", result.scores}};
    } else {
      out = {{"label", DialectChoiceId(choice)}};
    }
    std::cout << out.dump() << "\n";
  }
  return kExitOk;
}

int RunTrainTagger(const Options& opts) {
  const Encoding encoding =
      opts.encoding.empty() ? Encoding::kArabic : ParseEncoding(opts.encoding);
  const auto corpus = ParseTaggedCorpus(ReadFile(opts.corpus), encoding);
  const double k = opts.k > 0 ? opts.k : TaggerModel::kDefaultSmoothing;
  const TaggerModel model = TaggerModel::Train(corpus, k);
  WriteFile(opts.out, model.ToJson());
  std::cout << "trained tagger: " << model.num_sentences() << " sentences, "
            << model.num_tags() << " tags, " << model.vocabulary_size()
            << " word types -> " << opts.out << "\n";
  return kExitOk;
}

int RunTrainDid(const Options& opts) {
  const Encoding encoding =
      opts.encoding.empty() ? Encoding::kArabic : ParseEncoding(opts.encoding);
  auto corpus = ParseDidCorpus(ReadFile(opts.corpus));
  for (auto& [label, sentence] : corpus) sentence = DecodeInput(sentence, encoding);
  DidOptions options;
  if (opts.k > 0) options.k = opts.k;
  options.lm_k = opts.lm_k;
  options.lambda = opts.lambda;
  const DidModel model = DidModel::Train(corpus, options);
  WriteFile(opts.out, model.ToJson());
  std::cout << "trained DID model: " << corpus.size() << " sentences, "
            << model.labels().size() << " labels -> " << opts.out << "\n";
  return kExitOk;
}

int RunDbValidate(const Options& opts) {
  const auto violations = ValidateDb(ReadFile(opts.db));
  if (violations.empty()) {
    std::cout << opts.db << ": OK\n";
    return kExitOk;
  }
  for (const auto& v : violations) std::cout << opts.db << ": " << v << "\n";
  return kExitRuntime;
}

int RunDbStats(const Options& opts) {
  const std::string doc = ReadFile(opts.db);
  const MorphDatabase db = LoadDb(doc);
  std::cout << "dialect " << DialectId(db.dialect()) << "\n"
            << "supports_diacritization "
            << (db.supports_diacritization() ? "true" : "false") << "\n"
            << "prefixes " << db.prefixes().size() << "\n"
            << "stems " << db.stems().size() << "\n"
            << "suffixes " << db.suffixes().size() << "\n"
            << "compat_ab " << db.compat_ab().size() << "\n"
            << "compat_bc " << db.compat_bc().size() << "\n"
            << "compat_ac " << db.compat_ac().size() << "\n";
  if (!opts.words.empty()) {
    const Encoding encoding = ResolveEncoding(opts, doc);
    std::vector<std::string> words;
    for (const auto& line : SplitOnWhitespace(ReadFile(opts.words))) {
      words.push_back(DecodeInput(line, encoding));
    }
    std::cout << "words " << words.size() << "\n"
              << "avg_ambiguity " << AverageAmbiguity(words, db) << "\n";
  }
  return kExitOk;
}

int RunServe(const Options& opts) {
  ServiceConfig config = ServiceConfig::LoadFile(opts.config);
  if (opts.port >= 0) config.port = opts.port;
  Service service;
  service.Load(config);
  HttpServer server(service);
  const int port = server.Bind(config.bind_address, config.port);
  std::cerr << "serving on " << config.bind_address << ":" << port << "\n";
  server.Listen();
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Multi-dialect Arabic morphological analysis and disambiguation"};
  app.require_subcommand(1);
  Options opts;

  const std::vector<std::string> dialects = {"auto", "msa", "egy", "glf", "lev"};
  const std::vector<std::string> encodings = {"arabic", "bw"};
  auto add_encoding = [&](CLI::App* cmd) {
    cmd->add_option("--encoding", opts.encoding,
                    "Text encoding of inputs and outputs")
        ->check(CLI::IsMember(encodings));
  };
  auto add_text = [&](CLI::App* cmd) {
    cmd->add_option("text", opts.text, "Input text (default: stdin lines)");
  };

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--config", opts.config, "Service config (or $CONFIG_PATH)");
  serve->add_option("--port", opts.port, "Port override");

  auto* analyze = app.add_subcommand("analyze", "Out-of-context analyses (JSONL)");
  analyze->add_option("--db", opts.db, "Morphological database")->required();
  add_encoding(analyze);
  add_text(analyze);

  auto* disamb =
      app.add_subcommand("disambiguate", "In-context disambiguation (JSONL)");
  disamb->add_option("--config", opts.config, "Service config");
  disamb->add_option("--db", opts.db, "Morphological database");
  disamb->add_option("--tagger", opts.tagger, "Tagger model");
  disamb->add_option("--did-model", opts.did_model, "DID model");
  disamb->add_option("--dialect", opts.dialect)->check(CLI::IsMember(dialects));
  add_encoding(disamb);
  add_text(disamb);

  auto* did = app.add_subcommand("did", "Dialect identification (JSONL)");
  did->add_option("--did-model", opts.did_model, "DID model");
  did->add_option("--dialect", opts.dialect)->check(CLI::IsMember(dialects));
  add_encoding(did);
  add_text(did);

  auto* train_tagger = app.add_subcommand("train-tagger", "Train a tagger");
  train_tagger->add_option("--corpus", opts.corpus)->required();
  train_tagger->add_option("--out", opts.out)->required();
  train_tagger->add_option("--k", opts.k, "Add-k smoothing (default 0.1)");
  add_encoding(train_tagger);

  auto* train_did = app.add_subcommand("train-did", "Train a DID model");
  train_did->add_option("--corpus", opts.corpus)->required();
  train_did->add_option("--out", opts.out)->required();
  train_did->add_option("--k", opts.k, "Feature smoothing (default 0.5)");
  train_did->add_option("--lm-k", opts.lm_k, "LM smoothing");
  train_did->add_option("--lambda", opts.lambda, "LM score weight");
  add_encoding(train_did);

  auto* db_validate = app.add_subcommand("db-validate", "Check a database");
  db_validate->add_option("--db", opts.db)->required();

  auto* db_stats = app.add_subcommand("db-stats", "Database statistics");
  db_stats->add_option("--db", opts.db)->required();
  db_stats->add_option("--words", opts.words, "Word list for avg_ambiguity");
  add_encoding(db_stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*did && opts.did_model.empty() && opts.dialect == "auto") {
      throw UsageError("did needs --did-model");
    }
    if (*serve) return RunServe(opts);
    if (*analyze) return RunAnalyze(opts);
    if (*disamb) return RunDisambiguate(opts);
    if (*did) return RunDid(opts);
    if (*train_tagger) return RunTrainTagger(opts);
    if (*train_did) return RunTrainDid(opts);
    if (*db_validate) return RunDbValidate(opts);
    if (*db_stats) return RunDbStats(opts);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace mdmorph

int main(int argc, char** argv) { return mdmorph::Main(argc, argv); }

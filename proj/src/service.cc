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

#include "mdmorph/service.h"

#include <cstdlib>
#include <filesystem>

#include "httplib.h"
#include "mdmorph/errors.h"
#include "mdmorph/file_util.h"
#include "mdmorph/utf8.h"

namespace mdmorph {

using nlohmann::json;

namespace {

constexpr const char* kJsonType = "application/json";

HttpReply ErrorReply(int status, std::string_view message) {
  return {status, json{{"error", message}}.dump()};
}

std::string Resolve(const std::string& base_dir, const std::string& path) {
  if (path.empty() || base_dir.empty()) return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

}  // namespace

ServiceConfig ServiceConfig::Parse(std::string_view document,
                                   const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("service config: ") + e.what());
  }
  try {
    ServiceConfig config;
    if (doc.contains("bind_address")) {
      config.bind_address = doc["bind_address"].get<std::string>();
    }
    if (doc.contains("port")) config.port = doc["port"].get<int>();
    if (doc.contains("encoding")) {
      config.encoding = ParseEncoding(doc["encoding"].get<std::string>());
    }
    if (doc.contains("did_model")) {
      config.did_model = Resolve(base_dir, doc["did_model"].get<std::string>());
    }
    for (const auto& [id, paths] : doc.at("dialects").items()) {
      config.dialects[ParseDialect(id)] = {
          Resolve(base_dir, paths.at("db").get<std::string>()),
          Resolve(base_dir, paths.at("tagger").get<std::string>())};
    }
    return config;
  } catch (const json::exception& e) {
    throw ParseError(std::string("service config: ") + e.what());
  }
}

ServiceConfig ServiceConfig::LoadFile(std::string path) {
  if (path.empty()) {
    const char* env = std::getenv("CONFIG_PATH");
    if (env == nullptr || *env == '\0') {
      throw InvalidArgument("no config file given and CONFIG_PATH is unset");
    }
    path = env;
  }
  ServiceConfig config = Parse(
      ReadFile(path), std::filesystem::path(path).parent_path().string());
  if (const char* port = std::getenv("PORT"); port != nullptr && *port) {
    try {
      config.port = std::stoi(port);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("bad PORT value '") + port + "'");
    }
  }
  return config;
}

json AnalysisToJson(const Analysis& analysis, Encoding encoding) {
  json features = json::object();
  for (size_t i = 0; i < kNumFeatures; ++i) {
    features[std::string(kFeatureNames[i])] = analysis.features[i];
  }
  json tokens = json::array();
  for (const auto& token : analysis.tokens) {
    tokens.push_back(EncodeOutput(token, encoding));
  }
  return {
      {"diac", EncodeOutput(analysis.diac, encoding)},
      {"pos", analysis.pos()},
      {"lemma", EncodeOutput(analysis.lemma, encoding)},
      {"tokens", tokens},
      {"gloss", analysis.gloss},
      {"features", features},
      {"score", analysis.score},
  };
}

json DocumentToJson(const DocumentResult& result, Encoding encoding) {
  json doc;
  doc["dialect_used"] = DialectId(result.dialect_used);
  if (result.dialect_scores) doc["dialect_scores"] = *result.dialect_scores;
  json words = json::array();
  for (const auto& word : result.words) {
    json analyses = json::array();
    for (const auto& analysis : word.analyses) {
      analyses.push_back(AnalysisToJson(analysis, encoding));
    }
    words.push_back({{"raw", EncodeOutput(word.raw, encoding)},
                     {"top", analyses.front()},
                     {"analyses", analyses}});
  }
  doc["words"] = words;
  json views = json::object();
  for (const auto& [name, text] : result.views) {
    views[name] = EncodeOutput(text, encoding);
  }
  doc["views"] = views;
  return doc;
}

void Service::Load(const ServiceConfig& config) {
  Registry registry;
  for (const auto& [dialect, paths] : config.dialects) {
    MorphDatabase db = LoadDbFile(paths.db);
    if (db.dialect() != dialect) {
      throw ValidationError("database " + paths.db + " is for dialect '" +
                            std::string(DialectId(db.dialect())) + "', not '" +
                            std::string(DialectId(dialect)) + "'");
    }
    registry.emplace(dialect, DialectResources{
                                  std::move(db),
                                  TaggerModel::FromJson(ReadFile(paths.tagger))});
  }
  std::optional<DidModel> did;
  if (!config.did_model.empty()) {
    did = DidModel::FromJson(ReadFile(config.did_model));
  }
  Load(std::move(registry), std::move(did), config.encoding);
}

void Service::Load(Registry registry, std::optional<DidModel> did,
                   Encoding encoding) {
  if (did) {
    for (const auto& label : did->labels()) {
      const auto dialect = FindDialect(label);
      if (!dialect || registry.count(*dialect) == 0) {
        throw ValidationError("DID label '" + label +
                              "' has no loaded dialect resources");
      }
    }
  }
  registry_ = std::move(registry);
  did_ = std::move(did);
  encoding_ = encoding;
}

HttpReply Service::Disambiguate(std::string_view body) const {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error&) {
    return ErrorReply(400, "request body is not valid JSON");
  }
  if (!request.is_object() || !request.contains("text") ||
      !request["text"].is_string() || !request.contains("dialect") ||
      !request["dialect"].is_string()) {
    return ErrorReply(400, "expected {\"text\": string, \"dialect\": string}");
  }
  DialectChoice choice;
  try {
    choice = ParseDialectChoice(request["dialect"].get<std::string>());
  } catch (const InvalidArgument&) {
    return ErrorReply(400, "dialect must be one of auto, msa, egy, glf, lev");
  }
  const std::string text =
      DecodeInput(request["text"].get<std::string>(), encoding_);
  if (SplitOnWhitespace(text).empty()) return ErrorReply(400, "empty input");
  try {
    const DocumentResult result =
        Process(text, choice, registry_, did_ ? &*did_ : nullptr);
    return {200, DocumentToJson(result, encoding_).dump()};
  } catch (const std::exception& e) {
    return ErrorReply(500, e.what());
  }
}

HttpReply Service::Dialects() const {
  json list = json::array();
  for (Dialect dialect : kAllDialects) {
    const auto it = registry_.find(dialect);
    if (it == registry_.end()) continue;
    list.push_back({{"id", DialectId(dialect)},
                    {"display_name", DialectDisplayName(dialect)},
                    {"supports_diacritization",
                     it->second.db.supports_diacritization()}});
  }
  return {200, list.dump()};
}

HttpReply Service::Health() const {
  json loaded = json::object();
  bool all = true;
  for (Dialect dialect : kAllDialects) {
    const bool present = registry_.count(dialect) > 0;
    loaded[std::string(DialectId(dialect))] = present;
    all = all && present;
  }
  loaded["did"] = did_.has_value();
  all = all && did_.has_value();
  return {200, json{{"status", all ? "ok" : "degraded"},
                    {"models_loaded", loaded}}
                   .dump()};
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(const Service& service) : impl_(std::make_unique<Impl>()) {
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, kJsonType);
  };
  auto& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Post("/api/disambiguate",
              [&service, send](const httplib::Request& req,
                               httplib::Response& res) {
                send(res, service.Disambiguate(req.body));
              });
  server.Get("/api/dialects",
             [&service, send](const httplib::Request&, httplib::Response& res) {
               send(res, service.Dialects());
             });
  server.Get("/api/health",
             [&service, send](const httplib::Request&, httplib::Response& res) {
               send(res, service.Health());
             });
  server.Options(R"(/api/.*)", [](const httplib::Request&,
                                  httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  server.set_exception_handler(
      [send](const httplib::Request&, httplib::Response& res,
             std::exception_ptr ep) {
        std::string message = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          message = e.what();
        } catch (...) {
        }
        send(res, ErrorReply(500, message));
      });
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& host, int port) {
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

int HttpServer::BindToAnyPort(const std::string& host) {
  const int port = impl_->server.bind_to_any_port(host);
  if (port < 0) throw Error("cannot bind " + host);
  return port;
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void HttpServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace mdmorph

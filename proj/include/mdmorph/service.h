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

#ifndef MDMORPH_SERVICE_H_
#define MDMORPH_SERVICE_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mdmorph/did.h"
#include "mdmorph/pipeline.h"
#include "mdmorph/script.h"

namespace mdmorph {

struct DialectPaths {
  std::string db;
  std::string tagger;
};

// Service configuration file (JSON):
//   {"bind_address": "0.0.0.0", "port": 8080, "encoding": "arabic",
//    "did_model": "did.json",
//    "dialects": {"msa": {"db": "...", "tagger": "..."}, ...}}
// Relative paths resolve against the config file's directory.
struct ServiceConfig {
  std::string bind_address = "0.0.0.0";
  int port = 8080;
  Encoding encoding = Encoding::kArabic;
  std::string did_model;
  std::map<Dialect, DialectPaths> dialects;

  static ServiceConfig Parse(std::string_view document,
                             const std::string& base_dir);
  // Reads `path`, or $CONFIG_PATH when `path` is empty; $PORT overrides the
  // port.
  static ServiceConfig LoadFile(std::string path);
};

// Wire format of a pipeline result. Arabic-script fields are written in
// `encoding`.
nlohmann::json AnalysisToJson(const Analysis& analysis, Encoding encoding);
nlohmann::json DocumentToJson(const DocumentResult& result, Encoding encoding);

struct HttpReply {
  int status = 200;
  std::string body;
};

// Request handlers over immutable, preloaded models. Handlers are const and
// safe to call concurrently once Load has returned.
class Service {
 public:
  Service() = default;

  // Loads every model named in the config. Call once, before serving.
  void Load(const ServiceConfig& config);
  // For callers that already hold the models.
  void Load(Registry registry, std::optional<DidModel> did, Encoding encoding);

  // POST /api/disambiguate with {"text": ..., "dialect": ...}.
  HttpReply Disambiguate(std::string_view body) const;
  // GET /api/dialects
  HttpReply Dialects() const;
  // GET /api/health
  HttpReply Health() const;

  const Registry& registry() const { return registry_; }
  const DidModel* did() const { return did_ ? &*did_ : nullptr; }
  Encoding encoding() const { return encoding_; }

 private:
  Registry registry_;
  std::optional<DidModel> did_;
  Encoding encoding_ = Encoding::kArabic;
};

// HTTP front end for a Service.
class HttpServer {
 public:
  explicit HttpServer(const Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns the bound port; throws Error on failure.
  int Bind(const std::string& host, int port);
  int BindToAnyPort(const std::string& host);
  // Blocks until Stop().
  void Listen();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mdmorph

#endif  // MDMORPH_SERVICE_H_

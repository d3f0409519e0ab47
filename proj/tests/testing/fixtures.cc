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

#include "testing/fixtures.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>

#include "mdmorph/file_util.h"
#include "mdmorph/script.h"

namespace mdmorph::testing {

std::string DataPath(std::string_view relative) {
  return std::string(MDMORPH_DATA_DIR) + "/" + std::string(relative);
}

std::string Ar(std::string_view buckwalter) {
  return Transliterator::Default().ToArabicLenient(buckwalter);
}

std::string Bw(std::string_view arabic) {
  return Transliterator::Default().ToBuckwalterLenient(arabic);
}

std::string ToyDbPath(Dialect dialect) {
  return DataPath("fixtures/toy-" + std::string(DialectId(dialect)) + ".json");
}

const MorphDatabase& ToyDb(Dialect dialect) {
  static std::mutex mu;
  static std::map<Dialect, MorphDatabase> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dialect);
  if (it == cache.end()) {
    it = cache.emplace(dialect, LoadDbFile(ToyDbPath(dialect))).first;
  }
  return it->second;
}

CombinedTag Tag(std::string_view serialized) {
  return CombinedTag::Parse(serialized);
}

std::string FixtureConfigPath() { return DataPath("fixtures/service.json"); }

const ServiceConfig& FixtureConfig() {
  static const ServiceConfig config =
      ServiceConfig::LoadFile(FixtureConfigPath());
  return config;
}

namespace {

const Service& FixtureService() {
  static const Service* service = [] {
    auto* s = new Service;
    s->Load(FixtureConfig());
    return s;
  }();
  return *service;
}

}  // namespace

const Registry& FixtureRegistry() { return FixtureService().registry(); }

const DidModel& FixtureDid() { return *FixtureService().did(); }

namespace {

std::string ShellQuote(std::string_view arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  return out + "'";
}

}  // namespace

CliResult RunCli(const std::vector<std::string>& args, std::string_view input) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("mdmorph-cli-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string in = (dir / "stdin").string();
  const std::string out = (dir / "stdout").string();
  const std::string err = (dir / "stderr").string();
  WriteFile(in, input);
  std::string command = ShellQuote(MDMORPH_CLI_PATH);
  for (const auto& arg : args) command += " " + ShellQuote(arg);
  command += " <" + ShellQuote(in) + " >" + ShellQuote(out) + " 2>" +
             ShellQuote(err);
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = ReadFile(out);
  result.err = ReadFile(err);
  std::filesystem::remove_all(dir);
  return result;
}

}  // namespace mdmorph::testing

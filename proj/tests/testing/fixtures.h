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

#ifndef MDMORPH_TESTS_TESTING_FIXTURES_H_
#define MDMORPH_TESTS_TESTING_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

#include "mdmorph/dialect.h"
#include "mdmorph/morph_db.h"
#include "mdmorph/did.h"
#include "mdmorph/pipeline.h"
#include "mdmorph/service.h"
#include "mdmorph/tagger.h"

namespace mdmorph::testing {

std::string DataPath(std::string_view relative);

// Buckwalter -> Arabic script; '+' and other unmapped characters pass.
std::string Ar(std::string_view buckwalter);
// Arabic script -> Buckwalter.
std::string Bw(std::string_view arabic);

// The shipped toy database for a dialect (data/fixtures/toy-<id>.json).
const MorphDatabase& ToyDb(Dialect dialect);
std::string ToyDbPath(Dialect dialect);

CombinedTag Tag(std::string_view serialized);

// Service configuration wired to the fixture databases and trained models.
std::string FixtureConfigPath();
const ServiceConfig& FixtureConfig();
// Registry and DID model loaded from the fixture configuration.
const Registry& FixtureRegistry();
const DidModel& FixtureDid();

// Combined tags of the toy-msa readings.
inline constexpr std::string_view kVerb3ms = "verb:p:3:m:s:a:i:na:na:na:na";
inline constexpr std::string_view kNounMp = "noun:na:na:m:p:na:na:na:na:na:na";

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the built command-line binary with `args`, feeding `input` on stdin.
CliResult RunCli(const std::vector<std::string>& args,
                 std::string_view input = "");

}  // namespace mdmorph::testing

#endif  // MDMORPH_TESTS_TESTING_FIXTURES_H_

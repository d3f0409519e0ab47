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

#ifndef MDMORPH_FEATURES_H_
#define MDMORPH_FEATURES_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace mdmorph {

inline constexpr size_t kNumFeatures = 11;

// Fixed feature order. This order defines the combined tag layout.
inline constexpr std::array<std::string_view, kNumFeatures> kFeatureNames = {
    "pos", "asp", "per", "gen", "num", "vox",
    "mod", "cas", "stt", "prc", "enc"};

inline constexpr std::string_view kUnspecified = "na";

enum FeatureIndex : size_t {
  kPos = 0, kAsp, kPer, kGen, kNum, kVox, kMod, kCas, kStt, kPrc, kEnc
};

std::optional<size_t> FindFeature(std::string_view name);

// Partial feature assignment as stored on lexicon entries.
using FeatureMap = std::map<std::string, std::string, std::less<>>;

// Total assignment: one value per feature, "na" where unspecified.
using FeatureBundle = std::array<std::string, kNumFeatures>;

FeatureBundle UnspecifiedBundle();

// Feature values end up inside colon-joined combined tags and '+'-joined
// token strings, so they must be nonempty and free of ':', '+' and spaces.
bool IsValidFeatureValue(std::string_view value);

}  // namespace mdmorph

#endif  // MDMORPH_FEATURES_H_

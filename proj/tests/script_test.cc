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

#include "mdmorph/script.h"

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "mdmorph/errors.h"
#include "testing/fixtures.h"

namespace mdmorph {
namespace {

using testing::Ar;

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(Normalize(""), "");
  EXPECT_EQ(Normalize(Ar(">krm")), Ar("Akrm"));
  EXPECT_EQ(Normalize(Ar("<ky")), Ar("Aky"));
  EXPECT_EQ(Normalize(Ar("|mn")), Ar("Amn"));
  EXPECT_EQ(Normalize(Ar("{bn")), Ar("Abn"));
  EXPECT_EQ(Normalize(Ar("ktb")), Ar("ktb"));
}

TEST(NormalizeTest, AlefMaqsuraBecomesYa) {
  EXPECT_EQ(Normalize(Ar("ElY")), Ar("Ely"));
}

TEST(NormalizeTest, TaMarbutaUntouched) {
  EXPECT_EQ(Normalize(Ar("mdrsp")), Ar("mdrsp"));
}

TEST(NormalizeTest, NonArabicPassesThrough) {
  EXPECT_EQ(Normalize("abc 123"), "abc 123");
}

TEST(NormalizationPolicyTest, RejectsChainedRewrite) {
  // 'A' is a rewrite target and a replacement at the same time.
  EXPECT_THROW(NormalizationPolicy({{U"أ", U'ا'},
                                    {U"ا", U'ي'}}),
               InvalidArgument);
}

TEST(StripDiacriticsTest, Examples) {
  EXPECT_EQ(StripDiacritics(Ar("kataba")), Ar("ktb"));
  EXPECT_EQ(StripDiacritics(""), "");
  EXPECT_EQ(StripDiacritics(Ar("ktb")), Ar("ktb"));
  EXPECT_EQ(StripDiacritics(Ar("kut~AbN")), Ar("ktAb"));
  EXPECT_EQ(StripDiacritics(Ar("Eilomo")), Ar("Elm"));
}

TEST(StripDiacriticsTest, DaggerAlefIsKept) {
  EXPECT_EQ(StripDiacritics(Ar("h`*A")), Ar("h`*A"));
}

TEST(TransliteratorTest, Examples) {
  const Transliterator& t = Transliterator::Default();
  EXPECT_EQ(t.ToArabic(""), "");
  EXPECT_EQ(t.ToArabic("ktb"), "كتب");
  EXPECT_EQ(t.ToBuckwalter("كتب"), "ktb");
}

TEST(TransliteratorTest, UnmappedCharacterNamesCharAndOffset) {
  const Transliterator& t = Transliterator::Default();
  try {
    t.ToArabic("kt#b");
    FAIL() << "expected InvalidArgument";
  } catch (const InvalidArgument& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("'#'"), std::string::npos) << message;
    EXPECT_NE(message.find("offset 2"), std::string::npos) << message;
  }
  EXPECT_THROW(t.ToBuckwalter("كx"), InvalidArgument);
}

TEST(TransliteratorTest, LenientPassesUnmappedThrough) {
  const Transliterator& t = Transliterator::Default();
  EXPECT_EQ(t.ToArabicLenient("k ."), "ك .");
  EXPECT_EQ(t.ToBuckwalterLenient("ك ."), "k .");
}

TEST(TransliteratorTest, FromStringSkipsComments) {
  const Transliterator t = Transliterator::FromString(
      "# comment\nb\t0628\n\nk\t0643\n");
  EXPECT_EQ(t.table().size(), 2u);
  EXPECT_EQ(t.ToArabic("kb"), "كب");
}

TEST(TransliteratorTest, FromStringRejectsDuplicates) {
  EXPECT_THROW(Transliterator::FromString("b\t0628\nb\t0643\n"), ParseError);
  EXPECT_THROW(Transliterator::FromString("b\t0628\nk\t0628\n"), ParseError);
  EXPECT_THROW(Transliterator::FromString("b 0628\n"), ParseError);
}

std::string RandomBuckwalter(std::mt19937& rng) {
  const auto& table = Transliterator::Default().table();
  std::vector<char> alphabet;
  for (const auto& [c, cp] : table) alphabet.push_back(c);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 12);
  std::string s;
  for (int i = len(rng); i > 0; --i) s.push_back(alphabet[pick(rng)]);
  return s;
}

TEST(TransliteratorTest, RoundTripRandomStrings) {
  const Transliterator& t = Transliterator::Default();
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::string bw = RandomBuckwalter(rng);
    EXPECT_EQ(t.ToBuckwalter(t.ToArabic(bw)), bw);
  }
}

TEST(NormalizeTest, IdempotentAndCommutesWithStripping) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::string x = Ar(RandomBuckwalter(rng));
    EXPECT_EQ(Normalize(Normalize(x)), Normalize(x));
    EXPECT_EQ(StripDiacritics(Normalize(x)), Normalize(StripDiacritics(x)));
  }
}

TEST(EncodingTest, ParseAndBoundaryConversion) {
  EXPECT_EQ(ParseEncoding("bw"), Encoding::kBuckwalter);
  EXPECT_EQ(ParseEncoding("arabic"), Encoding::kArabic);
  EXPECT_THROW(ParseEncoding("latin"), InvalidArgument);
  EXPECT_EQ(DecodeInput("ktb", Encoding::kBuckwalter), Ar("ktb"));
  EXPECT_EQ(DecodeInput("ktb", Encoding::kArabic), "ktb");
  EXPECT_EQ(EncodeOutput(Ar("wa+katab"), Encoding::kBuckwalter), "wa+katab");
}

}  // namespace
}  // namespace mdmorph

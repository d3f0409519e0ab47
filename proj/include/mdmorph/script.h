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

#ifndef MDMORPH_SCRIPT_H_
#define MDMORPH_SCRIPT_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mdmorph {

// Rewrites every character of `from` to `to`.
struct NormalizationRule {
  std::u32string from;
  char32_t to;
};

// Single-pass character rewriting. Replacement characters may not be rule
// targets, so applying a policy twice is the same as applying it once.
class NormalizationPolicy {
 public:
  explicit NormalizationPolicy(std::vector<NormalizationRule> rules);

  // Hamza-carrying Alef forms and Alef Wasla become bare Alef; Alef Maqsura
  // becomes Ya. Ta Marbuta is left alone.
  static const NormalizationPolicy& Default();

  std::string Apply(std::string_view text) const;
  const std::vector<NormalizationRule>& rules() const { return rules_; }

 private:
  std::vector<NormalizationRule> rules_;
};

std::string Normalize(std::string_view text);

// Tanween, short vowels, shadda and sukun (U+064B..U+0652).
bool IsDiacritic(char32_t cp);
std::string StripDiacritics(std::string_view text);

// The undiacritized, normalized form used for lexicon lookup.
inline std::string MatchForm(std::string_view text) {
  return StripDiacritics(Normalize(text));
}

// Bijective Buckwalter <-> Arabic script mapping loaded from a table file
// (`<bw-char> TAB <hex codepoint>` per line, `#` comments).
class Transliterator {
 public:
  static Transliterator FromString(std::string_view table);
  static Transliterator FromFile(const std::string& path);

  // Table from $MDMORPH_BW_TABLE, else the one shipped in data/.
  static const Transliterator& Default();

  // Strict conversions; an unmapped character raises InvalidArgument naming
  // the character and its offset.
  std::string ToArabic(std::string_view buckwalter) const;
  std::string ToBuckwalter(std::string_view arabic) const;

  // Characters outside the table pass through unchanged.
  std::string ToArabicLenient(std::string_view buckwalter) const;
  std::string ToBuckwalterLenient(std::string_view arabic) const;

  const std::map<char, char32_t>& table() const { return to_arabic_; }

 private:
  std::map<char, char32_t> to_arabic_;
  std::map<char32_t, char> to_buckwalter_;
};

// Text encoding at the I/O boundary. The engine itself always works on
// Arabic script.
enum class Encoding { kArabic, kBuckwalter };

Encoding ParseEncoding(std::string_view name);
std::string_view EncodingName(Encoding encoding);

// Lenient conversions between `encoding` and Arabic script.
std::string DecodeInput(std::string_view text, Encoding encoding);
std::string EncodeOutput(std::string_view text, Encoding encoding);

}  // namespace mdmorph

#endif  // MDMORPH_SCRIPT_H_

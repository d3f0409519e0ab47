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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mdmorph/errors.h"
#include "mdmorph/utf8.h"

namespace mdmorph {
namespace {

std::string DescribeChar(char32_t cp) {
  std::ostringstream os;
  os << "U+" << std::hex << std::uppercase << static_cast<uint32_t>(cp);
  if (cp >= 0x20 && cp < 0x7F) os << " '" << static_cast<char>(cp) << "'";
  return os.str();
}

}  // namespace

NormalizationPolicy::NormalizationPolicy(std::vector<NormalizationRule> rules)
    : rules_(std::move(rules)) {
  for (const auto& rule : rules_) {
    for (const auto& other : rules_) {
      if (other.from.find(rule.to) != std::u32string::npos) {
        throw InvalidArgument("normalization replacement " +
                              DescribeChar(rule.to) + " is also a rule target");
      }
    }
  }
}

const NormalizationPolicy& NormalizationPolicy::Default() {
  static const NormalizationPolicy policy({
      {U"آأإٱ", U'ا'},
      {U"ى", U'ي'},
  });
  return policy;
}

std::string NormalizationPolicy::Apply(std::string_view text) const {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : DecodeUtf8(text)) {
    for (const auto& rule : rules_) {
      if (rule.from.find(cp) != std::u32string::npos) {
        cp = rule.to;
        break;
      }
    }
    AppendUtf8(cp, &out);
  }
  return out;
}

std::string Normalize(std::string_view text) {
  return NormalizationPolicy::Default().Apply(text);
}

bool IsDiacritic(char32_t cp) { return cp >= 0x064B && cp <= 0x0652; }

std::string StripDiacritics(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : DecodeUtf8(text)) {
    if (!IsDiacritic(cp)) AppendUtf8(cp, &out);
  }
  return out;
}

Transliterator Transliterator::FromString(std::string_view table) {
  Transliterator result;
  std::istringstream in{std::string(table)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab != 1) {
      throw ParseError("transliteration table line " + std::to_string(line_no) +
                       ": expected '<char> TAB <hex>'");
    }
    const char bw = line[0];
    char32_t cp;
    try {
      size_t used = 0;
      cp = static_cast<char32_t>(std::stoul(line.substr(2), &used, 16));
      if (used != line.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("transliteration table line " + std::to_string(line_no) +
                       ": bad code point '" + line.substr(2) + "'");
    }
    if (!result.to_arabic_.emplace(bw, cp).second ||
        !result.to_buckwalter_.emplace(cp, bw).second) {
      throw ParseError("transliteration table line " + std::to_string(line_no) +
                       ": mapping is not one-to-one");
    }
  }
  return result;
}

Transliterator Transliterator::FromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read transliteration table: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromString(buffer.str());
}

const Transliterator& Transliterator::Default() {
  static const Transliterator table = [] {
    const char* env = std::getenv("MDMORPH_BW_TABLE");
    return FromFile(env != nullptr ? env
                                   : std::string(MDMORPH_DATA_DIR) +
                                         "/buckwalter.tsv");
  }();
  return table;
}

std::string Transliterator::ToArabic(std::string_view buckwalter) const {
  std::string out;
  for (size_t i = 0; i < buckwalter.size(); ++i) {
    const auto it = to_arabic_.find(buckwalter[i]);
    if (it == to_arabic_.end()) {
      throw InvalidArgument(
          "unmapped Buckwalter character " +
          DescribeChar(static_cast<unsigned char>(buckwalter[i])) +
          " at offset " + std::to_string(i));
    }
    AppendUtf8(it->second, &out);
  }
  return out;
}

std::string Transliterator::ToBuckwalter(std::string_view arabic) const {
  std::string out;
  const std::u32string chars = DecodeUtf8(arabic);
  for (size_t i = 0; i < chars.size(); ++i) {
    const auto it = to_buckwalter_.find(chars[i]);
    if (it == to_buckwalter_.end()) {
      throw InvalidArgument("unmapped Arabic character " +
                            DescribeChar(chars[i]) + " at offset " +
                            std::to_string(i));
    }
    out.push_back(it->second);
  }
  return out;
}

std::string Transliterator::ToArabicLenient(std::string_view buckwalter) const {
  std::string out;
  for (char32_t cp : DecodeUtf8(buckwalter)) {
    if (cp < 0x80) {
      const auto it = to_arabic_.find(static_cast<char>(cp));
      if (it != to_arabic_.end()) cp = it->second;
    }
    AppendUtf8(cp, &out);
  }
  return out;
}

std::string Transliterator::ToBuckwalterLenient(std::string_view arabic) const {
  std::string out;
  for (char32_t cp : DecodeUtf8(arabic)) {
    const auto it = to_buckwalter_.find(cp);
    if (it != to_buckwalter_.end()) {
      out.push_back(it->second);
    } else {
      AppendUtf8(cp, &out);
    }
  }
  return out;
}

Encoding ParseEncoding(std::string_view name) {
  if (name == "arabic" || name == "utf8") return Encoding::kArabic;
  if (name == "bw" || name == "buckwalter") return Encoding::kBuckwalter;
  throw InvalidArgument("unknown encoding '" + std::string(name) + "'");
}

std::string_view EncodingName(Encoding encoding) {
  return encoding == Encoding::kArabic ? "arabic" : "bw";
}

std::string DecodeInput(std::string_view text, Encoding encoding) {
  if (encoding == Encoding::kArabic) return std::string(text);
  return Transliterator::Default().ToArabicLenient(text);
}

std::string EncodeOutput(std::string_view text, Encoding encoding) {
  if (encoding == Encoding::kArabic) return std::string(text);
  return Transliterator::Default().ToBuckwalterLenient(text);
}

}  // namespace mdmorph

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

#ifndef MDMORPH_UTF8_H_
#define MDMORPH_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace mdmorph {

// Decodes UTF-8. Malformed sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);

void AppendUtf8(char32_t cp, std::string* out);
std::string EncodeUtf8(std::u32string_view text);

// Number of code points.
size_t Utf8Length(std::string_view text);

bool IsUnicodeSpace(char32_t cp);

// Splits on runs of Unicode whitespace; no empty pieces.
std::vector<std::string> SplitOnWhitespace(std::string_view text);

// ASCII punctuation, Latin-1 and general punctuation blocks, and the
// Arabic comma / semicolon / question mark / full stop.
bool IsPunctuation(char32_t cp);

}  // namespace mdmorph

#endif  // MDMORPH_UTF8_H_

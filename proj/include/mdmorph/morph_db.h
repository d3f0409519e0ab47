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

#ifndef MDMORPH_MORPH_DB_H_
#define MDMORPH_MORPH_DB_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdmorph/dialect.h"
#include "mdmorph/features.h"
#include "mdmorph/script.h"

namespace mdmorph {

// One prefix, stem or suffix of the lexicon. All forms are Arabic script.
struct MorphEntry {
  std::string match_form;  // undiacritized, normalized; empty for null affixes
  std::string diac;
  std::string category;
  FeatureMap features;
  std::string lemma;  // stems only
  std::string gloss;  // stems only
  // Proclitics end in '+', enclitics start with '+', stem tokens carry no
  // marker. Joined without markers they spell `diac`.
  std::vector<std::string> tokens;

  bool operator==(const MorphEntry&) const = default;
};

// Removes the '+' clitic markers and concatenates.
std::string JoinTokensWithoutMarkers(const std::vector<std::string>& tokens);

using CategoryPair = std::pair<std::string, std::string>;

// A dialect's lexicon: three entry tables plus the prefix-stem, stem-suffix
// and prefix-suffix compatibility tables. Immutable once loaded.
class MorphDatabase {
 public:
  Dialect dialect() const { return dialect_; }
  bool supports_diacritization() const { return supports_diacritization_; }

  const std::vector<MorphEntry>& prefixes() const { return prefixes_; }
  const std::vector<MorphEntry>& stems() const { return stems_; }
  const std::vector<MorphEntry>& suffixes() const { return suffixes_; }

  const std::set<CategoryPair>& compat_ab() const { return compat_ab_; }
  const std::set<CategoryPair>& compat_bc() const { return compat_bc_; }
  const std::set<CategoryPair>& compat_ac() const { return compat_ac_; }

  // Longest affix match form, in code points.
  size_t max_prefix_len() const { return max_prefix_len_; }
  size_t max_suffix_len() const { return max_suffix_len_; }

  // Indices into the entry tables with the given match form.
  const std::vector<size_t>& PrefixesMatching(std::string_view form) const;
  const std::vector<size_t>& StemsMatching(std::string_view form) const;
  const std::vector<size_t>& SuffixesMatching(std::string_view form) const;

  bool PrefixStemCompatible(const std::string& prefix_cat,
                            const std::string& stem_cat) const;
  bool StemSuffixCompatible(const std::string& stem_cat,
                            const std::string& suffix_cat) const;
  bool PrefixSuffixCompatible(const std::string& prefix_cat,
                              const std::string& suffix_cat) const;

 private:
  friend class MorphDbBuilder;
  using Index = std::map<std::string, std::vector<size_t>, std::less<>>;

  void BuildIndexes();

  Dialect dialect_ = Dialect::kMsa;
  bool supports_diacritization_ = true;
  std::vector<MorphEntry> prefixes_;
  std::vector<MorphEntry> stems_;
  std::vector<MorphEntry> suffixes_;
  std::set<CategoryPair> compat_ab_;
  std::set<CategoryPair> compat_bc_;
  std::set<CategoryPair> compat_ac_;
  Index prefix_index_;
  Index stem_index_;
  Index suffix_index_;
  size_t max_prefix_len_ = 0;
  size_t max_suffix_len_ = 0;
};

// Parses and validates a database document (JSON). Throws ParseError for
// malformed documents and ValidationError listing every violated rule.
MorphDatabase LoadDb(std::string_view document);
MorphDatabase LoadDbFile(const std::string& path);

// Returns every rule violation of a well-formed document; empty when valid.
// Malformed documents still throw ParseError.
std::vector<std::string> ValidateDb(std::string_view document);

// The script declared in a database document's meta section ("bw" or
// "arabic"); kArabic when absent. Throws ParseError on malformed JSON.
Encoding DeclaredScript(std::string_view document);

struct DbCapabilities {
  Dialect dialect;
  bool supports_diacritization;
};

DbCapabilities GetCapabilities(const MorphDatabase& db);

}  // namespace mdmorph

#endif  // MDMORPH_MORPH_DB_H_

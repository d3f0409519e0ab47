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

#include "mdmorph/morph_db.h"

#include <algorithm>

#include "json.hpp"
#include "mdmorph/errors.h"
#include "mdmorph/file_util.h"
#include "mdmorph/script.h"
#include "mdmorph/utf8.h"

namespace mdmorph {

using nlohmann::json;

std::string JoinTokensWithoutMarkers(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& token : tokens) {
    for (char c : token) {
      if (c != '+') out.push_back(c);
    }
  }
  return out;
}

const std::vector<size_t>& LookupIndex(
    const std::map<std::string, std::vector<size_t>, std::less<>>& index,
    std::string_view form) {
  static const std::vector<size_t> kEmpty;
  const auto it = index.find(form);
  return it == index.end() ? kEmpty : it->second;
}

const std::vector<size_t>& MorphDatabase::PrefixesMatching(
    std::string_view form) const {
  return LookupIndex(prefix_index_, form);
}

const std::vector<size_t>& MorphDatabase::StemsMatching(
    std::string_view form) const {
  return LookupIndex(stem_index_, form);
}

const std::vector<size_t>& MorphDatabase::SuffixesMatching(
    std::string_view form) const {
  return LookupIndex(suffix_index_, form);
}

bool MorphDatabase::PrefixStemCompatible(const std::string& prefix_cat,
                                         const std::string& stem_cat) const {
  return compat_ab_.count({prefix_cat, stem_cat}) > 0;
}

bool MorphDatabase::StemSuffixCompatible(const std::string& stem_cat,
                                         const std::string& suffix_cat) const {
  return compat_bc_.count({stem_cat, suffix_cat}) > 0;
}

bool MorphDatabase::PrefixSuffixCompatible(
    const std::string& prefix_cat, const std::string& suffix_cat) const {
  return compat_ac_.count({prefix_cat, suffix_cat}) > 0;
}

void MorphDatabase::BuildIndexes() {
  auto build = [](const std::vector<MorphEntry>& entries, Index* index,
                  size_t* max_len) {
    for (size_t i = 0; i < entries.size(); ++i) {
      (*index)[entries[i].match_form].push_back(i);
      if (max_len != nullptr) {
        *max_len = std::max(*max_len, Utf8Length(entries[i].match_form));
      }
    }
  };
  build(prefixes_, &prefix_index_, &max_prefix_len_);
  build(stems_, &stem_index_, nullptr);
  build(suffixes_, &suffix_index_, &max_suffix_len_);
}

// Turns a parsed document into a database, collecting rule violations.
class MorphDbBuilder {
 public:
  explicit MorphDbBuilder(std::vector<std::string>* violations)
      : violations_(violations) {}

  MorphDatabase Build(const json& doc) {
    if (!doc.is_object()) throw ParseError("database document: expected object");
    for (const auto& [key, value] : doc.items()) {
      static const std::set<std::string> kKnown = {
          "meta", "prefixes", "stems", "suffixes",
          "compat_ab", "compat_bc", "compat_ac"};
      if (kKnown.count(key) == 0) {
        throw ParseError("database document: unknown field '" + key + "'");
      }
    }
    ParseMeta(Require(doc, "meta", ""));
    db_.prefixes_ = ParseTable(doc, "prefixes", Kind::kPrefix);
    db_.stems_ = ParseTable(doc, "stems", Kind::kStem);
    db_.suffixes_ = ParseTable(doc, "suffixes", Kind::kSuffix);
    db_.compat_ab_ = ParseCompat(doc, "compat_ab");
    db_.compat_bc_ = ParseCompat(doc, "compat_bc");
    db_.compat_ac_ = ParseCompat(doc, "compat_ac");
    Validate();
    db_.BuildIndexes();
    return std::move(db_);
  }

 private:
  enum class Kind { kPrefix, kStem, kSuffix };

  static const json& Require(const json& obj, const std::string& key,
                             const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      throw ParseError((where.empty() ? "" : where + ".") + key +
                       ": missing field");
    }
    return *it;
  }

  static std::string RequireString(const json& obj, const std::string& key,
                                   const std::string& where) {
    const json& value = Require(obj, key, where);
    if (!value.is_string()) {
      throw ParseError(where + "." + key + ": expected string");
    }
    return value.get<std::string>();
  }

  void Violation(std::string message) {
    violations_->push_back(std::move(message));
  }

  void ParseMeta(const json& meta) {
    if (!meta.is_object()) throw ParseError("meta: expected object");
    const std::string dialect = RequireString(meta, "dialect", "meta");
    const json& diac = Require(meta, "supports_diacritization", "meta");
    if (!diac.is_boolean()) {
      throw ParseError("meta.supports_diacritization: expected boolean");
    }
    db_.supports_diacritization_ = diac.get<bool>();
    if (meta.contains("script")) {
      if (!meta["script"].is_string()) {
        throw ParseError("meta.script: expected string");
      }
      const std::string script = meta["script"].get<std::string>();
      if (script == "bw") {
        buckwalter_ = true;
      } else if (script != "arabic") {
        throw ParseError("meta.script: expected \"arabic\" or \"bw\"");
      }
    }
    if (auto d = FindDialect(dialect)) {
      db_.dialect_ = *d;
    } else {
      throw ParseError("meta.dialect: unknown dialect '" + dialect + "'");
    }
    if (db_.dialect_ == Dialect::kGlf && db_.supports_diacritization_) {
      Violation("meta: the glf database must set supports_diacritization=false");
    }
  }

  // Converts a Buckwalter field to Arabic script; '+' markers survive.
  std::string Script(const std::string& text, const std::string& where) {
    if (!buckwalter_) return text;
    std::string out;
    size_t begin = 0;
    while (begin <= text.size()) {
      size_t plus = text.find('+', begin);
      if (plus == std::string::npos) plus = text.size();
      try {
        out += Transliterator::Default().ToArabic(
            std::string_view(text).substr(begin, plus - begin));
      } catch (const InvalidArgument& e) {
        Violation(where + ": " + e.what());
        return text;
      }
      if (plus < text.size()) out.push_back('+');
      begin = plus + 1;
    }
    return out;
  }

  std::vector<MorphEntry> ParseTable(const json& doc, const std::string& name,
                                     Kind kind) {
    const json& table = Require(doc, name, "");
    if (!table.is_array()) throw ParseError(name + ": expected array");
    std::vector<MorphEntry> entries;
    for (size_t i = 0; i < table.size(); ++i) {
      const std::string where = name + "[" + std::to_string(i) + "]";
      entries.push_back(ParseEntry(table[i], where, kind));
    }
    return entries;
  }

  MorphEntry ParseEntry(const json& obj, const std::string& where, Kind kind) {
    if (!obj.is_object()) throw ParseError(where + ": expected object");
    static const std::set<std::string> kKnown = {
        "match_form", "diac", "category", "features",
        "lemma", "gloss", "tokens"};
    for (const auto& [key, value] : obj.items()) {
      if (kKnown.count(key) == 0) {
        throw ParseError(where + ": unknown field '" + key + "'");
      }
    }
    MorphEntry entry;
    entry.match_form =
        Script(RequireString(obj, "match_form", where), where + ".match_form");
    entry.diac = Script(RequireString(obj, "diac", where), where + ".diac");
    entry.category = RequireString(obj, "category", where);

    const json& features = Require(obj, "features", where);
    if (!features.is_object()) {
      throw ParseError(where + ".features: expected object");
    }
    for (const auto& [key, value] : features.items()) {
      if (!value.is_string()) {
        throw ParseError(where + ".features." + key + ": expected string");
      }
      entry.features[key] = value.get<std::string>();
    }

    const json& tokens = Require(obj, "tokens", where);
    if (!tokens.is_array()) throw ParseError(where + ".tokens: expected array");
    for (const auto& token : tokens) {
      if (!token.is_string()) {
        throw ParseError(where + ".tokens: expected array of strings");
      }
      entry.tokens.push_back(
          Script(token.get<std::string>(), where + ".tokens"));
    }

    for (const char* key : {"lemma", "gloss"}) {
      if (!obj.contains(key)) continue;
      if (!obj[key].is_string()) {
        throw ParseError(where + "." + key + ": expected string");
      }
    }
    if (obj.contains("lemma")) {
      entry.lemma = Script(obj["lemma"].get<std::string>(), where + ".lemma");
    }
    if (obj.contains("gloss")) entry.gloss = obj["gloss"].get<std::string>();

    CheckEntry(entry, where, kind);
    return entry;
  }

  void CheckEntry(const MorphEntry& entry, const std::string& where,
                  Kind kind) {
    if (entry.category.empty()) Violation(where + ": empty category");
    if (JoinTokensWithoutMarkers(entry.tokens) != entry.diac) {
      Violation(where + ": tokens do not spell diac '" + entry.diac + "'");
    }
    for (const auto& token : entry.tokens) {
      const bool leading = !token.empty() && token.front() == '+';
      const bool trailing = !token.empty() && token.back() == '+';
      const size_t markers = std::count(token.begin(), token.end(), '+');
      bool ok;
      switch (kind) {
        case Kind::kPrefix: ok = trailing && markers == 1; break;
        case Kind::kSuffix: ok = leading && markers == 1; break;
        default: ok = markers == 0; break;
      }
      if (!ok || token.size() == markers) {
        Violation(where + ": token '" + token + "' has misplaced '+' markers");
      }
    }
    if (entry.match_form != MatchForm(entry.diac)) {
      Violation(where + ": match_form '" + entry.match_form +
                "' is not the undiacritized normalized diac");
    }
    for (const auto& [key, value] : entry.features) {
      if (!FindFeature(key)) {
        Violation(where + ": unknown feature '" + key + "'");
      } else if (!IsValidFeatureValue(value)) {
        Violation(where + ": invalid value '" + value + "' for feature " + key);
      }
    }
    if (kind == Kind::kStem) {
      if (entry.match_form.empty()) Violation(where + ": stem with empty form");
      if (entry.lemma.empty()) Violation(where + ": stem without lemma");
      if (entry.gloss.empty()) Violation(where + ": stem without gloss");
    } else if (!entry.lemma.empty() || !entry.gloss.empty()) {
      Violation(where + ": affixes carry no lemma or gloss");
    }
  }

  std::set<CategoryPair> ParseCompat(const json& doc, const std::string& name) {
    const json& table = Require(doc, name, "");
    if (!table.is_array()) throw ParseError(name + ": expected array");
    std::set<CategoryPair> pairs;
    for (size_t i = 0; i < table.size(); ++i) {
      const json& pair = table[i];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        throw ParseError(name + "[" + std::to_string(i) +
                         "]: expected [category, category]");
      }
      if (!pairs.emplace(pair[0].get<std::string>(), pair[1].get<std::string>())
               .second) {
        Violation(name + "[" + std::to_string(i) + "]: duplicate pair");
      }
    }
    return pairs;
  }

  static std::set<std::string> Categories(const std::vector<MorphEntry>& t) {
    std::set<std::string> out;
    for (const auto& e : t) out.insert(e.category);
    return out;
  }

  void CheckDuplicates(const std::vector<MorphEntry>& entries,
                       const std::string& name) {
    for (size_t i = 0; i < entries.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (entries[i] == entries[j]) {
          Violation(name + "[" + std::to_string(i) + "]: duplicate of " + name +
                    "[" + std::to_string(j) + "]");
          break;
        }
      }
    }
  }

  void CheckCompat(const std::set<CategoryPair>& pairs, const std::string& name,
                   const std::set<std::string>& left_cats, const char* left,
                   const std::set<std::string>& right_cats, const char* right) {
    for (const auto& [a, b] : pairs) {
      if (left_cats.count(a) == 0) {
        Violation(name + ": category '" + a + "' appears on no " + left);
      }
      if (right_cats.count(b) == 0) {
        Violation(name + ": category '" + b + "' appears on no " + right);
      }
    }
  }

  void Validate() {
    if (db_.stems_.empty()) Violation("no stems");
    auto has_null = [](const std::vector<MorphEntry>& t) {
      return std::any_of(t.begin(), t.end(),
                         [](const MorphEntry& e) { return e.match_form.empty(); });
    };
    if (!has_null(db_.prefixes_)) Violation("no null prefix entry");
    if (!has_null(db_.suffixes_)) Violation("no null suffix entry");
    CheckDuplicates(db_.prefixes_, "prefixes");
    CheckDuplicates(db_.stems_, "stems");
    CheckDuplicates(db_.suffixes_, "suffixes");
    const auto pcats = Categories(db_.prefixes_);
    const auto scats = Categories(db_.stems_);
    const auto xcats = Categories(db_.suffixes_);
    CheckCompat(db_.compat_ab_, "compat_ab", pcats, "prefix", scats, "stem");
    CheckCompat(db_.compat_bc_, "compat_bc", scats, "stem", xcats, "suffix");
    CheckCompat(db_.compat_ac_, "compat_ac", pcats, "prefix", xcats, "suffix");
  }

  std::vector<std::string>* violations_;
  MorphDatabase db_;
  bool buckwalter_ = false;
};

namespace {

json ParseDocument(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("database document: ") + e.what());
  }
}

}  // namespace

std::vector<std::string> ValidateDb(std::string_view document) {
  std::vector<std::string> violations;
  MorphDbBuilder(&violations).Build(ParseDocument(document));
  return violations;
}

MorphDatabase LoadDb(std::string_view document) {
  std::vector<std::string> violations;
  MorphDatabase db = MorphDbBuilder(&violations).Build(ParseDocument(document));
  if (!violations.empty()) {
    std::string message = "invalid database: " + violations.front();
    if (violations.size() > 1) {
      message += " (and " + std::to_string(violations.size() - 1) + " more)";
    }
    throw ValidationError(message);
  }
  return db;
}

MorphDatabase LoadDbFile(const std::string& path) {
  return LoadDb(ReadFile(path));
}

Encoding DeclaredScript(std::string_view document) {
  const json doc = ParseDocument(document);
  if (doc.is_object() && doc.contains("meta") && doc["meta"].is_object() &&
      doc["meta"].contains("script") && doc["meta"]["script"].is_string()) {
    return ParseEncoding(doc["meta"]["script"].get<std::string>());
  }
  return Encoding::kArabic;
}

DbCapabilities GetCapabilities(const MorphDatabase& db) {
  return {db.dialect(), db.supports_diacritization()};
}

}  // namespace mdmorph

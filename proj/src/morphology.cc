// Copyright 2026 The mal2sign Authors.
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

#include "mal2sign/morphology.h"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "json_util.h"

namespace mal2sign {

namespace {

constexpr std::array<std::pair<PosTag, std::string_view>, 9> kTagNames = {{
    {PosTag::kNoun, "NOUN"},
    {PosTag::kVerb, "VERB"},
    {PosTag::kPronoun, "PRONOUN"},
    {PosTag::kAdjective, "ADJECTIVE"},
    {PosTag::kDeterminer, "DETERMINER"},
    {PosTag::kCopula, "COPULA"},
    {PosTag::kParticle, "PARTICLE"},
    {PosTag::kNumber, "NUMBER"},
    {PosTag::kUnknown, "UNKNOWN"},
}};

std::string KindPrefix(RuleTableError::Kind kind) {
  switch (kind) {
    case RuleTableError::Kind::kDuplicateRuleId:
      return "duplicate rule id: ";
    case RuleTableError::Kind::kEmptySuffix:
      return "empty suffix in rule: ";
    case RuleTableError::Kind::kEmptyRoot:
      return "empty root for exception: ";
    case RuleTableError::Kind::kMalformedDocument:
      return "malformed rule table at ";
  }
  return "";
}

bool EndsWith(std::u32string_view word, std::u32string_view suffix) {
  return word.size() >= suffix.size() &&
         word.substr(word.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view PosTagName(PosTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "UNKNOWN";
}

std::optional<PosTag> ParsePosTag(std::string_view name) {
  for (const auto& [t, n] : kTagNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

RuleTableError::RuleTableError(Kind kind, std::string subject)
    : std::runtime_error(KindPrefix(kind) + subject),
      kind_(kind),
      subject_(std::move(subject)) {}

RuleTable::RuleTable(std::vector<SuffixRule> rules,
                     std::map<std::u32string, ExceptionEntry> exceptions,
                     PosTag default_tag)
    : rules_(std::move(rules)),
      exceptions_(std::move(exceptions)),
      default_tag_(default_tag) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const SuffixRule& rule = rules_[i];
    if (!ids.insert(rule.id).second) {
      throw RuleTableError(RuleTableError::Kind::kDuplicateRuleId, rule.id);
    }
    if (rule.suffix.empty()) {
      throw RuleTableError(RuleTableError::Kind::kEmptySuffix, rule.id);
    }
    by_suffix_[rule.suffix].push_back(i);
    longest_suffix_ = std::max(longest_suffix_, rule.suffix.size());
  }
  for (auto& [suffix, indices] : by_suffix_) {
    std::sort(indices.begin(), indices.end(),
              [this](std::size_t a, std::size_t b) {
                return rules_[a].id < rules_[b].id;
              });
  }
  for (const auto& [word, entry] : exceptions_) {
    if (entry.root.empty()) {
      throw RuleTableError(RuleTableError::Kind::kEmptyRoot, EncodeUtf8(word));
    }
  }
}

RuleTable LoadRules(std::string_view document) {
  using internal::FieldError;
  using internal::Json;
  try {
    const Json doc = internal::ParseDocument(document);
    PosTag default_tag = PosTag::kUnknown;
    if (doc.is_object() && doc.contains("default_tag")) {
      auto tag = ParsePosTag(internal::String(doc, "default_tag", ""));
      if (!tag) throw FieldError("/default_tag", "unknown tag");
      default_tag = *tag;
    }

    auto read_features = [](const Json& obj, const std::string& path) {
      std::vector<std::string> features;
      if (!obj.contains("features")) return features;
      const Json& arr = internal::Array(obj, "features", path);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string()) {
          throw FieldError(internal::Child(path + "/features", i),
                           "expected string");
        }
        features.push_back(arr[i].get<std::string>());
      }
      return features;
    };
    auto read_tag = [](const Json& obj, const std::string& path) {
      auto tag = ParsePosTag(internal::String(obj, "tag", path));
      if (!tag) throw FieldError(path + "/tag", "unknown tag");
      return *tag;
    };

    std::vector<SuffixRule> rules;
    const Json& rule_array = internal::Array(doc, "rules", "");
    for (std::size_t i = 0; i < rule_array.size(); ++i) {
      const std::string path = internal::Child("/rules", i);
      const Json& r = rule_array[i];
      SuffixRule rule;
      rule.id = internal::String(r, "id", path);
      rule.suffix = DecodeUtf8(internal::String(r, "suffix", path));
      if (r.contains("replacement")) {
        rule.replacement = DecodeUtf8(internal::String(r, "replacement", path));
      }
      rule.tag = read_tag(r, path);
      rule.features = read_features(r, path);
      rules.push_back(std::move(rule));
    }

    std::map<std::u32string, ExceptionEntry> exceptions;
    if (doc.contains("exceptions")) {
      const Json& exc_array = internal::Array(doc, "exceptions", "");
      for (std::size_t i = 0; i < exc_array.size(); ++i) {
        const std::string path = internal::Child("/exceptions", i);
        const Json& e = exc_array[i];
        std::u32string word = DecodeUtf8(internal::String(e, "word", path));
        ExceptionEntry entry;
        entry.tag = read_tag(e, path);
        entry.features = read_features(e, path);
        entry.root = DecodeUtf8(internal::String(e, "root", path));
        if (!exceptions.emplace(std::move(word), std::move(entry)).second) {
          throw FieldError(path + "/word", "duplicate exception word");
        }
      }
    }
    return RuleTable(std::move(rules), std::move(exceptions), default_tag);
  } catch (const FieldError& e) {
    throw RuleTableError(RuleTableError::Kind::kMalformedDocument,
                         e.location + ": " + e.what());
  }
}

std::string SerializeRules(const RuleTable& table) {
  internal::OrderedJson doc;
  doc["format"] = "mal2sign-rules";
  doc["version"] = 1;
  doc["default_tag"] = PosTagName(table.default_tag());
  doc["rules"] = internal::OrderedJson::array();
  for (const SuffixRule& r : table.rules()) {
    doc["rules"].push_back({{"id", r.id},
                            {"suffix", EncodeUtf8(r.suffix)},
                            {"replacement", EncodeUtf8(r.replacement)},
                            {"tag", PosTagName(r.tag)},
                            {"features", r.features}});
  }
  doc["exceptions"] = internal::OrderedJson::array();
  for (const auto& [word, e] : table.exceptions()) {
    doc["exceptions"].push_back({{"word", EncodeUtf8(word)},
                                 {"tag", PosTagName(e.tag)},
                                 {"features", e.features},
                                 {"root", EncodeUtf8(e.root)}});
  }
  return doc.dump(2);
}

std::optional<std::size_t> LongestSuffixRule(std::u32string_view word,
                                             const RuleTable& rules) {
  if (word.size() < 2) return std::nullopt;
  // The remainder after stripping must be non-empty.
  std::size_t len = std::min(word.size() - 1, rules.longest_suffix());
  const auto& index = rules.by_suffix();
  for (; len > 0; --len) {
    auto it = index.find(std::u32string(word.substr(word.size() - len)));
    if (it == index.end()) continue;
    const std::vector<std::size_t>& candidates = it->second;
    // Rules of equal length but different suffix cannot both match, so the
    // first id in this bucket is the overall winner.
    return candidates.front();
  }
  return std::nullopt;
}

TaggedToken Analyze(const Token& token, const RuleTable& rules) {
  TaggedToken tt;
  tt.token = token;
  tt.tag = rules.default_tag();
  if (auto it = rules.exceptions().find(token.text);
      it != rules.exceptions().end()) {
    tt.tag = it->second.tag;
    tt.features = it->second.features;
    tt.match = Match::kException;
    return tt;
  }
  if (auto idx = LongestSuffixRule(token.text, rules)) {
    const SuffixRule& rule = rules.rules()[*idx];
    tt.tag = rule.tag;
    tt.features = rule.features;
    tt.match = Match::kRule;
    tt.rule_id = rule.id;
  }
  return tt;
}

std::u32string Stem(const TaggedToken& tt, const RuleTable& rules) {
  const std::u32string& text = tt.token.text;
  switch (tt.match) {
    case Match::kException: {
      auto it = rules.exceptions().find(text);
      if (it != rules.exceptions().end()) return it->second.root;
      return text;
    }
    case Match::kRule: {
      auto rule = std::find_if(
          rules.rules().begin(), rules.rules().end(),
          [&](const SuffixRule& r) { return r.id == tt.rule_id; });
      if (rule == rules.rules().end() || !EndsWith(text, rule->suffix) ||
          rule->suffix.size() >= text.size()) {
        return text;
      }
      return text.substr(0, text.size() - rule->suffix.size()) +
             rule->replacement;
    }
    case Match::kNone:
      break;
  }
  return text;
}

}  // namespace mal2sign

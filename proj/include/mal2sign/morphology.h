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

#ifndef MAL2SIGN_MORPHOLOGY_H_
#define MAL2SIGN_MORPHOLOGY_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mal2sign/script.h"

namespace mal2sign {

enum class PosTag {
  kNoun,
  kVerb,
  kPronoun,
  kAdjective,
  kDeterminer,
  kCopula,
  kParticle,
  kNumber,
  kUnknown,
};

// "NOUN", "VERB", ... as used in the rule-table and result documents.
std::string_view PosTagName(PosTag tag);
std::optional<PosTag> ParsePosTag(std::string_view name);

struct SuffixRule {
  std::string id;
  std::u32string suffix;
  std::u32string replacement;
  PosTag tag = PosTag::kUnknown;
  std::vector<std::string> features;
};

struct ExceptionEntry {
  PosTag tag = PosTag::kUnknown;
  std::vector<std::string> features;
  std::u32string root;
};

class RuleTableError : public std::runtime_error {
 public:
  enum class Kind {
    kDuplicateRuleId,
    kEmptySuffix,
    kEmptyRoot,
    kMalformedDocument,
  };

  RuleTableError(Kind kind, std::string subject);

  Kind kind() const { return kind_; }
  // Offending rule id, or a location inside the document.
  const std::string& subject() const { return subject_; }

 private:
  Kind kind_;
  std::string subject_;
};

// Immutable once constructed; the constructor validates ids and suffixes
// and throws RuleTableError.
class RuleTable {
 public:
  RuleTable() = default;
  RuleTable(std::vector<SuffixRule> rules,
            std::map<std::u32string, ExceptionEntry> exceptions,
            PosTag default_tag = PosTag::kUnknown);

  const std::vector<SuffixRule>& rules() const { return rules_; }
  const std::map<std::u32string, ExceptionEntry>& exceptions() const {
    return exceptions_;
  }
  PosTag default_tag() const { return default_tag_; }

  // Rule indices keyed by suffix, each list sorted by rule id.
  const std::map<std::u32string, std::vector<std::size_t>>& by_suffix() const {
    return by_suffix_;
  }
  std::size_t longest_suffix() const { return longest_suffix_; }

 private:
  std::vector<SuffixRule> rules_;
  std::map<std::u32string, ExceptionEntry> exceptions_;
  PosTag default_tag_ = PosTag::kUnknown;
  std::map<std::u32string, std::vector<std::size_t>> by_suffix_;
  std::size_t longest_suffix_ = 0;
};

std::string SerializeRules(const RuleTable& table);

// Parses and validates a rule-table document (see docs/formats.md).
RuleTable LoadRules(std::string_view document);

enum class Match { kNone, kRule, kException };

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::kUnknown;
  std::vector<std::string> features;
  Match match = Match::kNone;
  std::string rule_id;  // set when match == kRule
};

// Stage-one tagging: exception lookup first, otherwise the longest proper
// suffix rule (ties to the smallest rule id).
TaggedToken Analyze(const Token& token, const RuleTable& rules);

// Index into rules.rules() of the rule Analyze would pick, if any.
std::optional<std::size_t> LongestSuffixRule(std::u32string_view word,
                                             const RuleTable& rules);

// Stage-three stemming against the same table used by Analyze.
std::u32string Stem(const TaggedToken& tt, const RuleTable& rules);

}  // namespace mal2sign

#endif  // MAL2SIGN_MORPHOLOGY_H_

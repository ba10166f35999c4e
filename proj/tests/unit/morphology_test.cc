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

#include <random>

#include "doctest.h"
#include "json.hpp"
#include "test_support.h"

namespace mal2sign {
namespace {

using testing::MakeToken;

const RuleTable& DemoRules() { return testing::DemoResources().rules; }

std::string StemOf(std::string_view word) {
  return EncodeUtf8(Stem(Analyze(MakeToken(word), DemoRules()), DemoRules()));
}

constexpr std::string_view kFiveRules = R"({
  "rules": [
    {"id": "R1", "suffix": "കൾ", "replacement": "", "tag": "NOUN", "features": ["PLURAL"]},
    {"id": "R2", "suffix": "ങ്ങൾ", "replacement": "ം", "tag": "NOUN", "features": ["PLURAL"]},
    {"id": "R3", "suffix": "ക്ക്", "replacement": "", "tag": "NOUN", "features": ["DATIVE"]},
    {"id": "R4", "suffix": "ുന്നു", "replacement": "ുക", "tag": "VERB", "features": ["PRESENT"]},
    {"id": "R5", "suffix": "ിൽ", "replacement": "", "tag": "NOUN", "features": ["LOCATIVE"]}
  ],
  "exceptions": [
    {"word": "ഞാൻ", "tag": "PRONOUN", "features": [], "root": "ഞാൻ"}
  ]
})";

TEST_CASE("load_rules: well-formed table") {
  const RuleTable table = LoadRules(kFiveRules);
  CHECK(table.rules().size() == 5);
  CHECK(table.exceptions().size() == 1);
  CHECK(table.default_tag() == PosTag::kUnknown);
  CHECK(DemoRules().rules().size() >= 15);
  CHECK(DemoRules().exceptions().size() >= 20);
}

TEST_CASE("load_rules: duplicate id") {
  constexpr std::string_view doc = R"({"rules": [
    {"id": "R1", "suffix": "കൾ", "tag": "NOUN"},
    {"id": "R1", "suffix": "ിൽ", "tag": "NOUN"}]})";
  try {
    LoadRules(doc);
    FAIL("expected DuplicateRuleId");
  } catch (const RuleTableError& e) {
    CHECK(e.kind() == RuleTableError::Kind::kDuplicateRuleId);
    CHECK(e.subject() == "R1");
  }
}

TEST_CASE("load_rules: empty suffix") {
  try {
    LoadRules(R"({"rules": [{"id": "R9", "suffix": "", "tag": "NOUN"}]})");
    FAIL("expected EmptySuffix");
  } catch (const RuleTableError& e) {
    CHECK(e.kind() == RuleTableError::Kind::kEmptySuffix);
    CHECK(e.subject() == "R9");
  }
}

TEST_CASE("load_rules: malformed documents name the location") {
  auto location_of = [](std::string_view doc) {
    try {
      LoadRules(doc);
    } catch (const RuleTableError& e) {
      CHECK(e.kind() == RuleTableError::Kind::kMalformedDocument);
      return e.subject();
    }
    FAIL("expected MalformedDocument");
    return std::string();
  };
  CHECK(location_of("{").rfind("byte", 0) == 0);
  CHECK(location_of(R"({"rules": 3})").rfind("/rules", 0) == 0);
  CHECK(location_of(R"({"rules": [{"id": "X", "suffix": "a", "tag": "NOPE"}]})")
            .rfind("/rules/0/tag", 0) == 0);
  CHECK(location_of(R"({"rules": [], "exceptions": [{"word": "a", "tag": "NOUN"}]})")
            .rfind("/exceptions/0/root", 0) == 0);
}

TEST_CASE("load_rules: serialization round-trips") {
  const RuleTable again = LoadRules(SerializeRules(DemoRules()));
  REQUIRE(again.rules().size() == DemoRules().rules().size());
  for (std::size_t i = 0; i < again.rules().size(); ++i) {
    CHECK(again.rules()[i].id == DemoRules().rules()[i].id);
    CHECK(again.rules()[i].suffix == DemoRules().rules()[i].suffix);
    CHECK(again.rules()[i].replacement == DemoRules().rules()[i].replacement);
  }
  CHECK(again.exceptions().size() == DemoRules().exceptions().size());
}

TEST_CASE("analyze: demo table examples") {
  const TaggedToken plural = Analyze(MakeToken("കുട്ടികൾ"), DemoRules());
  CHECK(plural.tag == PosTag::kNoun);
  CHECK(plural.features == std::vector<std::string>{"PLURAL"});
  CHECK(plural.match == Match::kRule);
  CHECK(plural.rule_id == "R1");

  const TaggedToken pronoun = Analyze(MakeToken("ഞാൻ"), DemoRules());
  CHECK(pronoun.tag == PosTag::kPronoun);
  CHECK(pronoun.features.empty());
  CHECK(pronoun.match == Match::kException);

  const TaggedToken none = Analyze(MakeToken("മരം"), DemoRules());
  CHECK(none.tag == PosTag::kUnknown);
  CHECK(none.features.empty());
  CHECK(none.match == Match::kNone);
}

TEST_CASE("analyze: longest suffix wins, ties go to the smaller id") {
  const RuleTable table(
      {{"B", U"ൽ", U"", PosTag::kNoun, {}},
       {"A", U"ൽ", U"", PosTag::kVerb, {}},
       {"C", U"ിൽ", U"", PosTag::kAdjective, {}}},
      {});
  CHECK(Analyze(MakeToken(U"കിൽ"), table).rule_id == "C");
  CHECK(Analyze(MakeToken(U"കൽ"), table).rule_id == "A");
}

TEST_CASE("analyze: a rule never consumes the whole word") {
  const TaggedToken tt = Analyze(MakeToken("കൾ"), DemoRules());
  CHECK(tt.match == Match::kNone);
  CHECK(StemOf("കൾ") == "കൾ");
}

TEST_CASE("analyze: matcher agrees with brute-force enumeration") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 3000; ++i) {
    const std::u32string word = testing::RandomMalayalamWord(rng, DemoRules());
    const auto expected = testing::BruteForceRuleId(word, DemoRules());
    const auto idx = LongestSuffixRule(word, DemoRules());
    REQUIRE(idx.has_value() == expected.has_value());
    if (idx) CHECK(DemoRules().rules()[*idx].id == *expected);
  }
}

TEST_CASE("stem: demo table examples") {
  CHECK(StemOf("കുട്ടികൾ") == "കുട്ടി");
  CHECK(StemOf("ഓടുന്നു") == "ഓടുക");
  CHECK(StemOf("മരം") == "മരം");
  CHECK(StemOf("എന്റെ") == "ഞാൻ");
  CHECK(StemOf("വീട്ടിൽ") == "വീട്");
}

TEST_CASE("stem: roots are fixed points") {
  const auto golden = nlohmann::json::parse(
      testing::ReadFile(testing::FixtureDir() / "golden.json"));
  for (const auto& c : golden) {
    for (const auto& token : c["tokens"]) {
      const std::string root = StemOf(token.get<std::string>());
      CHECK_MESSAGE(StemOf(root) == root, root);
    }
  }
}

TEST_CASE("tag names round-trip") {
  for (PosTag t : {PosTag::kNoun, PosTag::kVerb, PosTag::kPronoun,
                   PosTag::kAdjective, PosTag::kDeterminer, PosTag::kCopula,
                   PosTag::kParticle, PosTag::kNumber, PosTag::kUnknown}) {
    CHECK(ParsePosTag(PosTagName(t)) == t);
  }
  CHECK_FALSE(ParsePosTag("noun").has_value());
}

}  // namespace
}  // namespace mal2sign

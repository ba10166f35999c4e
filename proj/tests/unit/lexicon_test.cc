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

#include "mal2sign/lexicon.h"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "test_support.h"

namespace mal2sign {
namespace {

using nlohmann::json;

const Lexicon& Demo() { return testing::DemoResources().lexicon; }

SignEntry ValidEntry(std::string gloss) {
  SignEntry e;
  e.gloss = std::move(gloss);
  e.keyframes = {{0.0, Pose::Rest()}, {0.5, Pose::Rest()}};
  return e;
}

bool HasKind(const std::vector<Violation>& v, Violation::Kind kind) {
  return std::any_of(v.begin(), v.end(),
                     [&](const Violation& x) { return x.kind == kind; });
}

json MinimalDoc() {
  json kf0 = {{"time", 0.0}};
  json kf1 = {{"time", 1.0}};
  return {{"skeleton", "mal2sign-skel-11/1"},
          {"entries",
           {{{"gloss", "CHILD"}, {"roots", {"കുട്ടി"}}, {"keyframes", {kf0, kf1}}},
            {{"gloss", "KID"}, {"roots", {"കുട്ടി"}}, {"keyframes", {kf0, kf1}}}}}};
}

std::vector<Violation> LoadViolations(const json& doc) {
  try {
    LoadLexicon(doc.dump(), Skeleton{});
  } catch (const LexiconError& e) {
    return e.violations();
  }
  return {};
}

TEST_CASE("load_lexicon: bundled demo lexicon") {
  CHECK(Demo().entries().size() >= 12 + 80);
  CHECK(Demo().fingerspelling().size() >= 80);
  CHECK(Demo().Find("CHILD") != nullptr);
  CHECK(Demo().Find(kFingerspellUnknown) != nullptr);
  for (const auto& [root, gloss] : Demo().root_index()) {
    CHECK(Demo().Find(gloss) != nullptr);
  }
}

TEST_CASE("load_lexicon: duplicate root") {
  const auto v = LoadViolations(MinimalDoc());
  CHECK(HasKind(v, Violation::Kind::kDuplicateRoot));
}

TEST_CASE("load_lexicon: unknown joint") {
  json doc = MinimalDoc();
  doc["entries"][1]["roots"] = json::array();
  doc["entries"][1]["keyframes"][1]["rotations"] = {{"leftFoot", {1, 0, 0, 0}}};
  const auto v = LoadViolations(doc);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::kUnknownJoint);
  CHECK(v[0].detail == "leftFoot");
  CHECK(v[0].ToString() == "UnknownJoint(KID#1): leftFoot");
}

TEST_CASE("load_lexicon: violations are aggregated") {
  json doc = MinimalDoc();
  doc["entries"].push_back(doc["entries"][0]);  // duplicate gloss + root
  doc["entries"][1]["keyframes"][1]["time"] = 0.0;
  doc["entries"][0]["keyframes"][0]["facial"] = {{"smile", 1.5}};
  doc["skeleton"] = "other";
  const auto v = LoadViolations(doc);
  CHECK(HasKind(v, Violation::Kind::kSkeletonMismatch));
  CHECK(HasKind(v, Violation::Kind::kDuplicateGloss));
  CHECK(HasKind(v, Violation::Kind::kDuplicateRoot));
  CHECK(HasKind(v, Violation::Kind::kNonIncreasingTime));
  CHECK(HasKind(v, Violation::Kind::kFacialRange));
}

TEST_CASE("load_lexicon: malformed structure") {
  CHECK(HasKind(LoadViolations(json::object()),
                Violation::Kind::kMalformedDocument));
  json doc = MinimalDoc();
  doc["entries"][0]["keyframes"][0]["rotations"] = {{"head", {1, 0}}};
  CHECK(HasKind(LoadViolations(doc), Violation::Kind::kMalformedDocument));
}

TEST_CASE("load_lexicon: fingerspelling must reference existing glosses") {
  json doc = MinimalDoc();
  doc["entries"][1]["roots"] = json::array();
  doc["fingerspelling"] = {{"alphabet", {{"0D15", "FS_0D15"}}}};
  const auto v = LoadViolations(doc);
  CHECK(HasKind(v, Violation::Kind::kUnknownGloss));
}

TEST_CASE("validate_entry: examples") {
  SignEntry times = ValidEntry("X");
  times.keyframes.push_back({0.5, Pose::Rest()});
  const auto v1 = ValidateEntry(times, Skeleton{});
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].kind == Violation::Kind::kNonIncreasingTime);
  CHECK(v1[0].keyframe == 2);

  SignEntry norm = ValidEntry("X");
  norm.keyframes[1].pose.rotations[3] = {0.9, 0, 0, 0};
  const auto v2 = ValidateEntry(norm, Skeleton{});
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].kind == Violation::Kind::kNormViolation);

  CHECK(ValidateEntry(*Demo().Find("CHILD"), Skeleton{}).empty());
}

TEST_CASE("validate_entry: structural checks") {
  SignEntry e = ValidEntry("lower");
  e.keyframes.pop_back();
  e.keyframes[0].time = 0.25;
  e.keyframes[0].pose.rotations.pop_back();
  const auto v = ValidateEntry(e, Skeleton{});
  CHECK(HasKind(v, Violation::Kind::kBadGloss));
  CHECK(HasKind(v, Violation::Kind::kTooFewKeyframes));
  CHECK(HasKind(v, Violation::Kind::kFirstTimeNotZero));
  CHECK(HasKind(v, Violation::Kind::kJointCount));
  // Tolerance is 1e-6 on the norm.
  SignEntry near = ValidEntry("NEAR");
  near.keyframes[1].pose.rotations[0] = {1.0 + 5e-7, 0, 0, 0};
  CHECK(ValidateEntry(near, Skeleton{}).empty());
}

TEST_CASE("lookup: examples") {
  const SignEntry* child = Lookup(U"കുട്ടി", Demo());
  REQUIRE(child != nullptr);
  CHECK(child->gloss == "CHILD");
  CHECK(Lookup(U"zzz", Demo()) == nullptr);
  const SignEntry* run = Lookup(U"ഓടുക", Demo());
  REQUIRE(run != nullptr);
  CHECK(run->gloss == "RUN");
}

TEST_CASE("fingerspell: examples") {
  CHECK(Fingerspell(testing::MakeToken(U""), Demo()).empty());
  CHECK(Fingerspell(testing::MakeToken("സിബു"), Demo()) ==
        std::vector<std::string>{"FS_0D38", "FS_0D3F", "FS_0D2C", "FS_0D41"});
  CHECK(Fingerspell(testing::MakeToken("ക്ക"), Demo()) ==
        std::vector<std::string>{"FS_0D15", "FS_0D15"});
  // Unassigned code point in the block.
  CHECK(Fingerspell(testing::MakeToken(U"഍"), Demo()) ==
        std::vector<std::string>{"FS_UNKNOWN"});
  CHECK(Fingerspell(testing::MakeToken("abc"), Demo()).empty());
  CHECK(FingerspellGloss(0x0D15) == "FS_0D15");
}

TEST_CASE("fingerspell: length law") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> cp(0x0D00, 0x0D7F);
  std::uniform_int_distribution<int> len(0, 10);
  for (int i = 0; i < 1000; ++i) {
    std::u32string word;
    for (int k = len(rng); k > 0; --k) word.push_back(static_cast<char32_t>(cp(rng)));
    word.push_back(U'x');
    const auto glosses = Fingerspell(testing::MakeToken(word), Demo());
    const auto expected = std::count_if(word.begin(), word.end(), [](char32_t c) {
      return IsMalayalam(c) && c != kVirama;
    });
    CHECK(glosses.size() == static_cast<std::size_t>(expected));
    for (const auto& g : glosses) CHECK(Demo().Find(g) != nullptr);
  }
}

TEST_CASE("lexicon: serialize and reload is structurally equal") {
  const std::string doc = SerializeLexicon(Demo());
  const Lexicon again = LoadLexicon(doc, Skeleton{});
  CHECK(again == Demo());
  CHECK(SerializeLexicon(again) == doc);
}

}  // namespace
}  // namespace mal2sign

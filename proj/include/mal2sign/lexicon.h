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

#ifndef MAL2SIGN_LEXICON_H_
#define MAL2SIGN_LEXICON_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mal2sign/pose.h"
#include "mal2sign/script.h"

namespace mal2sign {

inline constexpr std::string_view kFingerspellUnknown = "FS_UNKNOWN";

// A sign clip keyed by its gloss.
struct SignEntry {
  std::string gloss;
  std::vector<std::u32string> roots;
  std::vector<Keyframe> keyframes;

  // Time of the last keyframe; 0 for an empty clip.
  double duration() const;

  bool operator==(const SignEntry&) const = default;
};

struct Violation {
  enum class Kind {
    kMalformedDocument,
    kSkeletonMismatch,
    kBadGloss,
    kUnknownJoint,
    kJointCount,
    kTooFewKeyframes,
    kFirstTimeNotZero,
    kNonIncreasingTime,
    kNormViolation,
    kFacialRange,
    kDuplicateGloss,
    kDuplicateRoot,
    kUnknownGloss,
  };

  Kind kind;
  std::string gloss;
  std::optional<std::size_t> keyframe;
  std::string detail;

  // "<Kind>(<gloss>[#keyframe]): detail", one line.
  std::string ToString() const;
};

std::string_view ViolationKindName(Violation::Kind kind);

class LexiconError : public std::runtime_error {
 public:
  explicit LexiconError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Every violation of |entry| against |skeleton|; empty means valid.
std::vector<Violation> ValidateEntry(const SignEntry& entry,
                                     const Skeleton& skeleton);

// Validated, immutable sign inventory. The constructor throws LexiconError
// listing every problem found rather than stopping at the first.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(Skeleton skeleton, std::vector<SignEntry> entries,
          std::map<char32_t, std::string> fingerspelling,
          std::string fallback_gloss = std::string(kFingerspellUnknown));

  const Skeleton& skeleton() const { return skeleton_; }
  const std::map<std::string, SignEntry>& entries() const { return entries_; }
  const std::map<std::u32string, std::string>& root_index() const {
    return root_index_;
  }
  const std::map<char32_t, std::string>& fingerspelling() const {
    return fingerspelling_;
  }
  const std::string& fallback_gloss() const { return fallback_gloss_; }

  const SignEntry* Find(std::string_view gloss) const;

  bool operator==(const Lexicon&) const = default;

 private:
  Skeleton skeleton_;
  std::map<std::string, SignEntry> entries_;
  std::map<std::u32string, std::string> root_index_;
  std::map<char32_t, std::string> fingerspelling_;
  std::string fallback_gloss_;
};

// Parses a lexicon document (docs/formats.md) against |skeleton|. Throws
// LexiconError carrying all violations.
Lexicon LoadLexicon(std::string_view document, const Skeleton& skeleton);

// Canonical document; LoadLexicon(SerializeLexicon(x)) == x.
std::string SerializeLexicon(const Lexicon& lexicon);

// Exact match on the root index; nullptr is a miss.
const SignEntry* Lookup(std::u32string_view root, const Lexicon& lexicon);

// One gloss per Malayalam code point of |token|, viramas skipped. Code
// points without an alphabet entry map to the fallback gloss.
std::vector<std::string> Fingerspell(const Token& token,
                                     const Lexicon& lexicon);

// "FS_0D15" for U+0D15.
std::string FingerspellGloss(char32_t code_point);

}  // namespace mal2sign

#endif  // MAL2SIGN_LEXICON_H_

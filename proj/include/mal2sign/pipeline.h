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

#ifndef MAL2SIGN_PIPELINE_H_
#define MAL2SIGN_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mal2sign/animation.h"
#include "mal2sign/lexicon.h"
#include "mal2sign/morphology.h"
#include "mal2sign/optimizer.h"
#include "mal2sign/script.h"

namespace mal2sign {

inline constexpr std::string_view kVersion = "0.1.0";

// Everything translate() needs, validated together and then read-only.
struct PipelineResources {
  RuleTable rules;
  DropPolicy drop_policy;
  Lexicon lexicon;
  Skeleton skeleton;
  TimelineConfig timeline;
};

// Aggregates every problem found while loading resources.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const { return problems_; }
  // True if any problem starts with |kind| (e.g. "SkeletonMismatch").
  bool Has(std::string_view kind) const;

 private:
  std::vector<std::string> problems_;
};

struct ResourcePaths {
  std::filesystem::path config;
  // Override the files named in the config.
  std::optional<std::filesystem::path> rules;
  std::optional<std::filesystem::path> lexicon;
};

// Reads the config document and the files it names (relative to the config
// file's directory).
PipelineResources LoadResources(const ResourcePaths& paths);

// Same, from documents already in memory.
PipelineResources LoadResourcesFromDocuments(std::string_view config,
                                             std::string_view rules,
                                             std::string_view lexicon);

// Config file used when neither --config nor MAL2SIGN_CONFIG is given.
std::filesystem::path DefaultConfigPath();

enum class GlossSource { kLexicon, kFingerspell };

struct GlossRef {
  std::string gloss;
  GlossSource source = GlossSource::kLexicon;
  std::size_t retained_index = 0;  // which retained token produced it
};

struct TranslationResult {
  NormalizedText normalized;
  std::vector<DroppedChar> stripped_punctuation;
  std::vector<Token> tokens;
  std::vector<TaggedToken> tagged;
  std::vector<std::size_t> retained;  // indices into tokens
  std::vector<std::u32string> roots;  // one per retained token
  std::vector<GlossRef> glosses;
  Timeline timeline;
  std::vector<std::string> warnings;

  std::vector<TaggedToken> RetainedTokens() const;
};

// normalize -> tokenize -> tag -> optimize -> stem -> lookup or fingerspell
// -> timeline. Total on any input.
TranslationResult Translate(std::string_view text,
                            const PipelineResources& res);

std::string SerializeResult(const TranslationResult& result);

}  // namespace mal2sign

#endif  // MAL2SIGN_PIPELINE_H_

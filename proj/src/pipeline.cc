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

#include "mal2sign/pipeline.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json_util.h"
#include "timeline_json.h"

#ifndef MAL2SIGN_DATA_DIR
#define MAL2SIGN_DATA_DIR "data"
#endif

namespace mal2sign {

namespace {

using internal::FieldError;
using internal::Json;
using internal::OrderedJson;

std::string JoinProblems(const std::vector<std::string>& problems) {
  std::string out = "failed to load resources";
  for (const auto& p : problems) out += "\n  " + p;
  return out;
}

std::optional<std::string> ReadFile(const std::filesystem::path& path,
                                    std::vector<std::string>& problems) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    problems.push_back("FileNotFound: " + path.string());
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ConfigDoc {
  std::string rules_file;
  std::string lexicon_file;
  Skeleton skeleton;
  DropPolicy drop_policy;
  TimelineConfig timeline;
};

ConfigDoc ParseConfig(std::string_view document) {
  const Json doc = internal::ParseDocument(document);
  ConfigDoc cfg;
  if (doc.contains("rules")) cfg.rules_file = internal::String(doc, "rules", "");
  if (doc.contains("lexicon")) {
    cfg.lexicon_file = internal::String(doc, "lexicon", "");
  }
  if (doc.contains("skeleton")) {
    const Json& sk = doc["skeleton"];
    cfg.skeleton.id = internal::String(sk, "id", "/skeleton");
    if (sk.contains("joints")) {
      const Json& joints = internal::Array(sk, "joints", "/skeleton");
      cfg.skeleton.joints.clear();
      for (std::size_t i = 0; i < joints.size(); ++i) {
        if (!joints[i].is_string()) {
          throw FieldError(internal::Child("/skeleton/joints", i),
                           "expected string");
        }
        cfg.skeleton.joints.push_back(joints[i].get<std::string>());
      }
    }
  }
  if (doc.contains("drop_policy")) {
    const Json& dp = doc["drop_policy"];
    cfg.drop_policy = DropPolicy{};
    if (dp.contains("drop_tags")) {
      const Json& tags = internal::Array(dp, "drop_tags", "/drop_policy");
      for (std::size_t i = 0; i < tags.size(); ++i) {
        const std::string loc = internal::Child("/drop_policy/drop_tags", i);
        if (!tags[i].is_string()) throw FieldError(loc, "expected string");
        auto tag = ParsePosTag(tags[i].get<std::string>());
        if (!tag) throw FieldError(loc, "unknown tag");
        cfg.drop_policy.drop_tags.insert(*tag);
      }
    }
    if (dp.contains("drop_words")) {
      const Json& words = internal::Array(dp, "drop_words", "/drop_policy");
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (!words[i].is_string()) {
          throw FieldError(internal::Child("/drop_policy/drop_words", i),
                           "expected string");
        }
        cfg.drop_policy.drop_words.insert(
            DecodeUtf8(words[i].get<std::string>()));
      }
    }
  } else {
    cfg.drop_policy = DefaultDropPolicy();
  }
  if (doc.contains("timeline")) {
    const Json& tl = doc["timeline"];
    if (tl.contains("transition")) {
      cfg.timeline.transition = internal::Number(tl, "transition", "/timeline");
    }
    if (tl.contains("frame_rate")) {
      cfg.timeline.frame_rate = internal::Number(tl, "frame_rate", "/timeline");
    }
    if (tl.contains("default_sign_duration") &&
        !tl["default_sign_duration"].is_null()) {
      cfg.timeline.default_sign_duration =
          internal::Number(tl, "default_sign_duration", "/timeline");
    }
    if (!(cfg.timeline.transition >= 0.0)) {
      throw FieldError("/timeline/transition", "must be >= 0");
    }
    if (!(cfg.timeline.frame_rate > 0.0)) {
      throw FieldError("/timeline/frame_rate", "must be > 0");
    }
    if (cfg.timeline.default_sign_duration &&
        !(*cfg.timeline.default_sign_duration > 0.0)) {
      throw FieldError("/timeline/default_sign_duration", "must be > 0");
    }
  }
  return cfg;
}

PipelineResources Assemble(ConfigDoc cfg, const std::string* rules_doc,
                           const std::string* lexicon_doc,
                           std::vector<std::string> problems) {
  PipelineResources res;
  res.skeleton = cfg.skeleton;
  res.drop_policy = std::move(cfg.drop_policy);
  res.timeline = cfg.timeline;
  if (rules_doc) {
    try {
      res.rules = LoadRules(*rules_doc);
    } catch (const RuleTableError& e) {
      problems.push_back(std::string("RuleTable: ") + e.what());
    }
  }
  if (lexicon_doc) {
    try {
      res.lexicon = LoadLexicon(*lexicon_doc, res.skeleton);
    } catch (const LexiconError& e) {
      for (const Violation& v : e.violations()) {
        problems.push_back(v.ToString());
      }
    }
  }
  if (!problems.empty()) throw ResourceError(std::move(problems));
  return res;
}

std::string CodePointLabel(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
  return buf;
}

std::string_view SourceName(GlossSource s) {
  return s == GlossSource::kLexicon ? "LEXICON" : "FINGERSPELL";
}

}  // namespace

ResourceError::ResourceError(std::vector<std::string> problems)
    : std::runtime_error(JoinProblems(problems)),
      problems_(std::move(problems)) {}

bool ResourceError::Has(std::string_view kind) const {
  for (const auto& p : problems_) {
    if (p.rfind(kind, 0) == 0) return true;
  }
  return false;
}

std::filesystem::path DefaultConfigPath() {
  return std::filesystem::path(MAL2SIGN_DATA_DIR) / "config.json";
}

PipelineResources LoadResources(const ResourcePaths& paths) {
  std::vector<std::string> problems;
  auto config_text = ReadFile(paths.config, problems);
  if (!config_text) throw ResourceError(std::move(problems));
  ConfigDoc cfg;
  try {
    cfg = ParseConfig(*config_text);
  } catch (const FieldError& e) {
    throw ResourceError(
        {"MalformedConfig: " + e.location + ": " + e.what()});
  }
  const std::filesystem::path base = paths.config.parent_path();
  auto resolve = [&](const std::optional<std::filesystem::path>& override_path,
                     const std::string& from_config, std::string_view what) {
    if (override_path) return *override_path;
    if (from_config.empty()) {
      problems.push_back("MalformedConfig: no " + std::string(what) + " file");
      return std::filesystem::path();
    }
    return base / from_config;
  };
  const auto rules_path = resolve(paths.rules, cfg.rules_file, "rules");
  const auto lexicon_path = resolve(paths.lexicon, cfg.lexicon_file, "lexicon");
  std::optional<std::string> rules_doc;
  std::optional<std::string> lexicon_doc;
  if (!rules_path.empty()) rules_doc = ReadFile(rules_path, problems);
  if (!lexicon_path.empty()) lexicon_doc = ReadFile(lexicon_path, problems);
  return Assemble(std::move(cfg), rules_doc ? &*rules_doc : nullptr,
                  lexicon_doc ? &*lexicon_doc : nullptr, std::move(problems));
}

PipelineResources LoadResourcesFromDocuments(std::string_view config,
                                             std::string_view rules,
                                             std::string_view lexicon) {
  ConfigDoc cfg;
  try {
    cfg = ParseConfig(config);
  } catch (const FieldError& e) {
    throw ResourceError(
        {"MalformedConfig: " + e.location + ": " + e.what()});
  }
  const std::string r(rules);
  const std::string l(lexicon);
  return Assemble(std::move(cfg), &r, &l, {});
}

std::vector<TaggedToken> TranslationResult::RetainedTokens() const {
  std::vector<TaggedToken> out;
  out.reserve(retained.size());
  for (std::size_t i : retained) out.push_back(tagged[i]);
  return out;
}

TranslationResult Translate(std::string_view text,
                            const PipelineResources& res) {
  TranslationResult r;
  r.normalized = NormalizeText(text);
  for (const DroppedChar& d : r.normalized.dropped) {
    r.warnings.push_back("dropped " + CodePointLabel(d.code_point) +
                         " at input offset " + std::to_string(d.offset));
  }
  r.tokens = Tokenize(r.normalized, &r.stripped_punctuation);

  // Stage 1: tagging.
  r.tagged.reserve(r.tokens.size());
  for (const Token& tok : r.tokens) r.tagged.push_back(Analyze(tok, res.rules));

  // Stage 2: optimizer. Decisions use the tags of unstemmed words.
  for (std::size_t i = 0; i < r.tagged.size(); ++i) {
    if (!IsDropped(r.tagged[i], res.drop_policy)) r.retained.push_back(i);
  }

  // Stage 3: stemming, then sign lookup with fingerspelling fallback.
  std::vector<SignEntry> clips;
  for (std::size_t k = 0; k < r.retained.size(); ++k) {
    const TaggedToken& tt = r.tagged[r.retained[k]];
    r.roots.push_back(Stem(tt, res.rules));
    if (const SignEntry* entry = Lookup(r.roots.back(), res.lexicon)) {
      r.glosses.push_back({entry->gloss, GlossSource::kLexicon, k});
      clips.push_back(*entry);
      continue;
    }
    const std::vector<std::string> spelled = Fingerspell(tt.token, res.lexicon);
    const std::string word = EncodeUtf8(tt.token.text);
    if (spelled.empty()) {
      r.warnings.push_back("no sign for '" + word + "'");
      continue;
    }
    r.warnings.push_back("out-of-vocabulary '" + word + "' fingerspelled");
    for (const std::string& g : spelled) {
      r.glosses.push_back({g, GlossSource::kFingerspell, k});
      if (const SignEntry* entry = res.lexicon.Find(g)) clips.push_back(*entry);
    }
  }

  // Stage 4: animation.
  r.timeline = BuildTimeline(clips, res.timeline, res.skeleton);
  return r;
}

std::string SerializeResult(const TranslationResult& r) {
  OrderedJson doc;
  doc["format"] = "mal2sign-result";
  doc["version"] = 1;
  doc["normalized"] = EncodeUtf8(r.normalized.content);

  OrderedJson dropped = OrderedJson::array();
  for (const DroppedChar& d : r.normalized.dropped) {
    dropped.push_back({{"stage", "normalize"},
                       {"offset", d.offset},
                       {"code_point", CodePointLabel(d.code_point)}});
  }
  for (const DroppedChar& d : r.stripped_punctuation) {
    dropped.push_back({{"stage", "tokenize"},
                       {"offset", d.offset},
                       {"code_point", CodePointLabel(d.code_point)}});
  }
  doc["dropped"] = std::move(dropped);

  OrderedJson tokens = OrderedJson::array();
  for (const Token& t : r.tokens) {
    tokens.push_back(
        {{"text", EncodeUtf8(t.text)}, {"start", t.start}, {"end", t.end}});
  }
  doc["tokens"] = std::move(tokens);

  std::vector<bool> kept(r.tagged.size(), false);
  for (std::size_t i : r.retained) kept[i] = true;
  OrderedJson tagged = OrderedJson::array();
  for (std::size_t i = 0; i < r.tagged.size(); ++i) {
    const TaggedToken& tt = r.tagged[i];
    OrderedJson matched;
    switch (tt.match) {
      case Match::kRule: matched = tt.rule_id; break;
      case Match::kException: matched = "exception"; break;
      case Match::kNone: matched = nullptr; break;
    }
    tagged.push_back({{"text", EncodeUtf8(tt.token.text)},
                      {"tag", PosTagName(tt.tag)},
                      {"features", tt.features},
                      {"matched", matched},
                      {"retained", static_cast<bool>(kept[i])}});
  }
  doc["tagged"] = std::move(tagged);
  doc["retained"] = r.retained;

  OrderedJson roots = OrderedJson::array();
  for (const auto& root : r.roots) roots.push_back(EncodeUtf8(root));
  doc["roots"] = std::move(roots);

  OrderedJson glosses = OrderedJson::array();
  for (const GlossRef& g : r.glosses) {
    glosses.push_back({{"gloss", g.gloss},
                       {"source", SourceName(g.source)},
                       {"token", r.retained[g.retained_index]}});
  }
  doc["glosses"] = std::move(glosses);
  doc["warnings"] = r.warnings;
  doc["timeline"] = internal::TimelineToJson(r.timeline);
  return doc.dump();
}

}  // namespace mal2sign

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

// mal2sign: Malayalam text to sign-language keyframe timelines.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "mal2sign/lexicon.h"
#include "mal2sign/pipeline.h"
#include "mal2sign/service.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResource = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config;
  std::string rules;
  std::string lexicon;

  std::string text;
  std::string format = "timeline";
  std::string out;

  int port = 8080;
  std::string static_dir;

  std::string validate_path;
};

mal2sign::PipelineResources Load(const Options& opts) {
  mal2sign::ResourcePaths paths;
  if (!opts.config.empty()) {
    paths.config = opts.config;
  } else if (const char* env = std::getenv("MAL2SIGN_CONFIG"); env && *env) {
    paths.config = env;
  } else {
    paths.config = mal2sign::DefaultConfigPath();
  }
  if (!opts.rules.empty()) paths.rules = opts.rules;
  if (!opts.lexicon.empty()) paths.lexicon = opts.lexicon;
  return mal2sign::LoadResources(paths);
}

int RunTranslate(const Options& opts) {
  const auto res = Load(opts);
  const auto result = mal2sign::Translate(opts.text, res);
  std::string output;
  if (opts.format == "gloss") {
    for (const auto& g : result.glosses) output += g.gloss + "\n";
  } else if (opts.format == "stages") {
    output = mal2sign::SerializeResult(result) + "\n";
  } else {
    output = mal2sign::SerializeTimeline(result.timeline) + "\n";
  }
  if (opts.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << opts.out << "\n";
      return kExitResource;
    }
    f << output;
  }
  return kExitOk;
}

int RunServe(const Options& opts) {
  const auto res = Load(opts);
  std::optional<std::filesystem::path> static_dir;
  if (!opts.static_dir.empty()) static_dir = opts.static_dir;
  auto server = mal2sign::MakeServer(res, static_dir);
  std::cerr << "mal2sign " << mal2sign::kVersion << " listening on port "
            << opts.port << "\n";
  if (!server->listen("0.0.0.0", opts.port)) {
    std::cerr << "cannot listen on port " << opts.port << "\n";
    return kExitResource;
  }
  return kExitOk;
}

int RunValidate(const Options& opts) {
  std::ifstream in(opts.validate_path, std::ios::binary);
  if (!in) {
    std::cout << "FileNotFound: " << opts.validate_path << "\n";
    return kExitResource;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    const auto lex = mal2sign::LoadLexicon(ss.str(), mal2sign::Skeleton{});
    std::cout << "ok: " << lex.entries().size() << " entries\n";
    return kExitOk;
  } catch (const mal2sign::LexiconError& e) {
    for (const auto& v : e.violations()) std::cout << v.ToString() << "\n";
    return kExitResource;
  }
}

int RunFingerspell(const Options& opts) {
  const auto res = Load(opts);
  const auto tokens = mal2sign::Tokenize(mal2sign::NormalizeText(opts.text));
  for (const auto& tok : tokens) {
    for (const auto& g : mal2sign::Fingerspell(tok, res.lexicon)) {
      std::cout << g << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate Malayalam text into sign-language animation"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--config", opts.config,
                 "Pipeline configuration (default: $MAL2SIGN_CONFIG)");
  app.add_option("--rules", opts.rules, "Rule table, overrides the config");
  app.add_option("--lexicon", opts.lexicon, "Lexicon, overrides the config");

  auto* translate = app.add_subcommand("translate", "Translate text");
  translate->add_option("--text", opts.text, "Malayalam text")->required();
  translate->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"gloss", "stages", "timeline"}));
  translate->add_option("--out", opts.out, "Write output to FILE");

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", opts.port, "Port")->check(CLI::Range(1, 65535));
  serve->add_option("--static", opts.static_dir, "Viewer bundle served at /")
      ->check(CLI::ExistingDirectory);

  auto* lexicon = app.add_subcommand("lexicon", "Lexicon tools");
  lexicon->require_subcommand(1);
  auto* validate = lexicon->add_subcommand("validate", "Validate a lexicon");
  validate->add_option("path", opts.validate_path, "Lexicon file")->required();

  auto* fingerspell =
      app.add_subcommand("fingerspell", "Print fingerspelling glosses");
  fingerspell->add_option("--text", opts.text, "Text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*translate) return RunTranslate(opts);
    if (*serve) return RunServe(opts);
    if (*validate) return RunValidate(opts);
    if (*fingerspell) return RunFingerspell(opts);
  } catch (const mal2sign::ResourceError& e) {
    for (const auto& p : e.problems()) std::cerr << p << "\n";
    return kExitResource;
  }
  return kExitUsage;
}

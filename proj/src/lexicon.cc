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

#include <cmath>
#include <cstdio>
#include <set>
#include <utility>

#include "json_util.h"

namespace mal2sign {

namespace {

using internal::FieldError;
using internal::Json;
using internal::OrderedJson;

std::string JoinViolations(const std::vector<Violation>& violations) {
  std::string out = "invalid lexicon";
  for (const Violation& v : violations) out += "\n  " + v.ToString();
  return out;
}

bool IsGlossId(std::string_view gloss) {
  if (gloss.empty()) return false;
  for (char c : gloss) {
    if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_')) {
      return false;
    }
  }
  return gloss.front() >= 'A' && gloss.front() <= 'Z';
}

std::optional<char32_t> ParseHexCodePoint(std::string_view hex) {
  if (hex.empty() || hex.size() > 6) return std::nullopt;
  char32_t value = 0;
  for (char c : hex) {
    value <<= 4;
    if (c >= '0' && c <= '9') {
      value |= static_cast<char32_t>(c - '0');
    } else if (c >= 'A' && c <= 'F') {
      value |= static_cast<char32_t>(c - 'A' + 10);
    } else {
      return std::nullopt;
    }
  }
  return value;
}

std::string HexCodePoint(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04X", static_cast<unsigned>(c));
  return buf;
}

// Reads one keyframe. Unknown joints become violations; structural problems
// throw FieldError.
Keyframe ReadKeyframe(const Json& k, const std::string& path,
                      const Skeleton& skeleton, const std::string& gloss,
                      std::size_t index, std::vector<Violation>& violations) {
  Keyframe kf;
  kf.time = internal::Number(k, "time", path);
  kf.pose = Pose::Rest(skeleton.joints.size());
  if (k.contains("rotations")) {
    const Json& rot = internal::Field(k, "rotations", path);
    if (!rot.is_object()) {
      throw FieldError(path + "/rotations", "expected object");
    }
    for (const auto& [joint, q] : rot.items()) {
      const std::string qpath = path + "/rotations/" + joint;
      if (!q.is_array() || q.size() != 4) {
        throw FieldError(qpath, "expected [w, x, y, z]");
      }
      auto idx = skeleton.JointIndex(joint);
      if (!idx) {
        violations.push_back(
            {Violation::Kind::kUnknownJoint, gloss, index, joint});
        continue;
      }
      kf.pose.rotations[*idx] = {internal::Number(q[0], qpath + "/0"),
                                 internal::Number(q[1], qpath + "/1"),
                                 internal::Number(q[2], qpath + "/2"),
                                 internal::Number(q[3], qpath + "/3")};
    }
  }
  auto read_hand = [&](std::string_view key) {
    if (!k.contains(key)) return Handshape::kNeutral;
    auto h = ParseHandshape(internal::String(k, key, path));
    if (!h) throw FieldError(internal::Child(path, key), "unknown handshape");
    return *h;
  };
  kf.pose.hand_left = read_hand("handshape_L");
  kf.pose.hand_right = read_hand("handshape_R");
  if (k.contains("facial")) {
    const Json& f = internal::Field(k, "facial", path);
    if (!f.is_object()) throw FieldError(path + "/facial", "expected object");
    for (const auto& [name, value] : f.items()) {
      bool known = false;
      for (std::size_t c = 0; c < kFacialChannels.size(); ++c) {
        if (kFacialChannels[c] == name) {
          kf.pose.facial[c] = internal::Number(value, path + "/facial/" + name);
          known = true;
        }
      }
      if (!known) throw FieldError(path + "/facial/" + name, "unknown channel");
    }
  }
  return kf;
}

}  // namespace

double SignEntry::duration() const {
  return keyframes.empty() ? 0.0 : keyframes.back().time;
}

std::string_view ViolationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kMalformedDocument: return "MalformedDocument";
    case Violation::Kind::kSkeletonMismatch: return "SkeletonMismatch";
    case Violation::Kind::kBadGloss: return "BadGloss";
    case Violation::Kind::kUnknownJoint: return "UnknownJoint";
    case Violation::Kind::kJointCount: return "JointCount";
    case Violation::Kind::kTooFewKeyframes: return "TooFewKeyframes";
    case Violation::Kind::kFirstTimeNotZero: return "FirstTimeNotZero";
    case Violation::Kind::kNonIncreasingTime: return "NonIncreasingTime";
    case Violation::Kind::kNormViolation: return "NormViolation";
    case Violation::Kind::kFacialRange: return "FacialRange";
    case Violation::Kind::kDuplicateGloss: return "DuplicateGloss";
    case Violation::Kind::kDuplicateRoot: return "DuplicateRoot";
    case Violation::Kind::kUnknownGloss: return "UnknownGloss";
  }
  return "Unknown";
}

std::string Violation::ToString() const {
  std::string out(ViolationKindName(kind));
  out += "(" + gloss;
  if (keyframe) out += "#" + std::to_string(*keyframe);
  out += ")";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

LexiconError::LexiconError(std::vector<Violation> violations)
    : std::runtime_error(JoinViolations(violations)),
      violations_(std::move(violations)) {}

std::vector<Violation> ValidateEntry(const SignEntry& entry,
                                     const Skeleton& skeleton) {
  std::vector<Violation> out;
  const std::string& g = entry.gloss;
  if (!IsGlossId(g)) {
    out.push_back({Violation::Kind::kBadGloss, g, std::nullopt,
                   "gloss must match [A-Z][A-Z0-9_]*"});
  }
  if (entry.keyframes.size() < 2) {
    out.push_back({Violation::Kind::kTooFewKeyframes, g, std::nullopt,
                   std::to_string(entry.keyframes.size()) + " keyframe(s)"});
  }
  for (std::size_t i = 0; i < entry.keyframes.size(); ++i) {
    const Keyframe& kf = entry.keyframes[i];
    if (i == 0 && kf.time != 0.0) {
      out.push_back({Violation::Kind::kFirstTimeNotZero, g, i,
                     "first keyframe must be at 0"});
    }
    if (!std::isfinite(kf.time) ||
        (i > 0 && !(kf.time > entry.keyframes[i - 1].time))) {
      out.push_back({Violation::Kind::kNonIncreasingTime, g, i,
                     "keyframe times must be finite and strictly increasing"});
    }
    if (kf.pose.rotations.size() != skeleton.joints.size()) {
      out.push_back({Violation::Kind::kJointCount, g, i,
                     std::to_string(kf.pose.rotations.size()) + " rotations for " +
                         std::to_string(skeleton.joints.size()) + " joints"});
    }
    for (std::size_t j = 0; j < kf.pose.rotations.size(); ++j) {
      if (!IsUnit(kf.pose.rotations[j])) {
        std::string joint = j < skeleton.joints.size() ? skeleton.joints[j]
                                                       : std::to_string(j);
        out.push_back({Violation::Kind::kNormViolation, g, i,
                       joint + " |q| = " +
                           std::to_string(kf.pose.rotations[j].Norm())});
      }
    }
    for (std::size_t c = 0; c < kf.pose.facial.size(); ++c) {
      const double w = kf.pose.facial[c];
      if (!(w >= 0.0 && w <= 1.0)) {
        out.push_back({Violation::Kind::kFacialRange, g, i,
                       std::string(kFacialChannels[c]) + " outside [0, 1]"});
      }
    }
  }
  return out;
}

Lexicon::Lexicon(Skeleton skeleton, std::vector<SignEntry> entries,
                 std::map<char32_t, std::string> fingerspelling,
                 std::string fallback_gloss)
    : skeleton_(std::move(skeleton)),
      fingerspelling_(std::move(fingerspelling)),
      fallback_gloss_(std::move(fallback_gloss)) {
  std::vector<Violation> violations;
  for (SignEntry& entry : entries) {
    auto v = ValidateEntry(entry, skeleton_);
    violations.insert(violations.end(), v.begin(), v.end());
    const std::string gloss = entry.gloss;
    for (const std::u32string& root : entry.roots) {
      auto [it, inserted] = root_index_.emplace(root, gloss);
      if (!inserted) {
        violations.push_back({Violation::Kind::kDuplicateRoot, gloss,
                              std::nullopt,
                              EncodeUtf8(root) + " already maps to " +
                                  it->second});
      }
    }
    if (!entries_.emplace(gloss, std::move(entry)).second) {
      violations.push_back(
          {Violation::Kind::kDuplicateGloss, gloss, std::nullopt, ""});
    }
  }
  for (const auto& [cp, gloss] : fingerspelling_) {
    if (!entries_.count(gloss)) {
      violations.push_back({Violation::Kind::kUnknownGloss, gloss,
                            std::nullopt,
                            "fingerspelling for U+" + HexCodePoint(cp)});
    }
  }
  if (!fingerspelling_.empty() && !entries_.count(fallback_gloss_)) {
    violations.push_back({Violation::Kind::kUnknownGloss, fallback_gloss_,
                          std::nullopt, "fingerspelling fallback"});
  }
  if (!violations.empty()) throw LexiconError(std::move(violations));
}

const SignEntry* Lexicon::Find(std::string_view gloss) const {
  auto it = entries_.find(std::string(gloss));
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon LoadLexicon(std::string_view document, const Skeleton& skeleton) {
  std::vector<Violation> violations;
  std::vector<SignEntry> entries;
  std::map<char32_t, std::string> alphabet;
  std::string fallback(kFingerspellUnknown);

  auto malformed = [](const FieldError& e) {
    return Violation{Violation::Kind::kMalformedDocument, "", std::nullopt,
                     e.location + ": " + e.what()};
  };

  Json doc;
  try {
    doc = internal::ParseDocument(document);
    const std::string id = internal::String(doc, "skeleton", "");
    if (id != skeleton.id) {
      violations.push_back({Violation::Kind::kSkeletonMismatch, "",
                            std::nullopt,
                            "lexicon uses '" + id + "', expected '" +
                                skeleton.id + "'"});
    }
    internal::Array(doc, "entries", "");
  } catch (const FieldError& e) {
    throw LexiconError({malformed(e)});
  }

  const Json& entry_array = doc["entries"];
  for (std::size_t i = 0; i < entry_array.size(); ++i) {
    const std::string path = internal::Child("/entries", i);
    const Json& e = entry_array[i];
    try {
      SignEntry entry;
      entry.gloss = internal::String(e, "gloss", path);
      if (e.contains("roots")) {
        const Json& roots = internal::Array(e, "roots", path);
        for (std::size_t r = 0; r < roots.size(); ++r) {
          if (!roots[r].is_string()) {
            throw FieldError(internal::Child(path + "/roots", r),
                             "expected string");
          }
          entry.roots.push_back(DecodeUtf8(roots[r].get<std::string>()));
        }
      }
      const Json& kfs = internal::Array(e, "keyframes", path);
      for (std::size_t k = 0; k < kfs.size(); ++k) {
        entry.keyframes.push_back(
            ReadKeyframe(kfs[k], internal::Child(path + "/keyframes", k),
                         skeleton, entry.gloss, k, violations));
      }
      entries.push_back(std::move(entry));
    } catch (const FieldError& err) {
      violations.push_back(malformed(err));
    }
  }

  if (doc.contains("fingerspelling")) {
    try {
      const Json& fs = internal::Field(doc, "fingerspelling", "");
      if (fs.contains("fallback")) {
        fallback = internal::String(fs, "fallback", "/fingerspelling");
      }
      const Json& alpha = internal::Field(fs, "alphabet", "/fingerspelling");
      if (!alpha.is_object()) {
        throw FieldError("/fingerspelling/alphabet", "expected object");
      }
      for (const auto& [hex, gloss] : alpha.items()) {
        const std::string path = "/fingerspelling/alphabet/" + hex;
        auto cp = ParseHexCodePoint(hex);
        if (!cp) throw FieldError(path, "expected uppercase hex code point");
        if (!gloss.is_string()) throw FieldError(path, "expected string");
        alphabet.emplace(*cp, gloss.get<std::string>());
      }
    } catch (const FieldError& err) {
      violations.push_back(malformed(err));
    }
  }

  try {
    Lexicon lexicon(skeleton, std::move(entries), std::move(alphabet),
                    std::move(fallback));
    if (!violations.empty()) throw LexiconError(std::move(violations));
    return lexicon;
  } catch (const LexiconError& err) {
    violations.insert(violations.end(), err.violations().begin(),
                      err.violations().end());
    throw LexiconError(std::move(violations));
  }
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  const Skeleton& sk = lexicon.skeleton();
  OrderedJson doc;
  doc["format"] = "mal2sign-lexicon";
  doc["version"] = 1;
  doc["skeleton"] = sk.id;
  doc["entries"] = OrderedJson::array();
  for (const auto& [gloss, entry] : lexicon.entries()) {
    OrderedJson e;
    e["gloss"] = gloss;
    e["roots"] = OrderedJson::array();
    for (const auto& r : entry.roots) e["roots"].push_back(EncodeUtf8(r));
    e["keyframes"] = OrderedJson::array();
    for (const Keyframe& kf : entry.keyframes) {
      OrderedJson k;
      k["time"] = kf.time;
      OrderedJson rot = OrderedJson::object();
      for (std::size_t j = 0; j < sk.joints.size(); ++j) {
        const Quat& q = kf.pose.rotations[j];
        rot[sk.joints[j]] = {q.w, q.x, q.y, q.z};
      }
      k["rotations"] = std::move(rot);
      k["handshape_L"] = HandshapeName(kf.pose.hand_left);
      k["handshape_R"] = HandshapeName(kf.pose.hand_right);
      OrderedJson facial = OrderedJson::object();
      for (std::size_t c = 0; c < kFacialChannels.size(); ++c) {
        facial[std::string(kFacialChannels[c])] = kf.pose.facial[c];
      }
      k["facial"] = std::move(facial);
      e["keyframes"].push_back(std::move(k));
    }
    doc["entries"].push_back(std::move(e));
  }
  OrderedJson alphabet = OrderedJson::object();
  for (const auto& [cp, gloss] : lexicon.fingerspelling()) {
    alphabet[HexCodePoint(cp)] = gloss;
  }
  doc["fingerspelling"] = {{"fallback", lexicon.fallback_gloss()},
                           {"alphabet", std::move(alphabet)}};
  return doc.dump(1);
}

const SignEntry* Lookup(std::u32string_view root, const Lexicon& lexicon) {
  const auto& index = lexicon.root_index();
  auto it = index.find(std::u32string(root));
  if (it == index.end()) return nullptr;
  return lexicon.Find(it->second);
}

std::vector<std::string> Fingerspell(const Token& token,
                                     const Lexicon& lexicon) {
  std::vector<std::string> glosses;
  for (char32_t c : token.text) {
    if (!IsMalayalam(c) || c == kVirama) continue;
    auto it = lexicon.fingerspelling().find(c);
    glosses.push_back(it == lexicon.fingerspelling().end()
                          ? lexicon.fallback_gloss()
                          : it->second);
  }
  return glosses;
}

std::string FingerspellGloss(char32_t code_point) {
  return "FS_" + HexCodePoint(code_point);
}

}  // namespace mal2sign

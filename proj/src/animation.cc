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

#include "mal2sign/animation.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "timeline_json.h"

namespace mal2sign {

namespace {

constexpr double kTimeTolerance = 1e-9;

Quat Scale(const Quat& q, double s) { return {q.w * s, q.x * s, q.y * s, q.z * s}; }

Quat Add(const Quat& a, const Quat& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

double Dot(const Quat& a, const Quat& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

Quat Normalized(const Quat& q) { return Scale(q, 1.0 / q.Norm()); }

// Angle between a and b as 4-vectors, stable near 0.
double ArcAngle(const Quat& a, const Quat& b) {
  const double diff = Add(a, Scale(b, -1.0)).Norm();
  const double sum = Add(a, b).Norm();
  return 2.0 * std::atan2(diff, sum);
}

void CheckUnitInterval(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("interpolation parameter outside [0, 1]: " +
                      std::to_string(t));
  }
}

void Violated(const std::string& what) {
  throw TimelineError(TimelineError::Kind::kInvariantViolation, what);
}

}  // namespace

TimelineError::TimelineError(Kind kind, const std::string& detail)
    : std::runtime_error(
          (kind == Kind::kMalformedDocument ? "malformed timeline: "
                                            : "timeline invariant violated: ") +
          detail),
      kind_(kind) {}

Quat Slerp(const Quat& a, const Quat& b, double t) {
  CheckUnitInterval(t);
  if (!IsUnit(a) || !IsUnit(b)) {
    throw DomainError("slerp of a non-unit quaternion");
  }
  if (t == 0.0) return a;
  if (t == 1.0) return b;

  const Quat target = Dot(a, b) < 0.0 ? Scale(b, -1.0) : b;
  const double theta = ArcAngle(a, target);
  if (theta < kSlerpLinearThreshold) {
    return Normalized(Add(Scale(a, 1.0 - t), Scale(target, t)));
  }
  const double s = std::sin(theta);
  const double wa = std::sin((1.0 - t) * theta) / s;
  const double wb = std::sin(t * theta) / s;
  return Normalized(Add(Scale(a, wa), Scale(target, wb)));
}

double AngularDistance(const Quat& a, const Quat& b) {
  const Quat bn = Dot(a, b) < 0.0 ? Scale(b, -1.0) : b;
  // Rotation angle is twice the arc between the unit 4-vectors.
  return 2.0 * ArcAngle(Normalized(a), Normalized(bn));
}

Pose BlendPose(const Pose& a, const Pose& b, double t) {
  CheckUnitInterval(t);
  if (a.rotations.size() != b.rotations.size()) {
    throw DomainError("blending poses with different joint counts");
  }
  Pose out;
  out.rotations.reserve(a.rotations.size());
  for (std::size_t j = 0; j < a.rotations.size(); ++j) {
    out.rotations.push_back(Slerp(a.rotations[j], b.rotations[j], t));
  }
  for (std::size_t c = 0; c < out.facial.size(); ++c) {
    out.facial[c] = (1.0 - t) * a.facial[c] + t * b.facial[c];
  }
  const bool second = t >= 0.5;
  out.hand_left = second ? b.hand_left : a.hand_left;
  out.hand_right = second ? b.hand_right : a.hand_right;
  return out;
}

Timeline BuildTimeline(const std::vector<SignEntry>& signs,
                       const TimelineConfig& cfg, const Skeleton& skeleton) {
  if (!(cfg.transition >= 0.0) || !(cfg.frame_rate > 0.0) ||
      (cfg.default_sign_duration && !(*cfg.default_sign_duration > 0.0))) {
    throw DomainError("invalid timeline configuration");
  }
  Timeline tl;
  tl.skeleton_id = skeleton.id;
  tl.joints = skeleton.joints;
  tl.config = cfg;

  double cursor = 0.0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const SignEntry& entry = signs[i];
    for (const Keyframe& kf : entry.keyframes) {
      if (kf.pose.rotations.size() != skeleton.joints.size()) {
        throw SkeletonMismatch("sign " + entry.gloss +
                               " does not match skeleton " + skeleton.id);
      }
    }
    if (auto v = ValidateEntry(entry, skeleton); !v.empty()) {
      throw DomainError("invalid sign entry: " + v.front().ToString());
    }
    const double scale = cfg.default_sign_duration
                             ? *cfg.default_sign_duration / entry.duration()
                             : 1.0;
    if (i > 0) cursor += cfg.transition;
    Clip clip;
    clip.marker.gloss = entry.gloss;
    clip.marker.start = cursor;
    clip.keyframes.reserve(entry.keyframes.size());
    for (const Keyframe& kf : entry.keyframes) {
      clip.keyframes.push_back({cursor + kf.time * scale, kf.pose});
    }
    clip.marker.end = clip.keyframes.back().time;
    cursor = clip.marker.end;
    tl.clips.push_back(std::move(clip));
  }
  tl.duration = cursor;
  return tl;
}

Pose Sample(const Timeline& tl, double t) {
  if (tl.clips.empty()) return Pose::Rest(tl.joints.size());
  if (!(t > 0.0)) return tl.clips.front().keyframes.front().pose;
  if (t >= tl.duration) return tl.clips.back().keyframes.back().pose;

  auto clip_it = std::lower_bound(
      tl.clips.begin(), tl.clips.end(), t,
      [](const Clip& c, double time) { return c.marker.end < time; });
  if (clip_it == tl.clips.end()) return tl.clips.back().keyframes.back().pose;

  if (t < clip_it->marker.start) {
    // Inside the transition gap that precedes this clip.
    const Clip& prev = *std::prev(clip_it);
    const double gap = clip_it->marker.start - prev.marker.end;
    const double u = std::clamp((t - prev.marker.end) / gap, 0.0, 1.0);
    return BlendPose(prev.keyframes.back().pose,
                     clip_it->keyframes.front().pose, u);
  }

  const std::vector<Keyframe>& kfs = clip_it->keyframes;
  auto next = std::upper_bound(
      kfs.begin(), kfs.end(), t,
      [](double time, const Keyframe& k) { return time < k.time; });
  if (next == kfs.begin()) return kfs.front().pose;
  if (next == kfs.end()) return kfs.back().pose;
  const Keyframe& k1 = *std::prev(next);
  const Keyframe& k2 = *next;
  const double u = std::clamp((t - k1.time) / (k2.time - k1.time), 0.0, 1.0);
  return BlendPose(k1.pose, k2.pose, u);
}

void CheckTimeline(const Timeline& tl) {
  const TimelineConfig& cfg = tl.config;
  if (!(cfg.transition >= 0.0)) Violated("transition must be >= 0");
  if (!(cfg.frame_rate > 0.0)) Violated("frame_rate must be > 0");
  if (cfg.default_sign_duration && !(*cfg.default_sign_duration > 0.0)) {
    Violated("default_sign_duration must be > 0");
  }
  if (tl.joints.empty()) Violated("skeleton has no joints");

  double prev_end = 0.0;
  for (std::size_t i = 0; i < tl.clips.size(); ++i) {
    const Clip& c = tl.clips[i];
    const std::string where = "clip " + std::to_string(i) + " (" +
                              c.marker.gloss + ")";
    if (!(c.marker.start < c.marker.end)) Violated(where + ": start >= end");
    const double expected_start = i == 0 ? 0.0 : prev_end + cfg.transition;
    if (std::abs(c.marker.start - expected_start) > kTimeTolerance) {
      Violated(where + ": must start " +
               (i == 0 ? std::string("at 0")
                       : "one transition after the previous clip ends"));
    }
    if (c.keyframes.size() < 2) Violated(where + ": fewer than 2 keyframes");
    if (std::abs(c.keyframes.front().time - c.marker.start) > kTimeTolerance ||
        std::abs(c.keyframes.back().time - c.marker.end) > kTimeTolerance) {
      Violated(where + ": keyframes do not span the marker");
    }
    for (std::size_t k = 0; k < c.keyframes.size(); ++k) {
      const Keyframe& kf = c.keyframes[k];
      if (k > 0 && !(kf.time > c.keyframes[k - 1].time)) {
        Violated(where + ": keyframe times not strictly increasing");
      }
      if (kf.pose.rotations.size() != tl.joints.size()) {
        Violated(where + ": rotation count does not match joints");
      }
      for (const Quat& q : kf.pose.rotations) {
        if (!IsUnit(q)) Violated(where + ": non-unit rotation");
      }
      for (double w : kf.pose.facial) {
        if (!(w >= 0.0 && w <= 1.0)) Violated(where + ": facial weight range");
      }
    }
    prev_end = c.marker.end;
  }
  if (std::abs(tl.duration - prev_end) > kTimeTolerance) {
    Violated("duration does not match the last clip end");
  }
}

std::string SerializeTimeline(const Timeline& timeline) {
  return internal::TimelineToJson(timeline).dump();
}

Timeline ParseTimeline(std::string_view document) {
  Timeline tl;
  try {
    tl = internal::TimelineFromJson(internal::ParseDocument(document), "");
  } catch (const internal::FieldError& e) {
    throw TimelineError(TimelineError::Kind::kMalformedDocument,
                        e.location + ": " + e.what());
  }
  CheckTimeline(tl);
  return tl;
}

namespace internal {

OrderedJson TimelineToJson(const Timeline& tl) {
  OrderedJson doc;
  doc["format"] = "mal2sign-timeline";
  doc["version"] = 1;
  doc["skeleton"] = tl.skeleton_id;
  doc["joints"] = tl.joints;
  OrderedJson cfg;
  if (tl.config.default_sign_duration) {
    cfg["default_sign_duration"] = *tl.config.default_sign_duration;
  } else {
    cfg["default_sign_duration"] = nullptr;
  }
  cfg["transition"] = tl.config.transition;
  cfg["frame_rate"] = tl.config.frame_rate;
  doc["config"] = std::move(cfg);
  doc["duration"] = tl.duration;
  doc["clips"] = OrderedJson::array();
  for (const Clip& c : tl.clips) {
    OrderedJson clip;
    clip["gloss"] = c.marker.gloss;
    clip["start"] = c.marker.start;
    clip["end"] = c.marker.end;
    clip["keyframes"] = OrderedJson::array();
    for (const Keyframe& kf : c.keyframes) {
      OrderedJson k;
      k["time"] = kf.time;
      OrderedJson rot = OrderedJson::array();
      for (const Quat& q : kf.pose.rotations) {
        rot.push_back({q.w, q.x, q.y, q.z});
      }
      k["rotations"] = std::move(rot);
      k["handshape_L"] = HandshapeName(kf.pose.hand_left);
      k["handshape_R"] = HandshapeName(kf.pose.hand_right);
      k["facial"] = kf.pose.facial;
      clip["keyframes"].push_back(std::move(k));
    }
    doc["clips"].push_back(std::move(clip));
  }
  return doc;
}

Timeline TimelineFromJson(const Json& doc, const std::string& path) {
  Timeline tl;
  if (String(doc, "format", path) != "mal2sign-timeline") {
    throw FieldError(Child(path, "format"), "not a timeline document");
  }
  if (Number(doc, "version", path) != 1) {
    throw FieldError(Child(path, "version"), "unsupported version");
  }
  tl.skeleton_id = String(doc, "skeleton", path);
  tl.joints.clear();
  const Json& joints = Array(doc, "joints", path);
  for (std::size_t j = 0; j < joints.size(); ++j) {
    if (!joints[j].is_string()) {
      throw FieldError(Child(Child(path, "joints"), j), "expected string");
    }
    tl.joints.push_back(joints[j].get<std::string>());
  }
  const std::string cfg_path = Child(path, "config");
  const Json& cfg = Field(doc, "config", path);
  const Json& dsd = Field(cfg, "default_sign_duration", cfg_path);
  if (!dsd.is_null()) {
    tl.config.default_sign_duration =
        Number(dsd, Child(cfg_path, "default_sign_duration"));
  }
  tl.config.transition = Number(cfg, "transition", cfg_path);
  tl.config.frame_rate = Number(cfg, "frame_rate", cfg_path);
  tl.duration = Number(doc, "duration", path);

  const Json& clips = Array(doc, "clips", path);
  for (std::size_t i = 0; i < clips.size(); ++i) {
    const std::string cpath = Child(Child(path, "clips"), i);
    const Json& c = clips[i];
    Clip clip;
    clip.marker.gloss = String(c, "gloss", cpath);
    clip.marker.start = Number(c, "start", cpath);
    clip.marker.end = Number(c, "end", cpath);
    const Json& kfs = Array(c, "keyframes", cpath);
    for (std::size_t k = 0; k < kfs.size(); ++k) {
      const std::string kpath = Child(Child(cpath, "keyframes"), k);
      const Json& kj = kfs[k];
      Keyframe kf;
      kf.time = Number(kj, "time", kpath);
      const Json& rot = Array(kj, "rotations", kpath);
      for (std::size_t j = 0; j < rot.size(); ++j) {
        const std::string qpath = Child(Child(kpath, "rotations"), j);
        const Json& q = rot[j];
        if (!q.is_array() || q.size() != 4) {
          throw FieldError(qpath, "expected [w, x, y, z]");
        }
        kf.pose.rotations.push_back(
            {Number(q[0], qpath), Number(q[1], qpath), Number(q[2], qpath),
             Number(q[3], qpath)});
      }
      for (auto [key, hand] : {std::pair{"handshape_L", &kf.pose.hand_left},
                               std::pair{"handshape_R", &kf.pose.hand_right}}) {
        auto h = ParseHandshape(String(kj, key, kpath));
        if (!h) throw FieldError(Child(kpath, key), "unknown handshape");
        *hand = *h;
      }
      const Json& facial = Array(kj, "facial", kpath);
      if (facial.size() != kf.pose.facial.size()) {
        throw FieldError(Child(kpath, "facial"), "expected 3 weights");
      }
      for (std::size_t f = 0; f < facial.size(); ++f) {
        kf.pose.facial[f] = Number(facial[f], Child(Child(kpath, "facial"), f));
      }
      clip.keyframes.push_back(std::move(kf));
    }
    tl.clips.push_back(std::move(clip));
  }
  return tl;
}

}  // namespace internal

}  // namespace mal2sign

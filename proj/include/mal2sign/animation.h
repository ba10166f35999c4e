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

#ifndef MAL2SIGN_ANIMATION_H_
#define MAL2SIGN_ANIMATION_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mal2sign/lexicon.h"
#include "mal2sign/pose.h"

namespace mal2sign {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Below this arc angle (radians) Slerp falls back to normalized lerp.
inline constexpr double kSlerpLinearThreshold = 1e-5;

// Shortest-arc spherical interpolation. t == 0 and t == 1 return the
// endpoints unchanged. Throws DomainError for t outside [0, 1] or inputs
// that are not unit within kUnitTolerance.
Quat Slerp(const Quat& a, const Quat& b, double t);

// Rotation angle (radians) taking a to b; q and -q are the same rotation.
double AngularDistance(const Quat& a, const Quat& b);

// Per-joint slerp, linear facial weights, handshapes switch to b's at
// t >= 0.5.
Pose BlendPose(const Pose& a, const Pose& b, double t);

struct TimelineConfig {
  // When set, every clip is time-scaled to this length.
  std::optional<double> default_sign_duration;
  double transition = 0.3;
  double frame_rate = 30.0;  // informational; sampling is continuous

  bool operator==(const TimelineConfig&) const = default;
};

struct SignMarker {
  std::string gloss;
  double start = 0.0;
  double end = 0.0;

  bool operator==(const SignMarker&) const = default;
};

struct Clip {
  SignMarker marker;
  std::vector<Keyframe> keyframes;  // global time

  bool operator==(const Clip&) const = default;
};

struct Timeline {
  std::string skeleton_id{kDefaultSkeletonId};
  std::vector<std::string> joints{kDefaultJoints.begin(), kDefaultJoints.end()};
  TimelineConfig config;
  std::vector<Clip> clips;
  double duration = 0.0;

  bool operator==(const Timeline&) const = default;
};

class SkeletonMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TimelineError : public std::runtime_error {
 public:
  enum class Kind { kMalformedDocument, kInvariantViolation };

  TimelineError(Kind kind, const std::string& detail);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Lays the clips end to end with cfg.transition seconds between them.
// Entries are checked against |skeleton|; a rotation count that does not
// match raises SkeletonMismatch.
Timeline BuildTimeline(const std::vector<SignEntry>& signs,
                       const TimelineConfig& cfg,
                       const Skeleton& skeleton = Skeleton{});

// Pose at global time t. Clamps outside [0, duration]; blends across
// transition gaps; the rest pose for an empty timeline.
Pose Sample(const Timeline& timeline, double t);

// Throws TimelineError(kInvariantViolation) naming the first broken
// invariant.
void CheckTimeline(const Timeline& timeline);

// Canonical document: fixed key order, shortest round-trip number format.
std::string SerializeTimeline(const Timeline& timeline);
Timeline ParseTimeline(std::string_view document);

}  // namespace mal2sign

#endif  // MAL2SIGN_ANIMATION_H_

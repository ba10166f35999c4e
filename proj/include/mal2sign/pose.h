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

#ifndef MAL2SIGN_POSE_H_
#define MAL2SIGN_POSE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mal2sign {

inline constexpr std::string_view kDefaultSkeletonId = "mal2sign-skel-11/1";

// Joint order is part of every serialized pose.
inline constexpr std::array<std::string_view, 11> kDefaultJoints = {
    "root",     "spine",      "chest",   "neck",       "head",    "shoulder.L",
    "elbow.L",  "wrist.L",    "shoulder.R", "elbow.R", "wrist.R",
};

struct Skeleton {
  std::string id{kDefaultSkeletonId};
  std::vector<std::string> joints{kDefaultJoints.begin(), kDefaultJoints.end()};

  std::optional<std::size_t> JointIndex(std::string_view name) const;
  bool operator==(const Skeleton&) const = default;
};

// Rotation quaternion stored as (w, x, y, z).
struct Quat {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double Norm() const;
  bool operator==(const Quat&) const = default;
};

inline constexpr double kUnitTolerance = 1e-6;

bool IsUnit(const Quat& q, double tolerance = kUnitTolerance);

enum class Handshape { kFlat, kFist, kPoint, kSpread, kPinch, kNeutral };

std::string_view HandshapeName(Handshape h);
std::optional<Handshape> ParseHandshape(std::string_view name);

inline constexpr std::array<std::string_view, 3> kFacialChannels = {
    "brow_raise", "mouth_open", "smile"};

struct Pose {
  std::vector<Quat> rotations;  // one per skeleton joint, in joint order
  Handshape hand_left = Handshape::kNeutral;
  Handshape hand_right = Handshape::kNeutral;
  std::array<double, 3> facial{};  // indexed like kFacialChannels

  // Identity rotations, neutral hands, zero facial weights.
  static Pose Rest(std::size_t joint_count = kDefaultJoints.size());

  bool operator==(const Pose&) const = default;
};

struct Keyframe {
  double time = 0.0;
  Pose pose;

  bool operator==(const Keyframe&) const = default;
};

}  // namespace mal2sign

#endif  // MAL2SIGN_POSE_H_

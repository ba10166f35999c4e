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

#include "mal2sign/pose.h"

#include <cmath>

namespace mal2sign {

namespace {

constexpr std::array<std::string_view, 6> kHandshapeNames = {
    "flat", "fist", "point", "spread", "pinch", "neutral"};

}  // namespace

std::optional<std::size_t> Skeleton::JointIndex(std::string_view name) const {
  for (std::size_t i = 0; i < joints.size(); ++i) {
    if (joints[i] == name) return i;
  }
  return std::nullopt;
}

double Quat::Norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

bool IsUnit(const Quat& q, double tolerance) {
  const double n = q.Norm();
  return std::isfinite(n) && std::abs(n - 1.0) <= tolerance;
}

std::string_view HandshapeName(Handshape h) {
  return kHandshapeNames[static_cast<std::size_t>(h)];
}

std::optional<Handshape> ParseHandshape(std::string_view name) {
  for (std::size_t i = 0; i < kHandshapeNames.size(); ++i) {
    if (kHandshapeNames[i] == name) return static_cast<Handshape>(i);
  }
  return std::nullopt;
}

Pose Pose::Rest(std::size_t joint_count) {
  Pose p;
  p.rotations.assign(joint_count, Quat{});
  return p;
}

}  // namespace mal2sign

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

#ifndef MAL2SIGN_SRC_TIMELINE_JSON_H_
#define MAL2SIGN_SRC_TIMELINE_JSON_H_

#include "json_util.h"
#include "mal2sign/animation.h"

namespace mal2sign::internal {

OrderedJson TimelineToJson(const Timeline& timeline);

// Structure only; throws FieldError. Invariants are checked by the caller.
Timeline TimelineFromJson(const Json& doc, const std::string& path);

}  // namespace mal2sign::internal

#endif  // MAL2SIGN_SRC_TIMELINE_JSON_H_

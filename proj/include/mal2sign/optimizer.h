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

#ifndef MAL2SIGN_OPTIMIZER_H_
#define MAL2SIGN_OPTIMIZER_H_

#include <set>
#include <string>
#include <vector>

#include "mal2sign/morphology.h"

namespace mal2sign {

// Words the signed output omits, by tag class or by exact surface form.
struct DropPolicy {
  std::set<PosTag> drop_tags;
  std::set<std::u32string> drop_words;
};

// Determiners, copulas and particles; no word list.
DropPolicy DefaultDropPolicy();

// Stage two. Returns the elements that survive |policy|, in input order and
// unmodified. Never reorders: Malayalam and the target sign language are
// both SOV.
std::vector<TaggedToken> Optimize(const std::vector<TaggedToken>& tagged,
                                  const DropPolicy& policy);

bool IsDropped(const TaggedToken& tt, const DropPolicy& policy);

}  // namespace mal2sign

#endif  // MAL2SIGN_OPTIMIZER_H_

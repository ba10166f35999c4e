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

#include "mal2sign/optimizer.h"

namespace mal2sign {

DropPolicy DefaultDropPolicy() {
  return DropPolicy{{PosTag::kDeterminer, PosTag::kCopula, PosTag::kParticle},
                    {}};
}

bool IsDropped(const TaggedToken& tt, const DropPolicy& policy) {
  return policy.drop_tags.count(tt.tag) > 0 ||
         policy.drop_words.count(tt.token.text) > 0;
}

std::vector<TaggedToken> Optimize(const std::vector<TaggedToken>& tagged,
                                  const DropPolicy& policy) {
  std::vector<TaggedToken> kept;
  kept.reserve(tagged.size());
  for (const TaggedToken& tt : tagged) {
    if (!IsDropped(tt, policy)) kept.push_back(tt);
  }
  return kept;
}

}  // namespace mal2sign

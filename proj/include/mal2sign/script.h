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

#ifndef MAL2SIGN_SCRIPT_H_
#define MAL2SIGN_SCRIPT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mal2sign {

// UTF-8 <-> Unicode scalar sequence. Ill-formed UTF-8 decodes to U+FFFD.
std::u32string DecodeUtf8(std::string_view utf8);
std::string EncodeUtf8(std::u32string_view text);

// Character classes used throughout the pipeline.
constexpr char32_t kVirama = U'്';

bool IsMalayalam(char32_t c);
bool IsMalayalamConsonant(char32_t c);
bool IsChillu(char32_t c);
bool IsCombiningMark(char32_t c);
bool IsSentencePunctuation(char32_t c);

struct DroppedChar {
  std::size_t offset = 0;  // code point index into the source text
  char32_t code_point = 0;

  bool operator==(const DroppedChar&) const = default;
};

// Input text after composition, filtering and whitespace collapse.
struct NormalizedText {
  std::u32string content;
  std::vector<DroppedChar> dropped;
};

struct GraphemeCluster {
  std::u32string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const GraphemeCluster&) const = default;
};

struct Token {
  std::u32string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

// Canonically composes |raw|, collapses whitespace and removes everything
// outside the Malayalam block, ASCII letters/digits, space and . , ? !
// Combining marks with no base character in front of them are removed too.
// Dropped offsets index the code points of |raw|.
NormalizedText NormalizeText(std::string_view raw);
NormalizedText NormalizeText(std::u32string_view raw);

// A cluster is one base character plus its trailing marks. A virama keeps
// the cluster open for one following consonant (conjunct rule).
std::vector<GraphemeCluster> SegmentClusters(std::u32string_view text);

// Splits on spaces and strips sentence punctuation from token edges. When
// |stripped| is given, every removed punctuation character is appended to it
// with its offset into |nt.content|.
std::vector<Token> Tokenize(const NormalizedText& nt,
                            std::vector<DroppedChar>* stripped = nullptr);

}  // namespace mal2sign

#endif  // MAL2SIGN_SCRIPT_H_

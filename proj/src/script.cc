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

#include "mal2sign/script.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace mal2sign {

std::u32string DecodeUtf8(std::string_view utf8) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  std::u32string out(static_cast<std::size_t>(u.countChar32()), U'\0');
  UErrorCode status = U_ZERO_ERROR;
  int32_t n = u.toUTF32(reinterpret_cast<UChar32*>(out.data()),
                        static_cast<int32_t>(out.size()), status);
  if (U_FAILURE(status) && status != U_STRING_NOT_TERMINATED_WARNING) {
    throw std::runtime_error("utf-32 conversion failed");
  }
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
  std::string out;
  u.toUTF8String(out);
  return out;
}

bool IsMalayalam(char32_t c) { return c >= 0x0D00 && c <= 0x0D7F; }

bool IsMalayalamConsonant(char32_t c) { return c >= 0x0D15 && c <= 0x0D3A; }

bool IsChillu(char32_t c) {
  return (c >= 0x0D54 && c <= 0x0D56) || (c >= 0x0D7A && c <= 0x0D7F);
}

bool IsCombiningMark(char32_t c) {
  switch (u_charType(static_cast<UChar32>(c))) {
    case U_NON_SPACING_MARK:
    case U_COMBINING_SPACING_MARK:
    case U_ENCLOSING_MARK:
      return true;
    default:
      return false;
  }
}

bool IsSentencePunctuation(char32_t c) {
  return c == U'.' || c == U',' || c == U'?' || c == U'!';
}

namespace {

bool IsAsciiAlnum(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
         (c >= U'0' && c <= U'9');
}

bool IsKept(char32_t c) {
  return IsMalayalam(c) || IsAsciiAlnum(c) || IsSentencePunctuation(c);
}

std::u32string Compose(const std::u32string& text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  icu::UnicodeString u = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
  icu::UnicodeString composed = nfc->normalize(u, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC failed");
  std::u32string out(static_cast<std::size_t>(composed.countChar32()), U'\0');
  int32_t n = composed.toUTF32(reinterpret_cast<UChar32*>(out.data()),
                               static_cast<int32_t>(out.size()), status);
  out.resize(static_cast<std::size_t>(n));
  return out;
}

}  // namespace

NormalizedText NormalizeText(std::string_view raw) {
  return NormalizeText(DecodeUtf8(raw));
}

NormalizedText NormalizeText(std::u32string_view raw) {
  NormalizedText result;
  std::u32string kept;
  kept.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char32_t c = raw[i];
    if (u_isUWhiteSpace(static_cast<UChar32>(c))) {
      kept.push_back(U' ');
      continue;
    }
    bool keep = IsKept(c);
    if (keep && IsCombiningMark(c)) {
      // A mark needs a base to sit on.
      keep = !kept.empty() && kept.back() != U' ' &&
             !IsSentencePunctuation(kept.back());
    }
    if (keep) {
      kept.push_back(c);
    } else {
      result.dropped.push_back({i, c});
    }
  }

  const std::u32string composed = Compose(kept);
  result.content.reserve(composed.size());
  for (char32_t c : composed) {
    if (c == U' ') {
      if (result.content.empty() || result.content.back() == U' ') continue;
    }
    result.content.push_back(c);
  }
  if (!result.content.empty() && result.content.back() == U' ') {
    result.content.pop_back();
  }
  return result;
}

std::vector<GraphemeCluster> SegmentClusters(std::u32string_view text) {
  std::vector<GraphemeCluster> clusters;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t start = i++;
    while (i < text.size() && IsCombiningMark(text[i])) {
      if (text[i] == kVirama && i + 1 < text.size() &&
          IsMalayalamConsonant(text[i + 1])) {
        i += 2;
      } else {
        ++i;
      }
    }
    clusters.push_back(
        {std::u32string(text.substr(start, i - start)), start, i});
  }
  return clusters;
}

std::vector<Token> Tokenize(const NormalizedText& nt,
                            std::vector<DroppedChar>* stripped) {
  std::vector<Token> tokens;
  const std::u32string& s = nt.content;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == U' ') {
      ++pos;
      continue;
    }
    std::size_t end = s.find(U' ', pos);
    if (end == std::u32string::npos) end = s.size();
    std::size_t b = pos;
    std::size_t e = end;
    while (b < e && IsSentencePunctuation(s[b])) {
      if (stripped) stripped->push_back({b, s[b]});
      ++b;
    }
    std::vector<DroppedChar> tail;
    while (e > b && IsSentencePunctuation(s[e - 1])) {
      --e;
      tail.push_back({e, s[e]});
    }
    if (stripped) stripped->insert(stripped->end(), tail.rbegin(), tail.rend());
    if (b < e) tokens.push_back({s.substr(b, e - b), b, e});
    pos = end;
  }
  return tokens;
}

}  // namespace mal2sign

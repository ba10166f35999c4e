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

#ifndef MAL2SIGN_SRC_JSON_UTIL_H_
#define MAL2SIGN_SRC_JSON_UTIL_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"

namespace mal2sign::internal {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Raised by the readers below; loaders translate it into their own error
// type. |location| is a JSON pointer into the document.
struct FieldError : std::runtime_error {
  FieldError(std::string location, const std::string& what)
      : std::runtime_error(what), location(std::move(location)) {}
  std::string location;
};

inline std::string Child(std::string_view path, std::string_view key) {
  return std::string(path) + "/" + std::string(key);
}

inline std::string Child(std::string_view path, std::size_t index) {
  return std::string(path) + "/" + std::to_string(index);
}

inline Json ParseDocument(std::string_view document) {
  try {
    return Json::parse(document.begin(), document.end());
  } catch (const Json::parse_error& e) {
    throw FieldError("byte " + std::to_string(e.byte), e.what());
  }
}

inline const Json& Field(const Json& obj, std::string_view key,
                         std::string_view path) {
  if (!obj.is_object()) throw FieldError(std::string(path), "expected object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw FieldError(Child(path, key), "missing field");
  }
  return *it;
}

inline std::string String(const Json& obj, std::string_view key,
                          std::string_view path) {
  const Json& v = Field(obj, key, path);
  if (!v.is_string()) throw FieldError(Child(path, key), "expected string");
  return v.get<std::string>();
}

inline double Number(const Json& v, const std::string& location) {
  if (!v.is_number()) throw FieldError(location, "expected number");
  return v.get<double>();
}

inline double Number(const Json& obj, std::string_view key,
                     std::string_view path) {
  return Number(Field(obj, key, path), Child(path, key));
}

inline const Json& Array(const Json& obj, std::string_view key,
                         std::string_view path) {
  const Json& v = Field(obj, key, path);
  if (!v.is_array()) throw FieldError(Child(path, key), "expected array");
  return v;
}

}  // namespace mal2sign::internal

#endif  // MAL2SIGN_SRC_JSON_UTIL_H_

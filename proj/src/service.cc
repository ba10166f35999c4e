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

#include "mal2sign/service.h"

#include <string>

#include "httplib.h"
#include "json_util.h"

namespace mal2sign {

namespace {

using internal::Json;
using internal::OrderedJson;

constexpr const char* kJson = "application/json; charset=utf-8";

void SendError(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(OrderedJson{{"error", message}}.dump(), kJson);
}

}  // namespace

std::unique_ptr<httplib::Server> MakeServer(
    const PipelineResources& resources,
    const std::optional<std::filesystem::path>& static_dir) {
  auto server = std::make_unique<httplib::Server>();
  const PipelineResources* res = &resources;

  server->Post("/api/translate",
               [res](const httplib::Request& req, httplib::Response& out) {
                 Json body = Json::parse(req.body, nullptr, false);
                 if (body.is_discarded() || !body.is_object()) {
                   SendError(out, 400, "request body must be a JSON object");
                   return;
                 }
                 auto text = body.find("text");
                 if (text == body.end() || !text->is_string()) {
                   SendError(out, 400, "missing string field 'text'");
                   return;
                 }
                 const TranslationResult result =
                     Translate(text->get<std::string>(), *res);
                 out.set_content(SerializeResult(result), kJson);
               });

  server->Get("/api/lexicon", [res](const httplib::Request&,
                                    httplib::Response& out) {
    OrderedJson list = OrderedJson::array();
    for (const auto& [gloss, entry] : res->lexicon.entries()) {
      OrderedJson roots = OrderedJson::array();
      for (const auto& r : entry.roots) roots.push_back(EncodeUtf8(r));
      list.push_back({{"gloss", gloss},
                      {"roots", std::move(roots)},
                      {"duration", entry.duration()}});
    }
    out.set_content(list.dump(), kJson);
  });

  server->Get("/api/health", [](const httplib::Request&, httplib::Response& out) {
    out.set_content(
        OrderedJson{{"status", "ok"}, {"version", std::string(kVersion)}}.dump(),
        kJson);
  });

  if (static_dir) server->set_mount_point("/", static_dir->string());

  server->set_exception_handler([](const httplib::Request&,
                                   httplib::Response& out, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    SendError(out, 500, message);
  });
  return server;
}

}  // namespace mal2sign

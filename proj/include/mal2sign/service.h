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

#ifndef MAL2SIGN_SERVICE_H_
#define MAL2SIGN_SERVICE_H_

#include <filesystem>
#include <memory>
#include <optional>

#include "mal2sign/pipeline.h"

namespace httplib {
class Server;
}

namespace mal2sign {

// Registers the /api routes on a new server. |resources| must outlive it;
// handlers only read from it, so requests may run concurrently. When
// |static_dir| is set, its files are served at "/".
std::unique_ptr<httplib::Server> MakeServer(
    const PipelineResources& resources,
    const std::optional<std::filesystem::path>& static_dir = std::nullopt);

}  // namespace mal2sign

#endif  // MAL2SIGN_SERVICE_H_

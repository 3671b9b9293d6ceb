// Copyright 2025 The dqclab Authors
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

#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace dqclab::cli {

// Exit codes: 0 accept, 3 protocol abort, 1 error.
constexpr int kExitAccept = 0;
constexpr int kExitError = 1;
constexpr int kExitAbort = 3;

int cmd_run(const std::string& config_text, std::optional<uint64_t> seed_override,
            const std::optional<std::string>& mode_override, const std::string& out_path,
            bool emit_json, std::ostream& os);

int cmd_distinguish(const std::string& real_text, const std::string& ideal_text,
                    const std::string& simulator, const std::string& out_path, bool emit_json,
                    std::ostream& os);

int cmd_bound(const std::string& graph_spec, int max_weight, const std::string& out_path,
              bool emit_json, std::ostream& os);

int cmd_stabcheck(const std::string& graph_spec, bool generators_only,
                  const std::string& out_path, bool emit_json, std::ostream& os);

int cmd_selftest(const std::string& only, const std::string& out_path, bool emit_json,
                 std::ostream& os);

/// Graph resolution shared by the commands: a corpus name, "@path" to a
/// JSON file, or an inline JSON object.
std::string resolve_graph_spec(const std::string& spec);

}  // namespace dqclab::cli

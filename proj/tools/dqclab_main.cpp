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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dqclab/cli_commands.hpp"

namespace {

std::string read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) {
    std::cerr << "error: cannot open config " << path << '\n';
    std::exit(dqclab::cli::kExitError);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dqclab: delegated measurement-based quantum computing protocols"};
  app.require_subcommand(1);

  std::string config_path, out_path, mode;
  std::optional<uint64_t> seed;
  bool json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the report to this path");
    cmd->add_flag("--json", json, "emit a compact JSON report on stdout");
  };

  auto* run = app.add_subcommand("run", "run a protocol from a config file");
  run->add_option("--config", config_path, "JSON run configuration")->required();
  run->add_option("--seed", seed, "seed override (sample mode)");
  run->add_option("--mode", mode, "sample or enumerate");
  add_common(run);

  std::string real_path, ideal_path, simulator = "clients";
  auto* dist = app.add_subcommand("distinguish", "compare a real and an ideal system");
  dist->add_option("--real", real_path, "real-system config")->required();
  dist->add_option("--ideal", ideal_path, "ideal-system config")->required();
  dist->add_option("--simulator", simulator, "clients, server or none");
  add_common(dist);

  std::string graph_spec;
  int weight = 2;
  auto* bound = app.add_subcommand("bound", "attack sweep against trap verification");
  bound->add_option("--graph", graph_spec, "base graph (corpus name, @file or JSON)");
  bound->add_option("--weight", weight, "maximum attack weight");
  add_common(bound);

  bool generators_only = false;
  auto* stab = app.add_subcommand("stabcheck", "stabilizer-test suites for a graph");
  stab->add_option("--graph", graph_spec, "graph (corpus name, @file or JSON)")->required();
  stab->add_flag("--generators-only", generators_only, "skip the full stabilizer group");
  add_common(stab);

  std::string only;
  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
  self->add_option("--only", only, "comma-separated criterion ids");
  add_common(self);

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    const std::optional<std::string> mode_opt =
        mode.empty() ? std::nullopt : std::make_optional(mode);
    return dqclab::cli::cmd_run(read_config(config_path), seed, mode_opt, out_path, json,
                                std::cout);
  }
  if (dist->parsed()) {
    return dqclab::cli::cmd_distinguish(read_config(real_path), read_config(ideal_path),
                                        simulator, out_path, json, std::cout);
  }
  if (bound->parsed()) {
    return dqclab::cli::cmd_bound(graph_spec, weight, out_path, json, std::cout);
  }
  if (stab->parsed()) {
    return dqclab::cli::cmd_stabcheck(graph_spec, generators_only, out_path, json, std::cout);
  }
  if (self->parsed()) {
    return dqclab::cli::cmd_selftest(only, out_path, json, std::cout);
  }
  return dqclab::cli::kExitError;
}

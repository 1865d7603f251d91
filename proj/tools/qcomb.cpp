// Copyright 2026 The qcomb Authors
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

#include "CLI11.hpp"
#include "qcomb/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qcomb: exact checks for quantum combinatorics"};
  app.require_subcommand(1, 1);
  qcomb::cli::Options opt;
  std::string mode = "standard";
  std::string json_out;
  app.add_option("--mode", mode, "Leavitt relation mode")
      ->check(CLI::IsMember({"standard", "absolute"}));
  app.add_flag("--strict-paper", opt.strict_paper, "literal quiver compatibility condition");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps");
  app.add_option("--json", json_out, "also write the report to this file");
  app.add_flag("--timing", opt.timing, "include wall-clock time in the report");
  app.fallthrough();
  for (const auto& [name, handler] : qcomb::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("files", opt.files, "input JSON files")->required();
    sub->callback([&opt, name = name] { opt.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  opt.mode = qcomb::parse_mode(mode);
  const auto out = qcomb::cli::run(opt);
  const std::string text = out.report.dump(2) + "\n";
  std::cout << text;
  if (!json_out.empty()) {
    std::ofstream f(json_out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << json_out << "\n";
      return 2;
    }
    f << text;
  }
  return out.exit_code;
}

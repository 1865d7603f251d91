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

// End-to-end checks of the qcomb command-line tool on the shipped inputs.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(QCOMB_BIN) + " " + args + " 2>/dev/null";
  Invocation r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(QCOMB_DATA) + "/" + name; }

struct Case {
  const char* command;
  const char* file;
  int code;
};

const Case kCases[] = {
    {"validate", "comatrix2.json", 0},
    {"validate", "omega.json", 0},
    {"grouplikes", "monoid3_grouplikes.json", 0},
    {"primitives", "primitives.json", 0},
    {"admissible", "admissible.json", 0},
    {"pair", "pair.json", 0},
    {"conv", "conv.json", 0},
    {"idempotents", "idempotents.json", 0},
    {"expect", "expect.json", 0},
    {"qbool-check", "bool2.json", 0},
    {"qbool-check", "bool3.json", 0},
    {"qbool-check", "chain3.json", 0},
    {"demorgan", "bool3.json", 0},
    {"quiver-check", "a2.json", 0},
    {"quiver-check", "loop.json", 0},
    {"quiver-check", "quiver5.json", 0},
    {"comodule-check", "comodule.json", 0},
    {"lpa-normalize", "lpa_normalize.json", 0},
    {"lpa-mul", "lpa_mul.json", 0},
    {"lpa-table", "a2.json", 0},
    {"stable-check", "a2_rep.json", 0},
    {"rep-roundtrip", "a2_rep.json", 0},
    {"rep-roundtrip", "loop_rep.json", 0},
    {"cp-audit", "a2.json", 0},
    {"cp-audit", "loop.json", 0},
    {"validate", "counterexamples/omega_bad_eps.json", 1},
    {"qbool-check", "counterexamples/bool2_bad_neg.json", 1},
    {"pair", "counterexamples/comatrix_identity_pair.json", 1},
    {"quiver-check", "counterexamples/comatrix_quiver.json", 1},
    {"stable-check", "counterexamples/loop_rep_zero.json", 1},
};

TEST(Cli, ShippedInputsGiveExpectedVerdicts) {
  for (const auto& c : kCases) {
    const Invocation r = run(std::string(c.command) + " " + data(c.file));
    EXPECT_EQ(r.code, c.code) << c.command << " " << c.file << "\n" << r.out;
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    ASSERT_FALSE(j.is_discarded()) << c.file;
    EXPECT_EQ(j.at("command"), c.command);
    EXPECT_EQ(j.at("verdict"), c.code == 0 ? "pass" : "fail") << c.file;
    EXPECT_EQ(j.at("inputs").at(0).at("sha256").get<std::string>().size(), 64u);
  }
}

TEST(Cli, ReportsAreByteIdenticalAcrossRuns) {
  for (const auto& c : kCases) {
    const std::string args = std::string(c.command) + " --seed 7 " + data(c.file);
    EXPECT_EQ(run(args).out, run(args).out) << args;
  }
}

TEST(Cli, TimingIsOptIn) {
  const auto plain = nlohmann::json::parse(run("validate " + data("omega.json")).out);
  EXPECT_FALSE(plain.contains("timing_ms"));
  const auto timed = nlohmann::json::parse(run("--timing validate " + data("omega.json")).out);
  EXPECT_TRUE(timed.contains("timing_ms"));
}

TEST(Cli, JsonFlagWritesTheSameReport) {
  const auto path = std::filesystem::temp_directory_path() / "qcomb_cli_report.json";
  const Invocation r = run("--json " + path.string() + " validate " + data("comatrix2.json"));
  std::ifstream f(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, r.out);
  std::filesystem::remove(path);
}

TEST(Cli, MalformedInputExitsTwo) {
  const auto path = std::filesystem::temp_directory_path() / "qcomb_cli_malformed.json";
  {
    std::ofstream f(path);
    f << "{\n  \"basis\": [\"a\",\n";
  }
  const Invocation r = run("validate " + path.string());
  EXPECT_EQ(r.code, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "input-error");
  EXPECT_NE(j.at("error").get<std::string>().find(":3:"), std::string::npos) << j.at("error");
  std::filesystem::remove(path);

  EXPECT_EQ(run("validate " + data("does_not_exist.json")).code, 2);
  EXPECT_EQ(run("validate").code, 2);
  EXPECT_EQ(run("--mode bogus validate " + data("omega.json")).code, 2);
}

TEST(Cli, WrongShapeIsAnInputError) {
  const Invocation r = run("qbool-check " + data("comatrix2.json"));
  EXPECT_EQ(r.code, 2);
}

}  // namespace

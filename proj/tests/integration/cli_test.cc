// Copyright 2026 The jamgame Authors.
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

// Drives the jamgame executable end to end and checks exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "jamgame/harness/scenario.h"

namespace jamgame {
namespace {

namespace fs = std::filesystem;
using harness::ReadFile;
using harness::WriteFile;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("jamgame_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(const std::string& args) {
    const std::string command = std::string("\"") + JAMGAME_CLI_PATH + "\" " +
                                args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string WritePreset(const std::string& name) {
    const std::string path = Path(name + ".json");
    EXPECT_EQ(Run("preset " + name + " --out " + path), 0);
    return path;
  }

  fs::path dir_;
};

TEST_F(CliTest, PresetSolveAndVerify) {
  const std::string scenario = WritePreset("fig6");
  const std::string solution = Path("solution.json");
  EXPECT_EQ(Run("solve " + scenario + " --strict --out " + solution), 0);
  EXPECT_EQ(Run("verify " + solution), 0);
  EXPECT_EQ(Run("verify " + solution + " --oracle-only"), 0);
}

TEST_F(CliTest, TamperedSolutionFailsVerify) {
  const std::string scenario = WritePreset("fig6");
  const std::string solution = Path("solution.json");
  ASSERT_EQ(Run("solve " + scenario + " --out " + solution), 0);
  auto doc = nlohmann::json::parse(ReadFile(solution));
  auto& p = doc["categories"][0]["p"];
  double moved = p[0].get<double>() * 0.5 + 0.01;
  p[0] = p[0].get<double>() - moved;
  p[1] = p[1].get<double>() + moved;
  WriteFile(Path("tampered.json"), doc.dump());
  EXPECT_EQ(Run("verify " + Path("tampered.json")), 2);

  auto value = nlohmann::json::parse(ReadFile(solution));
  value["categories"][1]["value"] = value["categories"][1]["value"].get<double>() + 0.5;
  WriteFile(Path("value.json"), value.dump());
  EXPECT_EQ(Run("verify " + Path("value.json")), 2);
}

TEST_F(CliTest, SweepWritesCsv) {
  const std::string scenario = WritePreset("fig5");
  const std::string csv = Path("fig5.csv");
  EXPECT_EQ(Run("sweep " + scenario + " --strict --jobs 2 --out " + csv), 0);
  const std::string text = ReadFile(csv);
  EXPECT_EQ(text.rfind("gamma,", 0), 0u);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST_F(CliTest, TraceSweep) {
  const std::string scenario = WritePreset("fig3");
  const std::string csv = Path("fig3.csv");
  EXPECT_EQ(Run("sweep " + scenario + " --out " + csv), 0);
  EXPECT_EQ(ReadFile(csv).rfind("iteration,x,one_shot_value,V_estimate\n", 0), 0u);
}

TEST_F(CliTest, InvalidInputsExitOne) {
  EXPECT_EQ(Run(""), 1);
  EXPECT_EQ(Run("bogus"), 1);
  EXPECT_EQ(Run("preset fig9"), 1);
  WriteFile(Path("bad.json"), R"({"schema_version": 1, "network": {"n": 2}})");
  EXPECT_EQ(Run("solve " + Path("bad.json")), 1);
  WriteFile(Path("syntax.json"), "{ not json");
  EXPECT_EQ(Run("solve " + Path("syntax.json")), 1);
  EXPECT_EQ(Run("solve " + WritePreset("fig5") + " --jobs 0"), 1);
}

TEST_F(CliTest, MissingFilesExitThree) {
  EXPECT_EQ(Run("solve " + Path("absent.json")), 3);
  EXPECT_EQ(Run("verify " + Path("absent.json")), 3);
  EXPECT_EQ(Run("preset fig5 --out " + Path("no/such/dir/x.json")), 3);
}

TEST_F(CliTest, StrictRejectsUncertifiedSweeps) {
  // A tolerance below any achievable residual leaves rows uncertified.
  const std::string scenario = WritePreset("fig4");
  EXPECT_EQ(Run("sweep " + scenario + " --out " + Path("a.csv")), 0);
  EXPECT_EQ(Run("sweep " + scenario + " --strict --tol 1e-300 --out " + Path("b.csv")), 2);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(Run("--help"), 0); }

}  // namespace
}  // namespace jamgame

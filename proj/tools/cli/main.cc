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

// jamgame: solve, sweep, emit presets and verify solutions.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jamgame/errors.h"
#include "jamgame/harness/csv.h"
#include "jamgame/harness/presets.h"
#include "jamgame/harness/report.h"
#include "jamgame/harness/scenario.h"
#include "jamgame/harness/sweep.h"

namespace {

enum ExitCode {
  kOk = 0,
  kInvalid = 1,
  kCertification = 2,
  kIo = 3,
};

void Emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw jamgame::harness::IoError("failed writing stdout");
  } else {
    jamgame::harness::WriteFile(out_path, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  namespace h = jamgame::harness;

  CLI::App app{"Connectivity jamming game solver and experiment harness"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  h::RunOptions options;
  bool strict = false;
  app.add_option("--out", out_path, "Write output here instead of stdout");
  app.add_option("--tol", options.tol, "Certification tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--oracle-only", options.oracle_only,
               "Skip the closed form and use value iteration");
  app.add_flag("--strict", strict,
               "Exit 2 when any solution fails certification");
  app.add_option("--jobs", options.jobs, "Worker threads for sweeps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string input;
  auto* solve = app.add_subcommand("solve", "Solve a scenario at its base values");
  solve->add_option("scenario", input, "Scenario file")->required();
  auto* sweep = app.add_subcommand("sweep", "Run a scenario sweep to CSV");
  sweep->add_option("scenario", input, "Scenario file")->required();
  auto* preset = app.add_subcommand("preset", "Emit a bundled scenario");
  preset->add_option("name", input, "fig3, fig4, fig5, fig6 or fig7")->required();
  auto* verify = app.add_subcommand("verify", "Certify a solution file");
  verify->add_option("solution", input, "Solution file from solve")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*preset) {
      Emit(out_path, h::DumpJson(h::ScenarioToJson(h::FigurePreset(input))));
      return kOk;
    }
    if (*verify) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(h::ReadFile(input));
      } catch (const nlohmann::json::parse_error& e) {
        throw h::ScenarioError("", std::string("solution parse error: ") + e.what());
      }
      const h::VerifyOutcome outcome = h::VerifySolution(doc, options.tol);
      Emit(out_path, h::DumpJson(outcome.report));
      return outcome.passed ? kOk : kCertification;
    }
    const h::Scenario scenario = h::LoadScenario(input);
    if (*solve) {
      const h::Evaluation ev = h::Evaluate(scenario, options);
      Emit(out_path, h::DumpJson(h::EvaluationToJson(ev)));
      if (strict && (ev.HasError() || ev.MaxResidual() > options.tol)) {
        return kCertification;
      }
      return kOk;
    }
    const h::SweepResult result = h::RunSweep(scenario, options);
    Emit(out_path, h::ToCsv(result.table));
    if (strict && (result.error_rows > 0 || result.certification_failures > 0)) {
      std::cerr << "certification: " << result.certification_failures
                << " uncertified rows, " << result.error_rows
                << " rows with errors\n";
      return kCertification;
    }
    return kOk;
  } catch (const h::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const h::ScenarioError& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return kInvalid;
  } catch (const jamgame::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kCertification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

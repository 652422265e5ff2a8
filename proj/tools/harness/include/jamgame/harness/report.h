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

#ifndef JAMGAME_HARNESS_REPORT_H_
#define JAMGAME_HARNESS_REPORT_H_

#include "json.hpp"

#include "jamgame/harness/scenario.h"
#include "jamgame/harness/sweep.h"

namespace jamgame::harness {

// Solution document written by `solve` and read back by `verify`.
nlohmann::ordered_json EvaluationToJson(const Evaluation& evaluation);

struct VerifyOutcome {
  bool passed = false;
  nlohmann::ordered_json report;
};

// Recomputes every certificate in a solution document. Malformed documents
// throw ScenarioError.
VerifyOutcome VerifySolution(const nlohmann::json& solution, double tol);

}  // namespace jamgame::harness

#endif  // JAMGAME_HARNESS_REPORT_H_

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

#ifndef JAMGAME_ERRORS_H_
#define JAMGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace jamgame {

// Raised when a numerical procedure cannot deliver a certified answer:
// iteration caps, failed brackets, degenerate 2x2 denominators.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// A jammer placed (numerically) on top of a receiver.
class GeometryError : public std::domain_error {
 public:
  explicit GeometryError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace jamgame

#endif  // JAMGAME_ERRORS_H_

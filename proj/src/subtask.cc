// Copyright 2026 The sentscore Authors.
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

#include "sentscore/subtask.h"

namespace sentscore {

std::string_view SubtaskName(Subtask subtask) {
  switch (subtask) {
    case Subtask::kA: return "A";
    case Subtask::kB: return "B";
    case Subtask::kC: return "C";
    case Subtask::kD: return "D";
    case Subtask::kE: return "E";
  }
  return "";
}

std::optional<Subtask> ParseSubtask(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'a': case 'A': return Subtask::kA;
    case 'b': case 'B': return Subtask::kB;
    case 'c': case 'C': return Subtask::kC;
    case 'd': case 'D': return Subtask::kD;
    case 'e': case 'E': return Subtask::kE;
    default: return std::nullopt;
  }
}

Scale ScaleFor(Subtask subtask) {
  switch (subtask) {
    case Subtask::kA: return Scale::Three();
    case Subtask::kB:
    case Subtask::kD: return Scale::Two();
    case Subtask::kC:
    case Subtask::kE: return Scale::Five();
  }
  return Scale::Five();
}

bool IsQuantification(Subtask subtask) {
  return subtask == Subtask::kD || subtask == Subtask::kE;
}

bool IsTopical(Subtask subtask) { return subtask != Subtask::kA; }

std::string_view OfficialMeasure(Subtask subtask) {
  return MeasuresFor(subtask).front();
}

std::vector<std::string_view> MeasuresFor(Subtask subtask) {
  using namespace measure;
  switch (subtask) {
    case Subtask::kA: return {kF1PN, kRhoPN, kAccuracy};
    case Subtask::kB: return {kRhoPN, kF1PN, kAccuracy};
    case Subtask::kC: return {kMaeMacro, kMaeMicro};
    case Subtask::kD: return {kKld, kAe, kRae};
    case Subtask::kE: return {kEmd};
  }
  return {};
}

bool HigherIsBetter(std::string_view name) {
  return name == measure::kF1PN || name == measure::kRhoPN ||
         name == measure::kAccuracy;
}

}  // namespace sentscore

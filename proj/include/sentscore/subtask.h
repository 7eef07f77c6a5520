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

// The five subtask shapes and the prediction payloads they accept.
//
//        | classification | quantification
//   -----+----------------+---------------
//   2-pt |       B        |       D
//   3-pt |       A        |
//   5-pt |       C        |       E
//
// A scores a flat item set; B..E are scored per topic and macroaveraged.

#ifndef SENTSCORE_SUBTASK_H_
#define SENTSCORE_SUBTASK_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sentscore/core.h"

namespace sentscore {

enum class Subtask { kA, kB, kC, kD, kE };

inline constexpr Subtask kAllSubtasks[] = {Subtask::kA, Subtask::kB,
                                           Subtask::kC, Subtask::kD,
                                           Subtask::kE};

std::string_view SubtaskName(Subtask subtask);  // "A".."E"
std::optional<Subtask> ParseSubtask(std::string_view text);  // a..e, A..E

Scale ScaleFor(Subtask subtask);
bool IsQuantification(Subtask subtask);
bool IsTopical(Subtask subtask);

// Measure names used in reports.
namespace measure {
inline constexpr std::string_view kF1PN = "F1_PN";
inline constexpr std::string_view kRhoPN = "RHO_PN";
inline constexpr std::string_view kAccuracy = "ACC";
inline constexpr std::string_view kMaeMacro = "MAE_M";
inline constexpr std::string_view kMaeMicro = "MAE_MU";
inline constexpr std::string_view kKld = "KLD";
inline constexpr std::string_view kAe = "AE";
inline constexpr std::string_view kRae = "RAE";
inline constexpr std::string_view kEmd = "EMD";
}  // namespace measure

std::string_view OfficialMeasure(Subtask subtask);
// Official measure first, then secondary measures in report order.
std::vector<std::string_view> MeasuresFor(Subtask subtask);
bool HigherIsBetter(std::string_view measure_name);

using TopicDistributions = std::map<std::string, Distribution>;

// Labels per item for A/B/C; one estimated distribution per topic for D/E.
using Predictions = std::variant<std::vector<LabeledItem>, TopicDistributions>;

}  // namespace sentscore

#endif  // SENTSCORE_SUBTASK_H_

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

// Subtask dispatch, per-topic scoring with macroaveraging, and synthesis of
// prevalence-drifted copies of a topic.

#ifndef SENTSCORE_HARNESS_H_
#define SENTSCORE_HARNESS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sentscore/core.h"
#include "sentscore/subtask.h"

namespace sentscore {

struct Measure {
  std::string name;
  double value = 0.0;

  friend bool operator==(const Measure&, const Measure&) = default;
};

struct ScoreReport {
  Subtask subtask = Subtask::kA;
  Measure official;
  std::vector<Measure> secondary;
  // Keyed by topic id; each entry lists the official measure then the
  // secondary ones. Empty for subtask A.
  std::map<std::string, std::vector<Measure>> per_topic;
  std::size_t n_topics = 0;
  std::size_t n_items = 0;

  // Official first, then secondary.
  std::vector<Measure> AllMeasures() const;
};

// Scores `predictions` against `gold`, whose labels must be on the subtask's
// scale (collapse five-point gold first for A, B and D).
//
// For B..E every measure is computed per topic and averaged over topics in
// lexicographic topic-id order. Quantification topics are smoothed with that
// topic's item count. Coverage must be exact: a missing or extra item (A..C)
// or topic (D, E) is an error.
ScoreReport Score(Subtask subtask, std::span<const LabeledItem> gold,
                  const Predictions& predictions);

struct DriftSpec {
  TopicSet source;
  // Fraction of each class to remove, in [0, 1). Unlisted classes are kept.
  std::map<Label, double> removals;
  std::uint64_t seed = 0;
  int variants = 1;
};

// Produces `variants` copies of the source topic, each removing
// round(fraction * count) items per class (halves rounded away from zero).
// Removed items are drawn from a single mt19937_64 stream seeded with `seed`;
// retained items keep their source order. Variant k (1-based) is named
// "<topic>#<k>".
std::vector<TopicSet> GenerateDrift(const DriftSpec& spec);

}  // namespace sentscore

#endif  // SENTSCORE_HARNESS_H_

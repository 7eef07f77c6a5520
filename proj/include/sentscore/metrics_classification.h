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

// Classification measures: F1 averaged over the polar classes, macroaveraged
// recall, accuracy, and micro/macro mean absolute error for ordinal labels.
//
// A ratio whose denominator is zero evaluates to 0, as does F1 when precision
// and recall are both 0. Every measure is therefore total.

#ifndef SENTSCORE_METRICS_CLASSIFICATION_H_
#define SENTSCORE_METRICS_CLASSIFICATION_H_

#include <span>
#include <vector>

#include "sentscore/core.h"

namespace sentscore::classification {

struct ClassScore {
  Label label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// One entry per class, ascending.
std::vector<ClassScore> PerClassScores(const ConfusionMatrix& cm);

// (F1(Positive) + F1(Negative)) / 2. Defined on Two and Three; the Neutral
// row and column only enter through the polar precisions and recalls.
double F1PN(const ConfusionMatrix& cm);

// Mean per-class recall over every class of the scale (two or three).
double MacroRecall(const ConfusionMatrix& cm);

double Accuracy(const ConfusionMatrix& cm);

// Mean |predicted - gold| over all pairs.
double MaeMicro(std::span<const LabelPair> pairs);
// Mean over gold classes with at least one item of the within-class MAE.
double MaeMacro(std::span<const LabelPair> pairs, Scale scale);

// Item-list forms; items are aligned by key first.
double MaeMicro(std::span<const LabeledItem> gold,
                std::span<const LabeledItem> pred, Scale scale);
double MaeMacro(std::span<const LabeledItem> gold,
                std::span<const LabeledItem> pred, Scale scale);

}  // namespace sentscore::classification

#endif  // SENTSCORE_METRICS_CLASSIFICATION_H_

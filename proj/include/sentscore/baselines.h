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

// Trivial reference systems that need no learning.

#ifndef SENTSCORE_BASELINES_H_
#define SENTSCORE_BASELINES_H_

#include <span>
#include <variant>

#include "sentscore/core.h"
#include "sentscore/subtask.h"

namespace sentscore::baselines {

// Same label for every item (A, B, C).
struct ConstantClass {
  Label label;
};

// The training-set distribution for every topic (D, E).
struct TrainPrevalence {
  Distribution distribution;
};

// All mass on one class for every topic (D, E).
struct MajorityPrevalence {
  Label label;
};

using Policy = std::variant<ConstantClass, TrainPrevalence, MajorityPrevalence>;

struct BaselineSpec {
  Subtask subtask;
  Policy policy;
};

// Labels of `gold_shape` are ignored; only its item keys and topics are
// used. Throws kPolicySubtaskMismatch for a policy the subtask cannot take.
Predictions RunBaseline(const BaselineSpec& spec,
                        std::span<const LabeledItem> gold_shape);

}  // namespace sentscore::baselines

#endif  // SENTSCORE_BASELINES_H_

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

// Quantification measures comparing a true prevalence vector `p` with an
// estimate `phat` over the same scale.

#ifndef SENTSCORE_METRICS_QUANTIFICATION_H_
#define SENTSCORE_METRICS_QUANTIFICATION_H_

#include <cstdint>

#include "sentscore/core.h"

namespace sentscore::quantification {

// Both distributions after additive smoothing; every entry is > 0.
struct SmoothedPair {
  Distribution p;
  Distribution phat;
  double epsilon = 0.0;
};

// epsilon = 1 / (2 * test_size); each entry v becomes
// (v + epsilon) / (1 + epsilon * |C|).
SmoothedPair Smooth(const Distribution& p, const Distribution& phat,
                    std::int64_t test_size);

// Kullback-Leibler divergence of the smoothed pair, natural log.
double Kld(const Distribution& p, const Distribution& phat,
           std::int64_t test_size);

double AbsoluteError(const Distribution& p, const Distribution& phat);

// Relative absolute error over the smoothed pair, so a zero true prevalence
// never divides by zero.
double RelativeAbsoluteError(const Distribution& p, const Distribution& phat,
                             std::int64_t test_size);

// Unsmoothed relative absolute error. Throws kInvalidDistribution when some
// true prevalence is 0.
double RawRelativeAbsoluteError(const Distribution& p,
                                const Distribution& phat);

// Earth mover's distance with unit distance between adjacent classes:
// the L1 distance between the two cumulative distributions.
double Emd(const Distribution& p, const Distribution& phat);

}  // namespace sentscore::quantification

#endif  // SENTSCORE_METRICS_QUANTIFICATION_H_

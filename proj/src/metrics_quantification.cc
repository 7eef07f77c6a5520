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

#include "sentscore/metrics_quantification.h"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "sentscore/error.h"

namespace sentscore::quantification {
namespace {

void RequireSameScale(const Distribution& p, const Distribution& phat) {
  if (p.scale() != phat.scale()) {
    throw Error(ErrorCode::kScaleMismatch,
                fmt::format("true distribution is {}, estimate is {}",
                            p.scale().name(), phat.scale().name()));
  }
}

Distribution SmoothOne(const Distribution& d, double epsilon) {
  const double norm = 1.0 + epsilon * static_cast<double>(d.size());
  std::vector<double> out;
  out.reserve(d.size());
  for (double v : d.values()) out.push_back((v + epsilon) / norm);
  return Distribution::Make(d.scale(), std::move(out));
}

}  // namespace

SmoothedPair Smooth(const Distribution& p, const Distribution& phat,
                    std::int64_t test_size) {
  RequireSameScale(p, phat);
  if (test_size < 1) {
    throw Error(ErrorCode::kNonpositiveTestSize,
                fmt::format("test size {} must be at least 1", test_size));
  }
  const double epsilon = 1.0 / (2.0 * static_cast<double>(test_size));
  return SmoothedPair{SmoothOne(p, epsilon), SmoothOne(phat, epsilon),
                      epsilon};
}

double Kld(const Distribution& p, const Distribution& phat,
           std::int64_t test_size) {
  const SmoothedPair s = Smooth(p, phat, test_size);
  double sum = 0.0;
  for (std::size_t j = 0; j < s.p.size(); ++j) {
    const double pj = s.p.at_index(j);
    sum += pj * std::log(pj / s.phat.at_index(j));
  }
  // Rounding can push an exact zero slightly negative.
  return sum < 0.0 ? 0.0 : sum;
}

double AbsoluteError(const Distribution& p, const Distribution& phat) {
  RequireSameScale(p, phat);
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    sum += std::abs(phat.at_index(j) - p.at_index(j));
  }
  return sum / static_cast<double>(p.size());
}

double RawRelativeAbsoluteError(const Distribution& p,
                                const Distribution& phat) {
  RequireSameScale(p, phat);
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double pj = p.at_index(j);
    if (pj == 0.0) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "relative error undefined for a zero true prevalence");
    }
    sum += std::abs(phat.at_index(j) - pj) / pj;
  }
  return sum / static_cast<double>(p.size());
}

double RelativeAbsoluteError(const Distribution& p, const Distribution& phat,
                             std::int64_t test_size) {
  const SmoothedPair s = Smooth(p, phat, test_size);
  return RawRelativeAbsoluteError(s.p, s.phat);
}

double Emd(const Distribution& p, const Distribution& phat) {
  RequireSameScale(p, phat);
  double cum_p = 0.0;
  double cum_phat = 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    cum_p += p.at_index(j);
    cum_phat += phat.at_index(j);
    sum += std::abs(cum_phat - cum_p);
  }
  return sum;
}

}  // namespace sentscore::quantification

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

// Random valid input files, written by hand rather than with the emitters.

#ifndef SENTSCORE_TESTS_FIXTURES_H_
#define SENTSCORE_TESTS_FIXTURES_H_

#include <fmt/format.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "sentscore/subtask.h"

namespace sentscore::testing {

enum class FileKind { kGold, kPredictions, kVotes };

inline std::string RandomTopic(std::mt19937_64& rng, int index) {
  static const char* const kWords[] = {"amy schumer", "apple", "Star Wars",
                                       "ISIS", "naps", "game of thrones"};
  return fmt::format("{} {}", kWords[rng() % 6], index);
}

inline std::string LabelWord(int v, Scale scale, std::mt19937_64& rng) {
  if (scale.kind() == ScaleKind::kFive) {
    return (v > 0 && rng() % 2) ? fmt::format("+{}", v) : std::to_string(v);
  }
  std::string w = v > 0 ? "positive" : (v < 0 ? "negative" : "neutral");
  if (rng() % 4 == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
  return w;
}

// Text of a random valid file. Comment and blank lines are sprinkled in and
// the trailing newline is sometimes left off.
inline std::string RandomFile(std::mt19937_64& rng, FileKind kind,
                              Subtask subtask) {
  std::string out;
  const auto maybe_noise = [&] {
    if (rng() % 10 == 0) out += "# comment\n";
    if (rng() % 15 == 0) out += "\n";
  };
  const int topics = 1 + static_cast<int>(rng() % 4);
  if (kind == FileKind::kVotes) {
    const int n = 1 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) {
      maybe_noise();
      out += fmt::format("{}", 600000000000000000ULL + i * 7919ULL);
      for (int k = 0; k < 5; ++k) {
        out += fmt::format("\t{}", static_cast<int>(rng() % 5) - 2);
      }
      out += '\n';
    }
  } else if (kind == FileKind::kPredictions && IsQuantification(subtask)) {
    const std::size_t n = subtask == Subtask::kD ? 2 : 5;
    for (int t = 0; t < topics; ++t) {
      maybe_noise();
      const auto p = RandomSimplex(rng, n, 0.2);
      out += RandomTopic(rng, t);
      for (double v : p) out += fmt::format("\t{}", v);
      out += '\n';
    }
  } else {
    // Gold of every subtask, or item predictions for A..C. D and E gold use
    // the C layout.
    const Subtask layout = (kind == FileKind::kGold && IsQuantification(subtask))
                               ? Subtask::kC
                               : subtask;
    const Scale scale = layout == Subtask::kC ? Scale::Five()
                                              : ScaleFor(layout);
    const int n_topics = IsTopical(layout) ? topics : 1;
    for (int t = 0; t < n_topics; ++t) {
      const std::string topic = RandomTopic(rng, t);
      const int n = 1 + static_cast<int>(rng() % 12);
      for (int i = 0; i < n; ++i) {
        maybe_noise();
        const int v = scale.classes()[rng() % scale.size()].value();
        out += fmt::format("{}", 635930169241374720ULL + i);
        if (IsTopical(layout)) out += "\t" + topic;
        out += "\t" + LabelWord(v, scale, rng) + "\n";
      }
    }
    // D gold is collapsed on read and may lose every item; keep one polar.
    if (kind == FileKind::kGold && subtask == Subtask::kD) {
      out += "1\t" + RandomTopic(rng, 0) + "\t-2\n";
    }
  }
  if (rng() % 5 == 0 && !out.empty()) out.pop_back();
  return out;
}

}  // namespace sentscore::testing

#endif  // SENTSCORE_TESTS_FIXTURES_H_

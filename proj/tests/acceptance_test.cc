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

// Acceptance suite. Prints one PASS/FAIL line per criterion. Exits nonzero
// only when a criterion fails that is not listed in kKnownFailures, or when
// a listed one starts passing.

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.h"
#include "oracles.h"
#include "sentscore/baselines.h"
#include "sentscore/consolidation.h"
#include "sentscore/formats.h"
#include "sentscore/harness.h"
#include "sentscore/leaderboard.h"
#include "sentscore/metrics_classification.h"
#include "sentscore/metrics_quantification.h"

namespace sentscore {
namespace {

namespace t = testing;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

// Criteria that cannot hold as stated. See README.
const std::set<int> kKnownFailures = {5};

std::vector<LabeledItem> TestSetCounts() {
  std::vector<LabeledItem> out;
  int id = 0;
  for (auto [label, n] : {std::pair{1, 7059}, {0, 10342}, {-1, 3231}}) {
    for (int i = 0; i < n; ++i) {
      out.push_back({std::to_string(id++), std::nullopt, Label(label)});
    }
  }
  return out;
}

Outcome Criterion1() {
  Outcome o;
  const auto gold = TestSetCounts();
  const ScoreReport r = Score(
      Subtask::kA, gold,
      baselines::RunBaseline({Subtask::kA, baselines::ConstantClass{kPositive}},
                             gold));
  const double want[] = {0.255, 0.333, 0.342};
  const auto all = r.AllMeasures();
  for (std::size_t i = 0; i < 3; ++i) {
    o.Check(std::fabs(all[i].value - want[i]) <= 5e-4,
            fmt::format("{} = {:.6f}, want {}", all[i].name, all[i].value,
                        want[i]));
  }
  o.detail = o.pass ? fmt::format("F1_PN {:.4f}, RHO_PN {:.4f}, ACC {:.4f}",
                                  all[0].value, all[1].value, all[2].value)
                    : o.detail;
  return o;
}

Outcome Criterion2() {
  Outcome o;
  std::mt19937_64 rng(2);
  for (int round = 0; round < 500 && o.pass; ++round) {
    std::vector<LabeledItem> gold;
    const int topics = 2 + static_cast<int>(rng() % 8);
    for (int k = 0; k < topics; ++k) {
      auto part = t::RandomItems(rng, Scale::Two(), 2 + rng() % 100,
                                 fmt::format("topic {}", k));
      part[0].label = kPositive;
      part[1].label = kNegative;
      gold.insert(gold.end(), part.begin(), part.end());
    }
    const double rho =
        Score(Subtask::kB, gold,
              baselines::RunBaseline(
                  {Subtask::kB, baselines::ConstantClass{kPositive}}, gold))
            .official.value;
    o.Check(rho == 0.5, fmt::format("round {}: RHO_PN = {}", round, rho));
  }
  if (o.pass) o.detail = "500 random multi-topic gold sets, RHO_PN == 0.5";
  return o;
}

// Five topics with fixed counts per class. Expected values are evaluated
// term by term from the counts, independently of the library.
Outcome Criterion3() {
  Outcome o;
  const std::vector<std::vector<int>> counts = {{3, 1, 6, 8, 2},
                                                {0, 0, 10, 5, 5},
                                                {1, 4, 4, 4, 1},
                                                {12, 0, 0, 0, 1},
                                                {2, 2, 2, 2, 30}};
  const std::vector<double> train = {0.05, 0.15, 0.35, 0.35, 0.10};
  const std::vector<double> train2 = {0.3, 0.7};  // negative, positive

  std::vector<LabeledItem> five_gold, two_gold;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const std::string topic = fmt::format("topic {}", k);
    for (int c = 0; c < 5; ++c) {
      for (int i = 0; i < counts[k][c]; ++i) {
        const LabeledItem item{fmt::format("{}-{}", c, i), topic, Label(c - 2)};
        five_gold.push_back(item);
        if (c != 2) {
          two_gold.push_back({item.item_id, topic, c < 2 ? kNegative : kPositive});
        }
      }
    }
  }

  // Hand computations.
  double kld1 = 0.0, kld2 = 0.0, emd1 = 0.0, emd2 = 0.0;
  for (const auto& row : counts) {
    const double n5 = row[0] + row[1] + row[2] + row[3] + row[4];
    std::vector<double> p5(5);
    for (int c = 0; c < 5; ++c) p5[c] = row[c] / n5;
    emd1 += t::BoundaryFlowEmd(p5, train);
    emd2 += t::BoundaryFlowEmd(p5, {0, 0, 0, 1, 0});
    const double neg = row[0] + row[1];
    const double pos = row[3] + row[4];
    const std::vector<double> p2 = {neg / (neg + pos), pos / (neg + pos)};
    const auto n2 = static_cast<std::int64_t>(neg + pos);
    kld1 += t::SpreadsheetKld(p2, train2, n2);
    kld2 += t::SpreadsheetKld(p2, {0.0, 1.0}, n2);
  }
  kld1 /= 5, kld2 /= 5, emd1 /= 5, emd2 /= 5;

  using baselines::MajorityPrevalence;
  using baselines::TrainPrevalence;
  const auto score = [](Subtask s, const std::vector<LabeledItem>& gold,
                        baselines::Policy policy) {
    return Score(s, gold, baselines::RunBaseline({s, policy}, gold)).official.value;
  };
  const double got_kld1 = score(
      Subtask::kD, two_gold,
      TrainPrevalence{Distribution::Make(Scale::Two(), train2)});
  const double got_kld2 =
      score(Subtask::kD, two_gold, MajorityPrevalence{kPositive});
  const double got_emd1 = score(
      Subtask::kE, five_gold,
      TrainPrevalence{Distribution::Make(Scale::Five(), train)});
  const double got_emd2 =
      score(Subtask::kE, five_gold, MajorityPrevalence{kPositive});
  o.Check(std::fabs(got_kld1 - kld1) <= 1e-9, fmt::format("KLD1 {} vs {}", got_kld1, kld1));
  o.Check(std::fabs(got_kld2 - kld2) <= 1e-9, fmt::format("KLD2 {} vs {}", got_kld2, kld2));
  o.Check(std::fabs(got_emd1 - emd1) <= 1e-9, fmt::format("EMD1 {} vs {}", got_emd1, emd1));
  o.Check(std::fabs(got_emd2 - emd2) <= 1e-9, fmt::format("EMD2 {} vs {}", got_emd2, emd2));
  if (o.pass) {
    o.detail = fmt::format(
        "synthetic fixture; KLD {:.4f}/{:.4f}, EMD {:.4f}/{:.4f} match hand values",
        got_kld1, got_kld2, got_emd1, got_emd2);
  }
  return o;
}

Outcome Criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  double worst = 0.0;
  for (int round = 0; round < 1000; ++round) {
    const auto a = t::RandomGridSimplex(rng, 5, 1000);
    const auto b = t::RandomGridSimplex(rng, 5, 1000);
    const double emd = quantification::Emd(Distribution::Make(Scale::Five(), a),
                                           Distribution::Make(Scale::Five(), b));
    const double diff = std::fabs(emd - t::TransportEmd(a, b, 1000));
    worst = std::max(worst, diff);
    o.Check(diff <= 2e-3, fmt::format("round {}: diff {}", round, diff));
  }
  // Off-grid pairs, for information only: rounding to the grid moves each
  // boundary by up to half a unit per side.
  double off_grid = 0.0;
  for (int round = 0; round < 1000; ++round) {
    const auto a = t::RandomSimplex(rng, 5, 0.2);
    const auto b = t::RandomSimplex(rng, 5, 0.2);
    off_grid = std::max(
        off_grid, std::fabs(quantification::Emd(Distribution::Make(Scale::Five(), a),
                                                Distribution::Make(Scale::Five(), b)) -
                            t::TransportEmd(a, b, 1000)));
  }
  if (o.pass) {
    o.detail = fmt::format(
        "1000 pairs on the 1/1000 grid, max diff {:.2g} (off-grid max {:.2g})",
        worst, off_grid);
  }
  return o;
}

int Consolidated(const std::array<int, 5>& v) {
  consolidation::VoteSet set{"x", {}};
  for (std::size_t i = 0; i < 5; ++i) set.votes[i] = Label(v[i]);
  return consolidation::Consolidate(set).value();
}

Outcome Criterion5() {
  Outcome o;
  int contract = 0, odd = 0, monotone = 0;
  std::string first_monotone;
  for (int code = 0; code < 3125; ++code) {
    std::array<int, 5> v;
    int rest = code;
    for (int& x : v) {
      x = rest % 5 - 2;
      rest /= 5;
    }
    int sum = 0;
    std::array<int, 5> count{};
    for (int x : v) {
      sum += x;
      ++count[x + 2];
    }
    int want = 0;
    bool majority = false;
    for (int c = 0; c < 5; ++c) {
      if (count[c] >= 3) want = c - 2, majority = true;
    }
    if (!majority) {
      // Bins on 10 * mean = 2 * sum, so no floating point is involved.
      const int m10 = 2 * std::abs(sum);
      want = (m10 >= 14 ? 2 : (m10 >= 4 ? 1 : 0)) * (sum < 0 ? -1 : 1);
    }
    const int got = Consolidated(v);
    contract += got != want;
    std::array<int, 5> neg;
    for (std::size_t i = 0; i < 5; ++i) neg[i] = -v[i];
    odd += Consolidated(neg) != -got;
    for (std::size_t i = 0; i < 5; ++i) {
      for (int up = v[i] + 1; up <= 2; ++up) {
        auto raised = v;
        raised[i] = up;
        if (Consolidated(raised) < got) {
          if (monotone++ == 0) {
            first_monotone = fmt::format("[{}] -> {} but raising vote {} to {} gives {}",
                                         fmt::join(v, ","), got, i + 1, up,
                                         Consolidated(raised));
          }
        }
      }
    }
  }
  o.Check(contract == 0, fmt::format("{} tuples break the contract", contract));
  o.Check(odd == 0, fmt::format("{} tuples break negation symmetry", odd));
  o.Check(monotone == 0,
          fmt::format("contract and symmetry hold on all 3125 tuples; "
                      "monotonicity fails on {} single-vote raises, e.g. {}",
                      monotone, first_monotone));
  if (o.pass) o.detail = "3125 tuples: contract, symmetry, monotonicity";
  return o;
}

Outcome Criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  namespace cls = classification;
  namespace q = quantification;
  for (int round = 0; round < 10000 && o.pass; ++round) {
    const std::string at = fmt::format("case {}: ", round);
    const Scale small = round % 2 ? Scale::Two() : Scale::Three();
    auto gold = t::RandomItems(rng, small, 1 + rng() % 50);
    auto pred = t::Relabel(rng, small, gold);
    const ConfusionMatrix cm = BuildConfusion(gold, pred, small);
    const double f1 = cls::F1PN(cm), rho = cls::MacroRecall(cm),
                 acc = cls::Accuracy(cm);
    o.Check(f1 >= 0 && f1 <= 1, at + "F1_PN out of range");
    o.Check(rho >= 0 && rho <= 1, at + "RHO_PN out of range");
    o.Check(acc >= 0 && acc <= 1, at + "ACC out of range");
    for (auto* items : {&gold, &pred}) {
      for (LabeledItem& i : *items) i.label = Label(-i.label.value());
    }
    o.Check(std::fabs(cls::MacroRecall(BuildConfusion(gold, pred, small)) - rho) <= 1e-12,
            at + "RHO_PN changed under P/N swap");

    const auto g5 = t::RandomItems(rng, Scale::Five(), 1 + rng() % 50);
    const auto p5 = t::Relabel(rng, Scale::Five(), g5);
    const double mae_m = cls::MaeMacro(g5, p5, Scale::Five());
    const double mae_u = cls::MaeMicro(g5, p5, Scale::Five());
    o.Check(mae_m >= 0 && mae_m <= 4 && mae_u >= 0 && mae_u <= 4,
            at + "MAE out of range");

    std::vector<int> balanced;
    const int per = 1 + static_cast<int>(rng() % 5);
    for (int c = -2; c <= 2; ++c) balanced.insert(balanced.end(), per, c);
    std::vector<LabeledItem> bg;
    for (std::size_t i = 0; i < balanced.size(); ++i) {
      bg.push_back({std::to_string(i), std::nullopt, Label(balanced[i])});
    }
    const auto bp = t::Relabel(rng, Scale::Five(), bg);
    o.Check(std::fabs(cls::MaeMacro(bg, bp, Scale::Five()) -
                      cls::MaeMicro(bg, bp, Scale::Five())) <= 1e-12,
            at + "MAE_M != MAE_MU on balanced gold");

    const std::size_t n = round % 3 ? 5 : 2;
    const Scale qs = n == 5 ? Scale::Five() : Scale::Two();
    const auto p = Distribution::Make(qs, t::RandomSimplex(rng, n, 0.3));
    std::vector<double> degenerate(n, 0.0);
    degenerate[rng() % n] = 1.0;
    const auto phat = Distribution::Make(qs, degenerate);
    const double kld = q::Kld(p, phat, 1 + static_cast<std::int64_t>(rng() % 100000));
    o.Check(kld >= 0 && std::isfinite(kld), at + "KLD negative or not finite");
    const auto a = Distribution::Make(qs, t::RandomSimplex(rng, n, 0.3));
    const double emd = q::Emd(p, a);
    o.Check(emd >= 0 && emd <= 4, at + "EMD out of range");
    o.Check(std::fabs(emd - q::Emd(a, p)) <= 1e-12, at + "EMD not symmetric");
  }
  if (o.pass) o.detail = "10000 randomized cases";
  return o;
}

Outcome Criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  const auto a = t::RandomItems(rng, Scale::Three(), 300);
  std::vector<LabeledItem> b, c;
  for (int k = 0; k < 5; ++k) {
    const std::string topic = fmt::format("topic {}", k);
    auto pb = t::RandomItems(rng, Scale::Two(), 1 + rng() % 60, topic);
    auto pc = t::RandomItems(rng, Scale::Five(), 1 + rng() % 60, topic);
    b.insert(b.end(), pb.begin(), pb.end());
    c.insert(c.end(), pc.begin(), pc.end());
  }
  TopicDistributions d, e;
  for (const TopicSet& ts : GroupByTopic(b, Scale::Two())) {
    d.emplace(ts.topic_id, Prevalence(ts.items, Scale::Two()));
  }
  for (const TopicSet& ts : GroupByTopic(c, Scale::Five())) {
    e.emplace(ts.topic_id, Prevalence(ts.items, Scale::Five()));
  }
  const double got[] = {Score(Subtask::kA, a, a).official.value,
                        Score(Subtask::kB, b, b).official.value,
                        Score(Subtask::kC, c, c).official.value,
                        Score(Subtask::kD, b, d).official.value,
                        Score(Subtask::kE, c, e).official.value};
  const double want[] = {1.0, 1.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < 5; ++i) {
    o.Check(got[i] == want[i],
            fmt::format("subtask {}: {} != {}", "ABCDE"[i], got[i], want[i]));
  }
  if (o.pass) o.detail = "A..E = 1 / 1 / 0 / 0 / 0";
  return o;
}

Outcome Criterion8() {
  Outcome o;
  TopicSet src{"topic", Scale::Two(), {}};
  for (int i = 0; i < 20; ++i) {
    src.items.push_back({fmt::format("{}", i), "topic", i < 10 ? kPositive : kNegative});
  }
  const DriftSpec spec{src, {{kPositive, 0.5}}, 2016, 5};
  const auto first = GenerateDrift(spec);
  const auto second = GenerateDrift(spec);
  for (std::size_t k = 0; k < first.size(); ++k) {
    const Distribution d = Prevalence(first[k].items, Scale::Two());
    o.Check(d[kPositive] == 1.0 / 3.0 && d[kNegative] == 2.0 / 3.0,
            fmt::format("variant {}: ({}, {})", k + 1, d[kPositive], d[kNegative]));
    o.Check(io::EmitGold(first[k].items, Subtask::kB) ==
                io::EmitGold(second[k].items, Subtask::kB),
            fmt::format("variant {} differs between runs", k + 1));
  }
  if (o.pass) o.detail = "5 variants at (1/3, 2/3), byte-identical on rerun";
  return o;
}

Outcome Criterion9() {
  Outcome o;
  std::vector<double> f1;
  for (int i = 0; i < 11; ++i) f1.push_back(0.633 - 0.005 * i);
  f1.insert(f1.end(), {0.580, 0.580, 0.576});
  const auto ranks = io::CompetitionRanks(f1, true);
  o.Check(ranks[11] == 12 && ranks[12] == 12 && ranks[13] == 14,
          fmt::format("ranks {}", fmt::join(ranks, ",")));
  std::mt19937_64 rng(9);
  for (int round = 0; round < 1000; ++round) {
    std::vector<double> v(1 + rng() % 30);
    for (double& x : v) x = static_cast<double>(rng() % 10) / 10.0;
    const auto r = io::CompetitionRanks(v, round % 2 == 0, -1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto better = std::count_if(v.begin(), v.end(), [&](double w) {
        return round % 2 == 0 ? w > v[i] : w < v[i];
      });
      o.Check(r[i] == 1 + better, fmt::format("random round {}", round));
    }
  }
  if (o.pass) o.detail = "0.580, 0.580, 0.576 -> 12, 12, 14; 1000 random vectors";
  return o;
}

template <class F>
bool LineNumbered(F&& parse, std::size_t line) {
  try {
    parse();
  } catch (const ParseError& e) {
    return e.diagnostics().size() == 1 && e.diagnostics()[0].line == line;
  }
  return false;
}

Outcome Criterion10() {
  Outcome o;
  std::mt19937_64 rng(10);
  std::size_t corruptions = 0;
  const char replacements[] = {' ', ',', ';', 'x', '\v'};
  for (int round = 0; round < 1000 && o.pass; ++round) {
    const Subtask s = kAllSubtasks[round % 5];
    const std::string at = fmt::format("file {} ({}): ", round, SubtaskName(s));
    const std::string gold = t::RandomFile(rng, t::FileKind::kGold, s);
    const std::string pred = t::RandomFile(rng, t::FileKind::kPredictions, s);
    const std::string votes = t::RandomFile(rng, t::FileKind::kVotes, s);
    const auto g = io::ParseGold(gold, s, "gold");
    o.Check(g == io::ParseGold(io::EmitGold(g, s), s, "emitted"),
            at + "gold round trip");
    const auto p = io::ParsePredictions(pred, s, "pred");
    o.Check(p == io::ParsePredictions(io::EmitPredictions(p, s), s, "emitted"),
            at + "predictions round trip");
    const auto v = io::ParseVotes(votes, "votes");
    const auto v2 = io::ParseVotes(io::EmitVotes(v), "emitted");
    bool same = v.size() == v2.size();
    for (std::size_t i = 0; same && i < v.size(); ++i) {
      same = v[i].item_id == v2[i].item_id && v[i].votes == v2[i].votes;
    }
    o.Check(same, at + "votes round trip");

    for (int kind = 0; kind < 3; ++kind) {
      const std::string& text = kind == 0 ? gold : (kind == 1 ? pred : votes);
      std::size_t line = 1;
      for (std::size_t pos = 0; pos < text.size(); ++pos) {
        if (text[pos] == '\n') ++line;
        if (text[pos] != '\t') continue;
        std::string bad = text;
        bad[pos] = replacements[rng() % 5];
        ++corruptions;
        const bool ok = LineNumbered(
            [&] {
              if (kind == 0) io::ParseGold(bad, s, "bad");
              if (kind == 1) io::ParsePredictions(bad, s, "bad");
              if (kind == 2) io::ParseVotes(bad, "bad");
            },
            line);
        o.Check(ok, at + fmt::format("corruption at byte {} not reported on line {}",
                                     pos, line));
      }
    }
  }
  if (o.pass) {
    o.detail = fmt::format(
        "1000 files per format round-trip; {} separator corruptions all line-numbered",
        corruptions);
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double limit_seconds;  // 0 for none
};

}  // namespace
}  // namespace sentscore

int main() {
  using namespace sentscore;
  const std::vector<Criterion> criteria = {
      {1, "subtask A baseline row", Criterion1, 1.0},
      {2, "subtask B baseline is 0.500", Criterion2, 0},
      {3, "D/E baselines on synthetic fixture", Criterion3, 0},
      {4, "EMD vs transport oracle", Criterion4, 30.0},
      {5, "consolidation exhaustive suite", Criterion5, 1.0},
      {6, "metric property suite", Criterion6, 0},
      {7, "perfect-prediction identities", Criterion7, 0},
      {8, "drift generator", Criterion8, 0},
      {9, "leaderboard tie ranks", Criterion9, 0},
      {10, "format round trip", Criterion10, 0},
  };
  int unexpected = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += fmt::format(" (took {:.2f}s, limit {}s)", secs, c.limit_seconds);
    }
    const bool known = kKnownFailures.count(c.id) > 0;
    if (o.pass == known) ++unexpected;
    fmt::print("criterion {:>2}: {} {}: {} [{:.3f}s]{}\n", c.id,
               o.pass ? "PASS" : "FAIL", c.name, o.detail, secs,
               known ? (o.pass ? " (expected FAIL)" : " (known)") : "");
  }
  return unexpected == 0 ? 0 : 1;
}

// Copyright 2026 The GCR Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gcr/cli.hpp"
#include "gcr/io.hpp"
#include "gcr/oracle.hpp"
#include "gcr/play.hpp"
#include "gcr/solver.hpp"
#include "gcr/variants.hpp"
#include "test_support.hpp"

namespace gcr {
namespace {

// Wall-clock limits, seconds.
constexpr double kAgreementLimit = 60.0;
constexpr double kSaddleLimit = 30.0;
constexpr double kPetersen3Limit = 10.0;
// Values are compared exactly: zero tolerance everywhere.
constexpr std::size_t kRandomPursuers = 1000;
constexpr std::size_t kOracleCap = 2000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Named {
  std::string name;
  GameFamily family;
};

std::vector<Named> test_matrix() {
  std::vector<Named> out;
  const auto randoms = testing::random_graph_matrix();
  for (std::size_t i = 0; i < randoms.size(); ++i) out.push_back({"random" + std::to_string(i), testing::classic(randoms[i])});
  out.push_back({"P3", testing::p3()});
  out.push_back({"K2", testing::k2()});
  out.push_back({"C4", testing::c4()});
  out.push_back({"C5", testing::c5()});
  for (std::uint32_t c = 1; c <= 3; ++c)
    out.push_back({"Petersen-" + std::to_string(c) + "cop", build_family(graphs::petersen(), VariantSpec::team(c))});
  out.push_back({"P3-distance1", build_family(graphs::path(3), VariantSpec::distance(1))});
  out.push_back({"P4-speed2", build_family(graphs::path(4), VariantSpec::speed2())});
  return out;
}

class Report {
 public:
  void line(int id, bool ok, const std::string& title, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << " -- " << detail << std::endl;
    failures_ += ok ? 0 : 1;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

// 1. Solver, truncated-tree oracle and attractor agree on every state.
void three_way_agreement(Report& r) {
  const auto t0 = Clock::now();
  std::size_t states = 0, mismatches = 0;
  std::string first;
  for (const Graph& g : testing::random_graph_matrix()) {
    const GameFamily f = testing::classic(g);
    const LabelTable t = vl_solve(f);
    const auto oracle = oracle_values(f);
    const Classification cl = attractor_classify(f);
    std::vector<bool> pwin(f.regular_count(), false);
    for (StateId s : cl.partition.pwin) pwin[index(s)] = true;
    for (std::size_t i = 0; i < f.regular_count(); ++i, ++states) {
      if (t.value[i] != oracle[i] || pwin[i] != t.value[i].is_finite()) {
        if (!mismatches++) first = "state " + std::to_string(i) + " of a " + std::to_string(g.vertex_count()) + "-vertex graph";
      }
    }
  }
  const double secs = seconds_since(t0);
  r.line(1, mismatches == 0 && secs < kAgreementLimit, "three-way value agreement on 50 random graphs",
         std::to_string(states) + " states, " + std::to_string(mismatches) + " mismatches" +
             (first.empty() ? "" : " (first: " + first + ")") + ", " + fmt_seconds(secs) + " (limit " +
             fmt_seconds(kAgreementLimit) + ")");
}

// 2. Value equals finitization time, and the optimality equations hold.
void equations(Report& r, const std::vector<Named>& matrix) {
  std::size_t families = 0, violations = 0;
  std::string where;
  for (const auto& [name, f] : matrix) {
    const LabelTable t = vl_solve(f);
    const std::size_t v = check_value_equals_finitization(t).size() + check_optimality_equations(f, t).size();
    if (v && where.empty()) where = name;
    violations += v;
    ++families;
  }
  r.line(2, violations == 0, "value = finitization time and optimality equations",
         std::to_string(families) + " families, " + std::to_string(violations) + " violations" +
             (where.empty() ? "" : " (first in " + where + ")"));
}

// 3. s is in U_n exactly when its value is n.
void levels(Report& r, const std::vector<Named>& matrix) {
  std::size_t families = 0, states = 0, mismatches = 0;
  for (const auto& [name, f] : matrix) {
    if (f.regular_count() > kOracleCap) continue;
    const LabelTable t = vl_solve(f);
    const Classification cl = attractor_classify(f);
    for (std::size_t i = 0; i < f.regular_count(); ++i, ++states) {
      const auto level = cl.trace.level_of(state_id(i));
      const Value expected = level ? Value(static_cast<Value::rep>(*level)) : Value::infinity();
      mismatches += expected != t.value[i];
    }
    ++families;
  }
  r.line(3, mismatches == 0, "attractor level/label agreement",
         std::to_string(families) + " families within the " + std::to_string(kOracleCap) + "-state cap, " +
             std::to_string(states) + " states, " + std::to_string(mismatches) + " mismatches");
}

// 4. Best responses to either optimal strategy realize the label; optimal
// evaders survive random pursuers from every infinite-valued state.
void saddle_point(Report& r) {
  const auto t0 = Clock::now();
  std::size_t states = 0, br_mismatches = 0, captures = 0, games = 0;
  for (const GameFamily& f : {testing::p3(), testing::k2(), testing::c4(), testing::c5()}) {
    const LabelTable t = vl_solve(f);
    const OptimalStrategies opt = optimal_strategies(f, t);
    std::vector<StateId> infinite;
    for (std::size_t i = 0; i < f.regular_count(); ++i, ++states) {
      const StateId s = state_id(i);
      if (best_response_value(f, opt.pursuer, s) != t[s] || best_response_value(f, opt.evader, s) != t[s])
        ++br_mismatches;
      if (t[s].is_infinite()) infinite.push_back(s);
    }
    const std::size_t limit = default_max_turns(f);
    for (std::uint64_t seed = 0; seed < kRandomPursuers; ++seed) {
      const PositionalStrategy pursuer = random_positional_strategy(f, Player::pursuer, seed);
      for (StateId s : infinite) {
        const History h = play_out(f, pursuer, opt.evader, s, limit);
        captures += capture_time(f, h).is_finite();
        ++games;
      }
    }
  }
  const double secs = seconds_since(t0);
  r.line(4, br_mismatches == 0 && captures == 0 && secs < kSaddleLimit, "saddle point on P3, K2, C4, C5",
         std::to_string(states) + " states, " + std::to_string(br_mismatches) + " best-response mismatches, " +
             std::to_string(captures) + " captures in " + std::to_string(games) + " random-pursuer games, " +
             fmt_seconds(secs) + " (limit " + fmt_seconds(kSaddleLimit) + ")");
}

// 5. Golden values, each backed by an independent computation.
void golden(Report& r) {
  using testing::a;
  using testing::b;
  using testing::c;
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  // Small families: truncated-tree oracle as the reference.
  const GameFamily p3 = testing::p3();
  const LabelTable p3_labels = vl_solve(p3);
  const Placement p3_place = placement_minimax(p3, p3_labels);
  expect(p3_place.value == Value(1) && p3_place.cop_placement == b, "P3 placement 1 with cop at center");
  expect(p3_labels[p3.id_of(a, c, Player::pursuer)] == Value(3) &&
             oracle_value(p3, p3.id_of(a, c, Player::pursuer)) == Value(3),
         "P3 value(a,c,1) = 3");

  // Non-diagonal K2 states with the pursuer to move have value 1. With the
  // evader to move the value is 2: the evader may stay put, and the oracle
  // agrees.
  const GameFamily k2 = testing::k2();
  const LabelTable k2_labels = vl_solve(k2);
  for (auto [p, e] : {std::pair{a, b}, std::pair{b, a}}) {
    const StateId pm = k2.id_of(p, e, Player::pursuer);
    const StateId em = k2.id_of(p, e, Player::evader);
    expect(k2_labels[pm] == Value(1) && oracle_value(k2, pm) == Value(1), "K2 pursuer-to-move value 1");
    expect(k2_labels[em] == oracle_value(k2, em) && k2_labels[em] == Value(2), "K2 evader-to-move value 2");
  }
  expect(placement_minimax(k2, k2_labels).value == Value(1), "K2 placement 1");

  const GameFamily c4 = testing::c4();
  const LabelTable c4_labels = vl_solve(c4);
  expect(placement_minimax(c4, c4_labels).value.is_infinite(), "C4 placement infinity");
  const auto c4_oracle = oracle_values(c4);
  expect(std::equal(c4_oracle.begin(), c4_oracle.end() - 1, c4_labels.value.begin()), "C4 labels match the oracle");

  // Larger families: retrograde work-list solver and attractor as the two
  // independent references.
  auto cross_checked = [&](const std::string& name, const GameFamily& f, const LabelTable& t) {
    const auto retro = testing::retrograde_values(f);
    const Classification cl = attractor_classify(f);
    for (std::size_t i = 0; i < f.regular_count(); ++i) {
      const auto level = cl.trace.level_of(state_id(i));
      if (retro[i] != t.value[i] || level.has_value() != t.value[i].is_finite()) {
        failures.push_back(name + " disagrees with retrograde/attractor at state " + std::to_string(i));
        return;
      }
    }
  };
  const GameFamily c5 = testing::c5();
  const LabelTable c5_labels = vl_solve(c5);
  cross_checked("C5", c5, c5_labels);
  expect(placement_minimax(c5, c5_labels).value.is_infinite(), "C5 placement infinity");

  std::string petersen3;
  for (std::uint32_t cops = 1; cops <= 3; ++cops) {
    const GameFamily f = build_family(graphs::petersen(), VariantSpec::team(cops));
    const auto t0 = Clock::now();
    const LabelTable t = vl_solve(f);
    const double secs = seconds_since(t0);
    const std::string name = "Petersen " + std::to_string(cops) + "-cop";
    cross_checked(name, f, t);
    const Value v = placement_minimax(f, t).value;
    if (cops < 3) {
      expect(v.is_infinite(), name + " placement infinity");
    } else {
      expect(v.is_finite(), name + " placement finite");
      expect(secs < kPetersen3Limit, name + " solve within " + fmt_seconds(kPetersen3Limit));
      petersen3 = std::to_string(f.regular_count()) + " states solved in " + fmt_seconds(secs) + ", placement " +
                  v.to_string();
    }
  }

  std::string detail = failures.empty() ? "all golden values hold" : failures.front();
  if (failures.size() > 1) detail += " (+" + std::to_string(failures.size() - 1) + " more)";
  r.line(5, failures.empty(), "golden values (P3, K2, C4, C5, Petersen)",
         detail + "; Petersen 3-cop: " + petersen3 +
             "; K2 checked on pursuer-to-move states, evader-to-move states equal the oracle's 2");
}

// 6. distance 0 and a one-cop team reproduce classic byte for byte.
void degeneracies(Report& r) {
  std::size_t graphs_checked = 0, differences = 0;
  std::vector<Graph> gs = testing::random_graph_matrix();
  gs.push_back(graphs::path(3));
  gs.push_back(graphs::cycle(5));
  gs.push_back(graphs::petersen());
  for (const Graph& g : gs) {
    const GameFamily classic = testing::classic(g);
    const std::string labels = write_labels(classic, vl_solve(classic));
    for (const VariantSpec& spec : {VariantSpec::distance(0), VariantSpec::team(1)}) {
      const GameFamily f = build_family(g, spec);
      if (!f.same_structure(classic) || write_labels(f, vl_solve(f)) != labels) ++differences;
    }
    ++graphs_checked;
  }
  r.line(6, differences == 0, "distance 0 and one-cop team equal classic",
         std::to_string(graphs_checked) + " graphs, " + std::to_string(differences) + " differing families/label tables");
}

// 7. Repeated solves are byte-identical; edge order does not matter.
void determinism(Report& r) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "gcr_acceptance";
  fs::create_directories(dir);
  std::size_t runs = 0, differences = 0;
  std::mt19937_64 rng(20261016);

  auto solve_output = [&](const std::string& path, const char* format) {
    std::istringstream in;
    std::ostringstream out, err;
    cli::run({"gcr", "solve", path, "--format", format}, in, out, err);
    return out.str();
  };

  const auto randoms = testing::random_graph_matrix();
  for (std::size_t i = 0; i < randoms.size(); ++i) {
    const std::string text = to_edge_list(randoms[i]);
    const fs::path base = dir / ("g" + std::to_string(i) + ".txt");
    std::ofstream(base, std::ios::binary) << text;
    for (const char* format : {"text", "json"}) {
      differences += solve_output(base.string(), format) != solve_output(base.string(), format);
      ++runs;
    }

    // Shuffle the edge lines and flip their written orientation.
    std::istringstream lines(text);
    std::string header, line;
    std::getline(lines, header);
    std::vector<std::string> edges;
    while (std::getline(lines, line))
      if (!line.empty()) edges.push_back(line);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::string permuted = header + "\n";
    for (const auto& e : edges) {
      std::istringstream es(e);
      std::uint32_t u = 0, v = 0;
      es >> u >> v;
      permuted += (rng() % 2 ? std::to_string(v) + " " + std::to_string(u) : e) + "\n";
    }
    const fs::path shuffled = dir / ("g" + std::to_string(i) + "_perm.txt");
    std::ofstream(shuffled, std::ios::binary) << permuted;
    differences += solve_output(base.string(), "json") != solve_output(shuffled.string(), "json");
    ++runs;
  }
  fs::remove_all(dir);
  r.line(7, differences == 0, "deterministic solve output and edge-order invariance",
         std::to_string(runs) + " comparisons, " + std::to_string(differences) + " differences");
}

}  // namespace
}  // namespace gcr

int main() {
  gcr::Report report;
  const auto matrix = gcr::test_matrix();
  gcr::three_way_agreement(report);
  gcr::equations(report, matrix);
  gcr::levels(report, matrix);
  gcr::saddle_point(report);
  gcr::golden(report);
  gcr::degeneracies(report);
  gcr::determinism(report);
  std::cout << (report.failures() == 0 ? "all criteria passed" : std::to_string(report.failures()) + " criteria failed")
            << std::endl;
  return report.failures();
}

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

#ifndef GCR_SOLVER_HPP_
#define GCR_SOLVER_HPP_

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcr/game_family.hpp"
#include "gcr/value.hpp"

namespace gcr {

/// Result of vertex labeling: the limit value of every state and the sweep at
/// which its label first became finite.
struct LabelTable {
  std::vector<Value> value;
  std::vector<Value> finitized_at;
  std::size_t iterations_run = 0;

  std::size_t size() const { return value.size(); }
  Value operator[](StateId s) const { return value.at(index(s)); }

  friend bool operator==(const LabelTable&, const LabelTable&) = default;
};

namespace detail {

inline void require_valid(const GameFamily& family) {
  const auto violations = validate_family(family);
  if (!violations.empty())
    throw InvalidArgument("invalid game family (" + std::to_string(violations.size()) +
                          " violations), first: " + violations.front().detail);
}

inline void require_matching(const GameFamily& family, const LabelTable& labels) {
  if (labels.value.size() != family.state_count() || labels.finitized_at.size() != family.state_count())
    throw InvalidArgument("label table has " + std::to_string(labels.value.size()) + " entries, family has " +
                          std::to_string(family.state_count()) + " states");
}

// 1 + min (pursuer) or 1 + max (evader) over the successors of s.
inline Value backup(const GameFamily& family, StateId s, std::span<const Value> labels) {
  const bool minimize = family.mover(s) == Player::pursuer;
  std::optional<Value> best;
  for (StateId t : family.successors(s)) {
    const Value v = labels[index(t)];
    if (!best || (minimize ? v < *best : v > *best)) best = v;
  }
  return *best + 1;
}

}  // namespace detail

struct NoSweepObserver {
  void operator()(std::size_t, std::span<const Value>) const {}
};

/// Vertex labeling. Capture states start at 0 and every other regular state at
/// infinity; each sweep recomputes the still-infinite labels from the previous
/// sweep's labels only (1 + min for the pursuer, 1 + max for the evader) and
/// leaves finite labels untouched. Stops at the first sweep that changes
/// nothing.
///
/// `observer(i, labels)` sees the labels after initialization (i = 0) and after
/// every sweep i >= 1. The terminal state is labeled 0 and never read.
template <typename Observer = NoSweepObserver>
LabelTable vl_solve(const GameFamily& family, Observer&& observer = {}) {
  detail::require_valid(family);
  const std::size_t n = family.state_count();
  const StateId tau = family.terminal();

  LabelTable table;
  table.finitized_at.assign(n, Value::infinity());
  std::vector<Value> previous(n, Value::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    const StateId s = state_id(i);
    if (s == tau || family.is_capture(s)) {
      previous[i] = Value(0);
      table.finitized_at[i] = Value(0);
    }
  }
  observer(std::size_t{0}, std::span<const Value>(previous));

  std::vector<Value> current(previous);
  for (std::size_t sweep = 1;; ++sweep) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (previous[i].is_finite()) {
        current[i] = previous[i];
        continue;
      }
      current[i] = detail::backup(family, state_id(i), previous);
      if (current[i].is_finite()) {
        changed = true;
        table.finitized_at[i] = Value(static_cast<Value::rep>(sweep));
      }
    }
    observer(sweep, std::span<const Value>(current));
    table.iterations_run = sweep;
    if (!changed) break;
    for (std::size_t i = 0; i < n; ++i)
      assert(!previous[i].is_finite() || current[i] == previous[i]);  // finite labels never change
    previous.swap(current);
  }
  table.value = std::move(current);
  return table;
}

/// A move chooser that depends only on the current state. Defined on the
/// non-capture regular states where `side` moves.
class PositionalStrategy {
 public:
  PositionalStrategy(Player side, std::vector<std::optional<StateId>> choice)
      : side_(side), choice_(std::move(choice)) {}

  /// Checks that the domain is exactly the side's non-capture states and every
  /// choice is a legal successor.
  static PositionalStrategy validated(const GameFamily& family, Player side,
                                      std::vector<std::optional<StateId>> choice) {
    if (choice.size() != family.state_count()) throw InvalidArgument("strategy size does not match family");
    for (std::size_t i = 0; i < choice.size(); ++i) {
      const StateId s = state_id(i);
      const bool in_domain = !family.is_terminal(s) && !family.is_capture(s) && family.mover(s) == side;
      if (in_domain != choice[i].has_value())
        throw InvalidArgument("strategy domain mismatch at state " + std::to_string(i));
      if (choice[i]) {
        const auto next = family.successors(s);
        if (std::find(next.begin(), next.end(), *choice[i]) == next.end())
          throw InvalidArgument("strategy chooses illegal move " + std::to_string(index(*choice[i])) +
                                " at state " + std::to_string(i));
      }
    }
    return PositionalStrategy(side, std::move(choice));
  }

  Player side() const { return side_; }
  std::size_t size() const { return choice_.size(); }
  bool defined_at(StateId s) const { return index(s) < choice_.size() && choice_[index(s)].has_value(); }

  StateId at(StateId s) const {
    if (!defined_at(s)) throw InvalidArgument("strategy undefined at state " + std::to_string(index(s)));
    return *choice_[index(s)];
  }

  friend bool operator==(const PositionalStrategy&, const PositionalStrategy&) = default;

 private:
  Player side_;
  std::vector<std::optional<StateId>> choice_;
};

struct OptimalStrategies {
  PositionalStrategy pursuer;
  PositionalStrategy evader;
};

/// Pursuer picks the first successor (smallest id) of minimum label, evader
/// the first successor of maximum label.
inline OptimalStrategies optimal_strategies(const GameFamily& family, const LabelTable& labels) {
  detail::require_matching(family, labels);
  std::vector<std::optional<StateId>> pursuer(family.state_count());
  std::vector<std::optional<StateId>> evader(family.state_count());
  for (std::size_t i = 0; i < family.regular_count(); ++i) {
    const StateId s = state_id(i);
    if (family.is_capture(s)) continue;
    const bool minimize = family.mover(s) == Player::pursuer;
    std::optional<StateId> best;
    for (StateId t : family.successors(s))
      if (!best || (minimize ? labels[t] < labels[*best] : labels[t] > labels[*best])) best = t;
    (minimize ? pursuer : evader)[i] = best;
  }
  return {PositionalStrategy(Player::pursuer, std::move(pursuer)),
          PositionalStrategy(Player::evader, std::move(evader))};
}

struct EquationViolation {
  StateId state;
  Value expected;
  Value actual;
};

/// States where the labels break the optimality equations: 0 on capture
/// states, 1 + min over successors for the pursuer, 1 + max for the evader.
inline std::vector<EquationViolation> check_optimality_equations(const GameFamily& family, const LabelTable& labels) {
  detail::require_matching(family, labels);
  std::vector<EquationViolation> out;
  for (std::size_t i = 0; i < family.regular_count(); ++i) {
    const StateId s = state_id(i);
    const Value expected = family.is_capture(s) ? Value(0) : detail::backup(family, s, labels.value);
    if (labels.value[i] != expected) out.push_back({s, expected, labels.value[i]});
  }
  return out;
}

/// Regular states whose finite value differs from the sweep that finitized it.
inline std::vector<StateId> check_value_equals_finitization(const LabelTable& labels) {
  std::vector<StateId> out;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i)
    if (labels.value[i] != labels.finitized_at[i]) out.push_back(state_id(i));
  return out;
}

struct Placement {
  Value value;
  std::uint32_t cop_placement = 0;
  std::vector<std::uint32_t> robber_reply;  // per cop placement
  std::vector<Value> reply_value;           // per cop placement

  bool cop_win() const { return value.is_finite(); }
};

/// min over pursuer placements of max over evader placements of the value of
/// (pursuer, evader, first_mover). Ties go to the smallest location.
inline Placement placement_minimax(const GameFamily& family, const LabelTable& labels,
                                   Player first_mover = Player::pursuer) {
  detail::require_matching(family, labels);
  Placement out;
  out.robber_reply.resize(family.locations1());
  out.reply_value.resize(family.locations1());
  std::optional<Value> best;
  for (std::uint32_t p = 0; p < family.locations1(); ++p) {
    Value worst(0);
    std::uint32_t reply = 0;
    for (std::uint32_t e = 0; e < family.locations2(); ++e) {
      const Value v = labels[family.id_of(p, e, first_mover)];
      if (e == 0 || v > worst) {
        worst = v;
        reply = e;
      }
    }
    out.robber_reply[p] = reply;
    out.reply_value[p] = worst;
    if (!best || worst < *best) {
      best = worst;
      out.cop_placement = p;
    }
  }
  out.value = *best;
  return out;
}

}  // namespace gcr

#endif  // GCR_SOLVER_HPP_

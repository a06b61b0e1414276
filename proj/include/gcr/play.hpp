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

#ifndef GCR_PLAY_HPP_
#define GCR_PLAY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gcr/game_family.hpp"
#include "gcr/solver.hpp"
#include "gcr/value.hpp"

namespace gcr {

/// A finite prefix of a play. `truncated` marks a play cut off before capture.
struct History {
  std::vector<StateId> states;
  bool truncated = false;

  friend bool operator==(const History&, const History&) = default;
};

/// A general strategy maps the history so far (last entry = current state) to
/// the next state.
using HistoryStrategy = std::function<StateId(std::span<const StateId>)>;

/// Either a positional table or an arbitrary history-dependent chooser.
class Strategy {
 public:
  Strategy(PositionalStrategy positional) : impl_(std::move(positional)) {}  // NOLINT(runtime/explicit)
  Strategy(HistoryStrategy general) : impl_(std::move(general)) {}           // NOLINT(runtime/explicit)

  bool is_positional() const { return std::holds_alternative<PositionalStrategy>(impl_); }
  const PositionalStrategy& positional() const { return std::get<PositionalStrategy>(impl_); }

  StateId next(std::span<const StateId> history) const {
    if (const auto* p = std::get_if<PositionalStrategy>(&impl_)) return p->at(history.back());
    return std::get<HistoryStrategy>(impl_)(history);
  }

 private:
  std::variant<PositionalStrategy, HistoryStrategy> impl_;
};

class IllegalMoveError : public std::runtime_error {
 public:
  IllegalMoveError(std::size_t turn, StateId state, StateId move)
      : std::runtime_error("illegal move at turn " + std::to_string(turn) + ": state " +
                           std::to_string(index(state)) + " cannot move to " + std::to_string(index(move))),
        turn_(turn),
        state_(state),
        move_(move) {}

  std::size_t turn() const { return turn_; }
  StateId state() const { return state_; }
  StateId move() const { return move_; }

 private:
  std::size_t turn_;
  StateId state_;
  StateId move_;
};

inline bool is_legal_move(const GameFamily& family, StateId from, StateId to) {
  const auto next = family.successors(from);
  return std::binary_search(next.begin(), next.end(), to);
}

/// Plays from s0 until a capture state is entered or `max_turns` transitions
/// have been made (then `truncated` is set).
inline History play_out(const GameFamily& family, const Strategy& pursuer, const Strategy& evader, StateId s0,
                        std::size_t max_turns) {
  History h;
  h.states.push_back(family.check_id(s0));
  if (family.is_terminal(s0)) throw InvalidArgument("cannot start a play at the terminal state");
  while (!family.is_capture(h.states.back())) {
    if (h.states.size() - 1 == max_turns) {
      h.truncated = true;
      break;
    }
    const StateId s = h.states.back();
    const StateId t = (family.mover(s) == Player::pursuer ? pursuer : evader).next(h.states);
    if (index(t) >= family.state_count() || !is_legal_move(family, s, t))
      throw IllegalMoveError(h.states.size() - 1, s, t);
    h.states.push_back(t);
  }
  return h;
}

/// Default play limit: a pair of positional strategies either captures or
/// repeats a state within |S| turns.
inline std::size_t default_max_turns(const GameFamily& family) { return 2 * family.regular_count(); }

/// Index of the first capture state; infinity if there is none.
inline Value capture_time(const GameFamily& family, const History& h) {
  for (std::size_t t = 0; t < h.states.size(); ++t)
    if (family.is_capture(h.states[t])) return Value(static_cast<Value::rep>(t));
  return Value::infinity();
}

/// Sum of turn payoffs over the history.
inline std::uint64_t total_payoff(const GameFamily& family, const History& h) {
  std::uint64_t sum = 0;
  for (StateId s : h.states) sum += static_cast<std::uint64_t>(family.turn_payoff(s));
  return sum;
}

/// Optimal capture time from s0 for the side opposing `fixed`, over all of
/// its strategies. With the pursuer fixed, the evader maximizes: a state is
/// worth 1 + the max over its moves once all of them are resolved, and states
/// never resolved can dodge capture forever. With the evader fixed, the
/// pursuer minimizes: breadth-first layers back from the capture set.
inline Value best_response_value(const GameFamily& family, const PositionalStrategy& fixed, StateId s0) {
  family.check_id(s0);
  if (fixed.size() != family.state_count()) throw InvalidArgument("strategy size does not match family");
  const std::size_t regular = family.regular_count();

  // Moves available in the one-player game induced by `fixed`.
  auto induced = [&](StateId s) -> std::vector<StateId> {
    const auto all = family.successors(s);
    if (family.mover(s) == fixed.side()) return {fixed.at(s)};
    return {all.begin(), all.end()};
  };

  std::vector<std::vector<StateId>> preds(regular);
  std::vector<std::size_t> open_moves(regular, 0);
  for (std::size_t i = 0; i < regular; ++i) {
    const StateId s = state_id(i);
    if (family.is_capture(s)) continue;
    const auto moves = induced(s);
    open_moves[i] = moves.size();
    for (StateId t : moves) preds[index(t)].push_back(s);
  }

  std::vector<Value> value(regular, Value::infinity());
  std::vector<StateId> queue;
  for (std::size_t i = 0; i < regular; ++i)
    if (family.is_capture(state_id(i))) {
      value[i] = Value(0);
      queue.push_back(state_id(i));
    }

  const bool opponent_minimizes = fixed.side() == Player::evader;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const StateId t = queue[head];
    for (StateId s : preds[index(t)]) {
      auto& v = value[index(s)];
      if (opponent_minimizes) {
        // First arrival in BFS order is the shortest path.
        if (v.is_infinite()) {
          v = value[index(t)] + 1;
          queue.push_back(s);
        }
      } else if (--open_moves[index(s)] == 0) {
        // Resolved in nondecreasing order, so the last successor carries the max.
        v = value[index(t)] + 1;
        queue.push_back(s);
      }
    }
  }
  return family.is_terminal(s0) ? Value(0) : value[index(s0)];
}

/// A positional strategy for `side` picking a uniformly random legal move at
/// each state. Uses raw engine output, so a seed reproduces the same table on
/// every platform.
inline PositionalStrategy random_positional_strategy(const GameFamily& family, Player side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::optional<StateId>> choice(family.state_count());
  for (std::size_t i = 0; i < family.regular_count(); ++i) {
    const StateId s = state_id(i);
    if (family.is_capture(s) || family.mover(s) != side) continue;
    const auto next = family.successors(s);
    choice[i] = next[rng() % next.size()];
  }
  return PositionalStrategy(side, std::move(choice));
}

}  // namespace gcr

#endif  // GCR_PLAY_HPP_

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

#ifndef GCR_SESSION_HPP_
#define GCR_SESSION_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gcr/game_family.hpp"
#include "gcr/play.hpp"
#include "gcr/solver.hpp"
#include "gcr/value.hpp"

namespace gcr {

enum class SessionStatus { in_progress, captured, evaded };

inline const char* status_name(SessionStatus s) {
  switch (s) {
    case SessionStatus::in_progress: return "in_progress";
    case SessionStatus::captured: return "captured";
    case SessionStatus::evaded: return "evaded";
  }
  return "unknown";
}

struct MoveOption {
  StateId successor;
  Value value;
  bool recommended;  // the optimal strategy's choice at the current state
};

/// Turn engine for a human playing one side against the optimal positional
/// strategy of the other. Evasion is certified after `max_turns` turns
/// without capture. Not thread-safe; the family, labels and strategies must
/// outlive the session.
class PlaySession {
 public:
  PlaySession(const GameFamily& family, const LabelTable& labels, const OptimalStrategies& optimal, StateId start,
              Player human, std::size_t max_turns)
      : family_(family), labels_(labels), optimal_(optimal), human_(human), max_turns_(max_turns) {
    if (family.is_terminal(start)) throw InvalidArgument("cannot start at the terminal state");
    history_.push_back(start);
  }

  StateId current() const { return history_.back(); }
  const std::vector<StateId>& history() const { return history_; }
  Player human() const { return human_; }
  std::size_t turns() const { return history_.size() - 1; }
  std::size_t max_turns() const { return max_turns_; }

  SessionStatus status() const {
    if (family_.is_capture(current())) return SessionStatus::captured;
    if (turns() >= max_turns_) return SessionStatus::evaded;
    return SessionStatus::in_progress;
  }

  bool human_to_move() const {
    return status() == SessionStatus::in_progress && family_.mover(current()) == human_;
  }

  std::vector<MoveOption> legal_moves() const {
    std::vector<MoveOption> out;
    if (status() != SessionStatus::in_progress) return out;
    const StateId s = current();
    const auto& strategy = family_.mover(s) == Player::pursuer ? optimal_.pursuer : optimal_.evader;
    for (StateId t : family_.successors(s)) out.push_back({t, labels_[t], strategy.at(s) == t});
    return out;
  }

  /// Applies machine moves until the human is to move or the game is over.
  std::vector<StateId> advance_machine() {
    std::vector<StateId> moves;
    while (status() == SessionStatus::in_progress && family_.mover(current()) != human_) {
      const StateId s = current();
      const StateId t = (family_.mover(s) == Player::pursuer ? optimal_.pursuer : optimal_.evader).at(s);
      history_.push_back(t);
      moves.push_back(t);
    }
    return moves;
  }

  /// Applies the human's move and then the machine's replies. Throws
  /// IllegalMoveError (state unchanged) when the move is not legal now.
  std::vector<StateId> human_move(StateId successor) {
    const StateId s = current();
    if (!human_to_move() || index(successor) >= family_.state_count() || !is_legal_move(family_, s, successor))
      throw IllegalMoveError(turns(), s, successor);
    history_.push_back(successor);
    return advance_machine();
  }

  Value capture_time() const {
    return family_.is_capture(current()) ? Value(static_cast<Value::rep>(turns())) : Value::infinity();
  }

 private:
  const GameFamily& family_;
  const LabelTable& labels_;
  const OptimalStrategies& optimal_;
  Player human_;
  std::size_t max_turns_;
  std::vector<StateId> history_;
};

}  // namespace gcr

#endif  // GCR_SESSION_HPP_

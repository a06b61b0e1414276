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

// Verification paths that do not use the solver: exhaustive minimax on the
// K-turn truncated game and the reachability attractor of the capture set.

#ifndef GCR_ORACLE_HPP_
#define GCR_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gcr/game_family.hpp"
#include "gcr/value.hpp"

namespace gcr {

struct TruncatedOutcome {
  std::uint32_t value = 0;  // sum of turn payoffs over s_0..s_K, at most K + 1
  bool captured = false;    // the minimax line reaches a capture state within K turns
};

/// Minimax over the game tree of the K-turn truncated game, memoized on
/// (state, remaining turns). One instance answers many start states with a
/// shared memo.
class TruncatedGame {
 public:
  TruncatedGame(const GameFamily& family, std::uint32_t horizon)
      : family_(family), horizon_(horizon), memo_(family.state_count() * (std::size_t{horizon} + 1)) {}

  std::uint32_t horizon() const { return horizon_; }

  TruncatedOutcome solve(StateId s0) { return visit(family_.check_id(s0), horizon_); }

 private:
  TruncatedOutcome visit(StateId s, std::uint32_t remaining) {
    // Capture and terminal states contribute 0 and only lead to the terminal state.
    if (family_.is_terminal(s) || family_.is_capture(s)) return {0, true};
    if (remaining == 0) return {1, false};
    auto& slot = memo_[index(s) * (std::size_t{horizon_} + 1) + remaining];
    if (slot) return *slot;

    const bool minimize = family_.mover(s) == Player::pursuer;
    std::optional<TruncatedOutcome> best;
    for (StateId t : family_.successors(s)) {
      const TruncatedOutcome child = visit(t, remaining - 1);
      if (!best || (minimize ? child.value < best->value : child.value > best->value)) best = child;
    }
    slot = TruncatedOutcome{best->value + 1, best->captured};
    return *slot;
  }

  const GameFamily& family_;
  std::uint32_t horizon_;
  std::vector<std::optional<TruncatedOutcome>> memo_;
};

/// Value of the K-turn truncated game from s0: the minimax of
/// sum_{t=0..K} q(s_t). Capture-free lines are worth K + 1.
inline TruncatedOutcome truncated_value(const GameFamily& family, StateId s0, std::uint32_t horizon) {
  return TruncatedGame(family, horizon).solve(s0);
}

/// Capture time from s0 derived from the truncated game with K = |S|:
/// finite when the minimax line captures, infinity otherwise.
inline Value oracle_value(const GameFamily& family, StateId s0) {
  if (family.is_terminal(s0)) return Value(0);
  const auto horizon = static_cast<std::uint32_t>(family.regular_count());
  const TruncatedOutcome out = truncated_value(family, s0, horizon);
  return out.captured && out.value < horizon ? Value(out.value) : Value::infinity();
}

/// oracle_value() for every state, sharing one memo. The terminal state gets 0.
inline std::vector<Value> oracle_values(const GameFamily& family) {
  const auto horizon = static_cast<std::uint32_t>(family.regular_count());
  TruncatedGame game(family, horizon);
  std::vector<Value> out(family.state_count(), Value(0));
  for (std::size_t i = 0; i < family.regular_count(); ++i) {
    const TruncatedOutcome r = game.solve(state_id(i));
    out[i] = r.captured && r.value < horizon ? Value(r.value) : Value::infinity();
  }
  return out;
}

struct Partition {
  std::vector<StateId> pwin;
  std::vector<StateId> ewin;
};

/// Level sets W_0 = S_c, W_{n+1} = W_n + {pursuer states with some successor
/// in W_n} + {evader states with every successor in W_n}. Regular states only.
struct AttractorTrace {
  std::vector<std::vector<bool>> levels;  // W_0 .. W_converged
  std::size_t converged_at = 0;           // first n with W_{n+1} == W_n

  /// Smallest n with s in W_n, or nothing if s is never attracted.
  std::optional<std::size_t> level_of(StateId s) const {
    for (std::size_t n = 0; n < levels.size(); ++n)
      if (levels[n][index(s)]) return n;
    return std::nullopt;
  }
};

struct Classification {
  Partition partition;
  AttractorTrace trace;
};

inline Classification attractor_classify(const GameFamily& family) {
  const std::size_t regular = family.regular_count();
  std::vector<bool> w(regular, false);
  for (std::size_t i = 0; i < regular; ++i) w[i] = family.is_capture(state_id(i));

  Classification out;
  out.trace.levels.push_back(w);
  for (;;) {
    std::vector<bool> next = w;
    for (std::size_t i = 0; i < regular; ++i) {
      const StateId s = state_id(i);
      if (w[i] || family.is_capture(s)) continue;
      const auto succ = family.successors(s);
      auto inside = [&](StateId t) { return index(t) < regular && w[index(t)]; };
      next[i] = family.mover(s) == Player::pursuer ? std::any_of(succ.begin(), succ.end(), inside)
                                                   : std::all_of(succ.begin(), succ.end(), inside);
    }
    if (next == w) break;
    w = std::move(next);
    out.trace.levels.push_back(w);
  }
  out.trace.converged_at = out.trace.levels.size() - 1;
  for (std::size_t i = 0; i < regular; ++i) (w[i] ? out.partition.pwin : out.partition.ewin).push_back(state_id(i));
  return out;
}

}  // namespace gcr

#endif  // GCR_ORACLE_HPP_

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

#ifndef GCR_GAME_FAMILY_HPP_
#define GCR_GAME_FAMILY_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcr {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense index of a state. The numeric order is the family's total order,
/// which every argmin/argmax tie-break uses.
enum class StateId : std::uint32_t {};

constexpr std::size_t index(StateId s) { return static_cast<std::size_t>(s); }
constexpr StateId state_id(std::size_t i) { return static_cast<StateId>(static_cast<std::uint32_t>(i)); }

enum class Player : std::uint8_t { pursuer = 1, evader = 2 };

constexpr Player opponent(Player p) { return p == Player::pursuer ? Player::evader : Player::pursuer; }
constexpr int player_number(Player p) { return static_cast<int>(p); }

inline Player player_from_number(int n) {
  if (n == 1) return Player::pursuer;
  if (n == 2) return Player::evader;
  throw InvalidArgument("player must be 1 or 2, got " + std::to_string(n));
}

/// Decoded view of a StateId. The terminal state has no locations and no mover.
struct State {
  bool terminal = false;
  std::uint32_t pursuer = 0;
  std::uint32_t evader = 0;
  Player mover = Player::pursuer;

  friend bool operator==(const State&, const State&) = default;
};

using Metadata = std::map<std::string, std::string>;

/// Explicit finite encoding of a game family: movement rules, mover partition
/// and capture set over the states V1 x V2 x {1,2} plus the terminal state.
///
/// Regular states are enumerated lexicographically on (pursuer, evader, mover)
/// and the terminal state comes last. The successor lists are stored as given;
/// validate_family() reports any structural rule they break. Immutable after
/// construction.
class GameFamily {
 public:
  GameFamily(std::uint32_t locations1, std::uint32_t locations2,
             std::vector<std::vector<StateId>> successors, const std::vector<StateId>& capture,
             Metadata metadata = {})
      : locations1_(locations1), locations2_(locations2), metadata_(std::move(metadata)) {
    if (locations1 == 0 || locations2 == 0) throw InvalidArgument("location sets must be nonempty");
    const std::size_t expected = std::size_t{2} * locations1 * locations2 + 1;
    if (successors.size() != expected)
      throw InvalidArgument("expected " + std::to_string(expected) + " successor lists, got " +
                            std::to_string(successors.size()));
    capture_.assign(expected, false);
    offsets_.reserve(expected + 1);
    offsets_.push_back(0);
    for (const auto& list : successors) {
      for (StateId t : list) check_id(t);
      targets_.insert(targets_.end(), list.begin(), list.end());
      offsets_.push_back(targets_.size());
    }
    for (StateId c : capture) {
      check_id(c);
      capture_[index(c)] = true;
    }
  }

  std::uint32_t locations1() const { return locations1_; }
  std::uint32_t locations2() const { return locations2_; }

  /// Number of states including the terminal state.
  std::size_t state_count() const { return capture_.size(); }
  /// Number of regular states, |V1| * |V2| * 2.
  std::size_t regular_count() const { return capture_.size() - 1; }

  StateId terminal() const { return state_id(regular_count()); }
  bool is_terminal(StateId s) const { return check_id(s) == terminal(); }

  StateId id_of(std::uint32_t pursuer, std::uint32_t evader, Player mover) const {
    if (pursuer >= locations1_ || evader >= locations2_)
      throw InvalidArgument("location out of range: (" + std::to_string(pursuer) + "," +
                            std::to_string(evader) + ")");
    return compose(locations2_, pursuer, evader, mover);
  }

  /// Id of regular state (pursuer, evader, mover) in a family with `locations2`
  /// evader locations. No range checks.
  static constexpr StateId compose(std::uint32_t locations2, std::uint32_t pursuer, std::uint32_t evader,
                                   Player mover) {
    return state_id((std::size_t{pursuer} * locations2 + evader) * 2 + (mover == Player::pursuer ? 0 : 1));
  }

  State state(StateId s) const {
    if (is_terminal(s)) return State{.terminal = true};
    const std::size_t i = index(s);
    return State{.terminal = false,
                 .pursuer = static_cast<std::uint32_t>(i / 2 / locations2_),
                 .evader = static_cast<std::uint32_t>(i / 2 % locations2_),
                 .mover = i % 2 == 0 ? Player::pursuer : Player::evader};
  }

  /// Mover of a regular state; throws on the terminal state.
  Player mover(StateId s) const {
    if (is_terminal(s)) throw InvalidArgument("the terminal state has no mover");
    return index(s) % 2 == 0 ? Player::pursuer : Player::evader;
  }

  std::span<const StateId> successors(StateId s) const {
    const std::size_t i = index(check_id(s));
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }

  bool is_capture(StateId s) const { return capture_[index(check_id(s))]; }

  /// Turn payoff to the evader: 1 on non-capture regular states, 0 on capture
  /// states and on the terminal state.
  int turn_payoff(StateId s) const { return is_terminal(s) || is_capture(s) ? 0 : 1; }

  std::vector<StateId> capture_states() const {
    std::vector<StateId> out;
    for (std::size_t i = 0; i < capture_.size(); ++i)
      if (capture_[i]) out.push_back(state_id(i));
    return out;
  }

  const Metadata& metadata() const { return metadata_; }

  std::string metadata_or(const std::string& key, const std::string& fallback) const {
    auto it = metadata_.find(key);
    return it == metadata_.end() ? fallback : it->second;
  }

  StateId check_id(StateId s) const {
    if (index(s) >= capture_.size())
      throw InvalidArgument("state id " + std::to_string(index(s)) + " out of range [0, " +
                            std::to_string(capture_.size()) + ")");
    return s;
  }

  friend bool operator==(const GameFamily&, const GameFamily&) = default;

  /// Same states, moves and capture set; metadata is ignored.
  bool same_structure(const GameFamily& other) const {
    return locations1_ == other.locations1_ && locations2_ == other.locations2_ && offsets_ == other.offsets_ &&
           targets_ == other.targets_ && capture_ == other.capture_;
  }

 private:
  std::uint32_t locations1_;
  std::uint32_t locations2_;
  std::vector<std::size_t> offsets_;
  std::vector<StateId> targets_;
  std::vector<bool> capture_;
  Metadata metadata_;
};

enum class Rule {
  empty_successors,
  capture_successor,       // a capture state must lead only to the terminal state
  terminal_successor,      // the terminal state must lead only to itself
  terminal_captured,       // the terminal state is not a capture state
  noncapture_to_terminal,  // non-capture states move to regular states only
  other_location_changed,  // a move keeps the non-mover's location
  unsorted_successors,
};

inline const char* rule_name(Rule r) {
  switch (r) {
    case Rule::empty_successors: return "empty-successors";
    case Rule::capture_successor: return "capture-successor";
    case Rule::terminal_successor: return "terminal-successor";
    case Rule::terminal_captured: return "terminal-captured";
    case Rule::noncapture_to_terminal: return "noncapture-to-terminal";
    case Rule::other_location_changed: return "other-location-changed";
    case Rule::unsorted_successors: return "unsorted-successors";
  }
  return "unknown";
}

struct Violation {
  StateId state;
  Rule rule;
  std::string detail;
};

/// Checks the structural rules of a game family. Violations are data: an
/// empty result means the family is valid.
inline std::vector<Violation> validate_family(const GameFamily& family) {
  std::vector<Violation> out;
  const StateId tau = family.terminal();
  auto report = [&](StateId s, Rule r, std::string detail) {
    out.push_back({s, r, "state " + std::to_string(index(s)) + ": " + std::move(detail)});
  };

  for (std::size_t i = 0; i < family.state_count(); ++i) {
    const StateId s = state_id(i);
    const auto next = family.successors(s);
    if (next.empty()) {
      report(s, Rule::empty_successors, "no possible next moves");
      continue;
    }
    if (!std::is_sorted(next.begin(), next.end()) ||
        std::adjacent_find(next.begin(), next.end()) != next.end())
      report(s, Rule::unsorted_successors, "successors not strictly ascending");

    if (s == tau) {
      if (family.is_capture(s)) report(s, Rule::terminal_captured, "terminal state flagged as capture");
      if (next.size() != 1 || next.front() != tau)
        report(s, Rule::terminal_successor, "terminal state must lead only to itself");
      continue;
    }
    if (family.is_capture(s)) {
      if (next.size() != 1 || next.front() != tau)
        report(s, Rule::capture_successor, "capture state must lead only to the terminal state");
      continue;
    }
    const State here = family.state(s);
    for (StateId t : next) {
      if (t == tau) {
        report(s, Rule::noncapture_to_terminal, "non-capture state moves to the terminal state");
        continue;
      }
      const State there = family.state(t);
      const bool kept = here.mover == Player::pursuer ? there.evader == here.evader
                                                      : there.pursuer == here.pursuer;
      if (!kept)
        report(s, Rule::other_location_changed,
               "move to state " + std::to_string(index(t)) + " changes the non-mover's location");
    }
  }
  return out;
}

}  // namespace gcr

#endif  // GCR_GAME_FAMILY_HPP_

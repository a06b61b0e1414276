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

#ifndef GCR_VARIANTS_HPP_
#define GCR_VARIANTS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcr/game_family.hpp"
#include "gcr/graph.hpp"

namespace gcr {

enum class VariantKind { classic, distance_k, k_cops, speed2_pursuer };

inline const char* variant_name(VariantKind k) {
  switch (k) {
    case VariantKind::classic: return "classic";
    case VariantKind::distance_k: return "distance_k";
    case VariantKind::k_cops: return "k_cops";
    case VariantKind::speed2_pursuer: return "speed2_pursuer";
  }
  return "unknown";
}

inline VariantKind parse_variant_kind(const std::string& name) {
  for (VariantKind k : {VariantKind::classic, VariantKind::distance_k, VariantKind::k_cops,
                        VariantKind::speed2_pursuer})
    if (name == variant_name(k)) return k;
  throw InvalidArgument("unknown variant '" + name + "'");
}

struct VariantSpec {
  VariantKind kind = VariantKind::classic;
  std::optional<std::uint32_t> capture_distance;  // distance_k only
  std::optional<std::uint32_t> cops;              // k_cops only, >= 1
  Player initial_mover = Player::pursuer;

  static VariantSpec classic() { return {}; }
  static VariantSpec distance(std::uint32_t k) { return {.kind = VariantKind::distance_k, .capture_distance = k}; }
  static VariantSpec team(std::uint32_t c) { return {.kind = VariantKind::k_cops, .cops = c}; }
  static VariantSpec speed2() { return {.kind = VariantKind::speed2_pursuer}; }

  void validate() const {
    const bool wants_k = kind == VariantKind::distance_k;
    const bool wants_c = kind == VariantKind::k_cops;
    if (wants_k != capture_distance.has_value())
      throw InvalidArgument(wants_k ? "distance_k requires a capture distance"
                                    : "capture distance given for a variant that does not use it");
    if (wants_c != cops.has_value())
      throw InvalidArgument(wants_c ? "k_cops requires a team size" : "team size given for a variant that does not use it");
    if (cops && *cops == 0) throw InvalidArgument("k_cops team size must be at least 1");
  }
};

namespace detail {

inline constexpr std::size_t kMaxStates = std::size_t{1} << 28;

// Pursuer locations are cop-team tuples encoded base-n, first cop most significant.
inline std::vector<std::uint32_t> decode_team(std::uint32_t code, std::uint32_t n, std::uint32_t cops) {
  std::vector<std::uint32_t> team(cops);
  for (std::uint32_t i = cops; i-- > 0;) {
    team[i] = code % n;
    code /= n;
  }
  return team;
}

inline GameFamily build_team_family(const Graph& g, std::uint32_t cops, std::uint32_t capture_distance,
                                    Metadata metadata) {
  const std::uint32_t n = g.vertex_count();
  std::size_t teams = 1;
  for (std::uint32_t i = 0; i < cops; ++i) {
    teams *= n;
    if (teams * n * 2 + 1 > kMaxStates) throw InvalidArgument("state space too large");
  }
  const auto locations1 = static_cast<std::uint32_t>(teams);

  std::vector<std::vector<std::uint32_t>> dist(n);
  for (std::uint32_t v = 0; v < n; ++v) dist[v] = g.distances_from(v);
  std::vector<std::vector<std::uint32_t>> closed(n);
  for (std::uint32_t v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);

  auto id = [n](std::uint32_t p, std::uint32_t e, Player m) { return GameFamily::compose(n, p, e, m); };
  std::vector<std::vector<StateId>> succ(teams * n * 2 + 1);
  std::vector<StateId> capture;
  const StateId tau = state_id(succ.size() - 1);

  std::vector<std::uint32_t> team_moves;
  for (std::uint32_t p = 0; p < locations1; ++p) {
    const auto team = decode_team(p, n, cops);
    // Every tuple reachable when each cop moves within its closed neighborhood.
    team_moves.assign(1, 0);
    for (std::uint32_t i = 0; i < cops; ++i) {
      std::vector<std::uint32_t> next;
      next.reserve(team_moves.size() * closed[team[i]].size());
      for (std::uint32_t prefix : team_moves)
        for (std::uint32_t z : closed[team[i]]) next.push_back(prefix * n + z);
      team_moves.swap(next);
    }
    std::sort(team_moves.begin(), team_moves.end());

    for (std::uint32_t e = 0; e < n; ++e) {
      const bool caught = std::any_of(team.begin(), team.end(),
                                      [&](std::uint32_t c) { return dist[c][e] <= capture_distance; });
      for (Player m : {Player::pursuer, Player::evader}) {
        const StateId s = id(p, e, m);
        auto& out = succ[index(s)];
        if (caught) {
          capture.push_back(s);
          out = {tau};
        } else if (m == Player::pursuer) {
          for (std::uint32_t q : team_moves) out.push_back(id(q, e, Player::evader));
        } else {
          for (std::uint32_t z : closed[e]) out.push_back(id(p, z, Player::pursuer));
        }
      }
    }
  }
  succ[index(tau)] = {tau};
  return GameFamily(locations1, n, std::move(succ), capture, std::move(metadata));
}

// Pursuer location v*2 + phase. In phase 0 the pursuer moves and keeps the
// turn (phase 1); in phase 1 it moves and hands the turn to the evader.
inline GameFamily build_speed2_family(const Graph& g, Metadata metadata) {
  const std::uint32_t n = g.vertex_count();
  if (std::size_t{4} * n * n + 1 > kMaxStates) throw InvalidArgument("state space too large");
  const std::uint32_t locations1 = 2 * n;
  auto id = [n](std::uint32_t p, std::uint32_t e, Player m) { return GameFamily::compose(n, p, e, m); };
  std::vector<std::vector<StateId>> succ(std::size_t{4} * n * n + 1);
  std::vector<StateId> capture;
  const StateId tau = state_id(succ.size() - 1);

  for (std::uint32_t p = 0; p < locations1; ++p) {
    const std::uint32_t v = p / 2;
    const std::uint32_t phase = p % 2;
    for (std::uint32_t e = 0; e < n; ++e) {
      for (Player m : {Player::pursuer, Player::evader}) {
        const StateId s = id(p, e, m);
        auto& out = succ[index(s)];
        if (v == e) {
          capture.push_back(s);
          out = {tau};
        } else if (m == Player::pursuer) {
          for (std::uint32_t z : g.closed_neighborhood(v))
            out.push_back(phase == 0 ? id(2 * z + 1, e, Player::pursuer)
                                     : id(2 * z, e, Player::evader));
          std::sort(out.begin(), out.end());
        } else {
          for (std::uint32_t z : g.closed_neighborhood(e)) out.push_back(id(p, z, Player::pursuer));
        }
      }
    }
  }
  succ[index(tau)] = {tau};
  return GameFamily(locations1, n, std::move(succ), capture, std::move(metadata));
}

}  // namespace detail

/// Builds the game family of a variant on graph `g`. Every move may also stay
/// in place; directed graphs move along arc direction.
inline GameFamily build_family(const Graph& g, const VariantSpec& spec) {
  if (g.vertex_count() == 0) throw InvalidArgument("graph is empty");
  spec.validate();

  Metadata meta{{"variant", variant_name(spec.kind)},
                {"vertex_count", std::to_string(g.vertex_count())},
                {"directed", g.directed() ? "true" : "false"},
                {"initial_mover", std::to_string(player_number(spec.initial_mover))}};
  switch (spec.kind) {
    case VariantKind::classic:
      return detail::build_team_family(g, 1, 0, std::move(meta));
    case VariantKind::distance_k:
      meta["k"] = std::to_string(*spec.capture_distance);
      return detail::build_team_family(g, 1, *spec.capture_distance, std::move(meta));
    case VariantKind::k_cops:
      meta["cops"] = std::to_string(*spec.cops);
      return detail::build_team_family(g, *spec.cops, 0, std::move(meta));
    case VariantKind::speed2_pursuer:
      return detail::build_speed2_family(g, std::move(meta));
  }
  throw InvalidArgument("unknown variant");
}

}  // namespace gcr

#endif  // GCR_VARIANTS_HPP_

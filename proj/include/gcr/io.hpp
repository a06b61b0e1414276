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

// Text formats: family files, label tables, DOT state graphs and play
// histories. Writers are canonical, so write(read(write(x))) == write(x)
// byte for byte.

#ifndef GCR_IO_HPP_
#define GCR_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gcr/game_family.hpp"
#include "gcr/graph.hpp"
#include "gcr/play.hpp"
#include "gcr/solver.hpp"
#include "gcr/value.hpp"
#include "json.hpp"

namespace gcr {

namespace detail {

inline void join_ids(std::ostream& os, std::span<const StateId> ids) {
  os << '[';
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? ", " : "") << index(ids[i]);
  os << ']';
}

inline nlohmann::json parse_json(std::string_view text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseError::Kind::syntax, 0, std::string(what) + ": " + e.what());
  }
}

inline std::uint64_t require_uint(const nlohmann::json& j, const char* field) {
  if (!j.is_number_unsigned()) throw ParseError(ParseError::Kind::syntax, 0, std::string("'") + field + "' must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* field) {
  if (!obj.is_object() || !obj.contains(field))
    throw ParseError(ParseError::Kind::syntax, 0, std::string("missing field '") + field + "'");
  return obj.at(field);
}

inline Value value_from_json(const nlohmann::json& j, const char* field) {
  if (j.is_string() && j.get<std::string>() == "infinity") return Value::infinity();
  const std::uint64_t n = require_uint(j, field);
  if (n >= UINT32_MAX) throw ParseError(ParseError::Kind::range, 0, std::string("'") + field + "' too large");
  return Value(static_cast<Value::rep>(n));
}

inline std::string value_to_json(Value v) { return v.is_finite() ? v.to_string() : "\"infinity\""; }

}  // namespace detail

/// Family file:
///   {
///     "locations1": N1,
///     "locations2": N2,
///     "metadata": {string: string, ...},
///     "capture": [state ids],
///     "edges": [[successor ids of state 0], ..., [successor ids of the terminal state]]
///   }
/// States are implicit: id = (pursuer * N2 + evader) * 2 + (mover - 1), terminal last.
inline std::string write_family(const GameFamily& family) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"locations1\": " << family.locations1() << ",\n";
  os << "  \"locations2\": " << family.locations2() << ",\n";
  os << "  \"metadata\": " << nlohmann::json(family.metadata()).dump() << ",\n";
  os << "  \"capture\": ";
  const auto capture = family.capture_states();
  detail::join_ids(os, capture);
  os << ",\n  \"edges\": [\n";
  for (std::size_t i = 0; i < family.state_count(); ++i) {
    os << "    ";
    detail::join_ids(os, family.successors(state_id(i)));
    os << (i + 1 < family.state_count() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

/// Parses a family file. Only the shape is checked here; run
/// validate_family() for the movement rules.
inline GameFamily read_family(std::string_view text) {
  using K = ParseError::Kind;
  const nlohmann::json doc = detail::parse_json(text, "family file");
  const auto l1 = detail::require_uint(detail::require_field(doc, "locations1"), "locations1");
  const auto l2 = detail::require_uint(detail::require_field(doc, "locations2"), "locations2");
  if (l1 == 0 || l2 == 0 || l1 * l2 > (std::uint64_t{1} << 27))
    throw ParseError(K::range, 0, "location counts must be positive and describe at most 2^28 states");
  const std::uint64_t count = 2 * l1 * l2 + 1;

  Metadata metadata;
  if (doc.contains("metadata")) {
    const auto& m = doc.at("metadata");
    if (!m.is_object()) throw ParseError(K::syntax, 0, "'metadata' must be an object");
    for (const auto& [key, val] : m.items()) {
      if (!val.is_string()) throw ParseError(K::syntax, 0, "metadata value for '" + key + "' must be a string");
      metadata[key] = val.get<std::string>();
    }
  }

  auto read_id = [&](const nlohmann::json& j, const char* field) {
    const std::uint64_t id = detail::require_uint(j, field);
    if (id >= count)
      throw ParseError(K::range, 0, std::string("state id ") + std::to_string(id) + " in '" + field +
                                        "' out of range [0, " + std::to_string(count) + ")");
    return state_id(id);
  };

  const auto& edges = detail::require_field(doc, "edges");
  if (!edges.is_array() || edges.size() != count)
    throw ParseError(K::syntax, 0, "'edges' must list successors for all " + std::to_string(count) + " states");
  std::vector<std::vector<StateId>> successors(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!edges[i].is_array()) throw ParseError(K::syntax, 0, "'edges' entry " + std::to_string(i) + " must be an array");
    for (const auto& t : edges[i]) successors[i].push_back(read_id(t, "edges"));
  }
  const auto& capture_json = detail::require_field(doc, "capture");
  if (!capture_json.is_array()) throw ParseError(K::syntax, 0, "'capture' must be an array");
  std::vector<StateId> capture;
  for (const auto& c : capture_json) capture.push_back(read_id(c, "capture"));

  return GameFamily(static_cast<std::uint32_t>(l1), static_cast<std::uint32_t>(l2), std::move(successors), capture,
                    std::move(metadata));
}

/// Label table document, one record per state:
///   {"id": i, "pursuer": p, "evader": e, "mover": m, "value": v, "finitized_at": f}
/// with "terminal": true in place of the locations for the terminal state and
/// the string "infinity" for infinite values.
inline std::string write_labels(const GameFamily& family, const LabelTable& labels) {
  detail::require_matching(family, labels);
  std::ostringstream os;
  os << "{\n  \"iterations_run\": " << labels.iterations_run << ",\n  \"states\": [\n";
  for (std::size_t i = 0; i < family.state_count(); ++i) {
    const State st = family.state(state_id(i));
    os << "    {\"id\": " << i;
    if (st.terminal) {
      os << ", \"terminal\": true";
    } else {
      os << ", \"pursuer\": " << st.pursuer << ", \"evader\": " << st.evader << ", \"mover\": " << player_number(st.mover);
    }
    os << ", \"value\": " << detail::value_to_json(labels.value[i])
       << ", \"finitized_at\": " << detail::value_to_json(labels.finitized_at[i]) << '}'
       << (i + 1 < family.state_count() ? ",\n" : "\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

inline LabelTable read_labels(std::string_view text) {
  using K = ParseError::Kind;
  const nlohmann::json doc = detail::parse_json(text, "label file");
  LabelTable table;
  table.iterations_run = detail::require_uint(detail::require_field(doc, "iterations_run"), "iterations_run");
  const auto& states = detail::require_field(doc, "states");
  if (!states.is_array()) throw ParseError(K::syntax, 0, "'states' must be an array");
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& rec = states[i];
    if (detail::require_uint(detail::require_field(rec, "id"), "id") != i)
      throw ParseError(K::syntax, 0, "label records must be listed in id order; record " + std::to_string(i));
    table.value.push_back(detail::value_from_json(detail::require_field(rec, "value"), "value"));
    table.finitized_at.push_back(detail::value_from_json(detail::require_field(rec, "finitized_at"), "finitized_at"));
  }
  return table;
}

inline std::string state_label(const GameFamily& family, StateId s) {
  const State st = family.state(s);
  if (st.terminal) return "terminal";
  return "(" + std::to_string(st.pursuer) + "," + std::to_string(st.evader) + "," +
         std::to_string(player_number(st.mover)) + ")";
}

/// State graph in DOT. Nodes carry their value; the optimal strategies' moves
/// are drawn bold and red; capture states are filled.
inline std::string write_dot(const GameFamily& family, const LabelTable& labels, const OptimalStrategies& optimal) {
  detail::require_matching(family, labels);
  std::ostringstream os;
  os << "digraph gcr {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < family.state_count(); ++i) {
    const StateId s = state_id(i);
    os << "  s" << i << " [label=\"" << state_label(family, s) << "\\n" << labels.value[i] << '"';
    if (!family.is_terminal(s) && family.is_capture(s)) os << ", style=filled, fillcolor=lightgray";
    os << "];\n";
  }
  for (std::size_t i = 0; i < family.state_count(); ++i) {
    const StateId s = state_id(i);
    for (StateId t : family.successors(s)) {
      const bool chosen = optimal.pursuer.defined_at(s) ? optimal.pursuer.at(s) == t
                                                        : optimal.evader.defined_at(s) && optimal.evader.at(s) == t;
      os << "  s" << i << " -> s" << index(t);
      if (chosen) os << " [color=red, penwidth=2]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

/// One line per state: id, pursuer, evader, mover, cumulative payoff. The
/// trailer gives the capture time.
inline std::string write_history(const GameFamily& family, const History& h) {
  std::ostringstream os;
  os << "# id pursuer evader mover cumulative_payoff\n";
  std::uint64_t cumulative = 0;
  for (StateId s : h.states) {
    cumulative += static_cast<std::uint64_t>(family.turn_payoff(s));
    const State st = family.state(s);
    os << index(s) << ' ' << st.pursuer << ' ' << st.evader << ' ' << player_number(st.mover) << ' ' << cumulative
       << '\n';
  }
  os << "capture_time: " << capture_time(family, h) << (h.truncated ? " (truncated)" : "") << '\n';
  return os.str();
}

}  // namespace gcr

#endif  // GCR_IO_HPP_

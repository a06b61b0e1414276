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

#ifndef GCR_SERVICE_HPP_
#define GCR_SERVICE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcr/game_family.hpp"
#include "gcr/graph.hpp"
#include "gcr/play.hpp"
#include "gcr/session.hpp"
#include "gcr/solver.hpp"
#include "json.hpp"

namespace gcr {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// The wire API over one solved family, independent of any transport:
///
///   GET    /game                 family shape, metadata and source graph
///   GET    /values               full label table
///   GET    /state/{id}           state detail with legal moves and their values
///   POST   /session              {"start_state": id, "human_side": 1|2}
///   GET    /session/{id}
///   POST   /session/{id}/move    {"successor_id": id}; includes the machine's replies
///   DELETE /session/{id}
///
/// Infinite values are sent as null. Family, labels and strategies are never
/// mutated; sessions are isolated and each is updated under the service lock.
class GameService {
 public:
  GameService(GameFamily family, std::optional<Graph> graph, LabelTable labels)
      : family_(std::move(family)),
        graph_(std::move(graph)),
        labels_(std::move(labels)),
        optimal_(optimal_strategies(family_, labels_)) {}

  GameService(const GameService&) = delete;
  GameService& operator=(const GameService&) = delete;

  const GameFamily& family() const { return family_; }
  const LabelTable& labels() const { return labels_; }

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body = {}) {
    try {
      return route(method, split_path(path), body);
    } catch (const nlohmann::json::exception& e) {
      return error(400, std::string("bad request body: ") + e.what());
    } catch (const InvalidArgument& e) {
      return error(400, e.what());
    }
  }

  static nlohmann::json value_json(Value v) { return v.is_finite() ? nlohmann::json(v.turns()) : nlohmann::json(nullptr); }

  nlohmann::json state_json(StateId s) const {
    const State st = family_.state(s);
    nlohmann::json j;
    j["id"] = index(s);
    j["terminal"] = st.terminal;
    if (!st.terminal) {
      j["pursuer"] = st.pursuer;
      j["evader"] = st.evader;
      j["mover"] = player_number(st.mover);
    }
    j["capture"] = family_.is_capture(s);
    j["value"] = value_json(labels_[s]);
    j["finitized_at"] = value_json(labels_.finitized_at[index(s)]);
    std::optional<StateId> choice;
    if (optimal_.pursuer.defined_at(s)) choice = optimal_.pursuer.at(s);
    if (optimal_.evader.defined_at(s)) choice = optimal_.evader.at(s);
    j["choice"] = choice ? nlohmann::json(index(*choice)) : nlohmann::json(nullptr);
    j["moves"] = nlohmann::json::array();
    for (StateId t : family_.successors(s)) {
      nlohmann::json m;
      m["successor_id"] = index(t);
      m["value"] = value_json(labels_[t]);
      m["recommended"] = choice == t;
      j["moves"].push_back(std::move(m));
    }
    return j;
  }

 private:
  struct Entry {
    std::uint64_t id;
    PlaySession session;
  };

  static std::vector<std::string_view> split_path(std::string_view path) {
    std::vector<std::string_view> parts;
    path = path.substr(0, path.find('?'));
    std::size_t i = 0;
    while (i < path.size()) {
      if (path[i] == '/') {
        ++i;
        continue;
      }
      const std::size_t j = std::min(path.find('/', i), path.size());
      parts.push_back(path.substr(i, j - i));
      i = j;
    }
    return parts;
  }

  static ApiResponse error(int status, const std::string& message) {
    return {status, nlohmann::json{{"error", message}}};
  }

  static std::optional<std::uint64_t> parse_id(std::string_view text) {
    std::uint32_t n = 0;
    if (!detail::parse_uint(text, n)) return std::nullopt;
    return n;
  }

  StateId state_from_json(const nlohmann::json& j, const char* field) const {
    if (!j.is_object() || !j.contains(field) || !j.at(field).is_number_unsigned())
      throw InvalidArgument(std::string("'") + field + "' must be a state id");
    const auto id = j.at(field).get<std::uint64_t>();
    if (id >= family_.state_count()) throw InvalidArgument(std::string("'") + field + "' out of range");
    return state_id(id);
  }

  ApiResponse route(std::string_view method, const std::vector<std::string_view>& p, std::string_view body) {
    if (method == "GET" && p.size() == 1 && p[0] == "game") return {200, game_json()};
    if (method == "GET" && p.size() == 1 && p[0] == "values") return {200, values_json()};
    if (method == "GET" && p.size() == 2 && p[0] == "state") {
      const auto id = parse_id(p[1]);
      if (!id || *id >= family_.state_count()) return error(404, "no such state");
      return {200, state_json(state_id(*id))};
    }
    if (p.empty() || p[0] != "session") return error(404, "no such endpoint");

    if (method == "POST" && p.size() == 1) return create_session(body);
    if (p.size() < 2) return error(404, "no such endpoint");
    const auto sid = parse_id(p[1]);
    std::lock_guard lock(mutex_);
    auto it = sid ? sessions_.find(*sid) : sessions_.end();
    if (it == sessions_.end()) return error(404, "unknown session id");
    Entry& entry = *it->second;

    if (method == "GET" && p.size() == 2) return {200, session_json(entry, {})};
    if (method == "DELETE" && p.size() == 2) {
      sessions_.erase(it);
      return {200, nlohmann::json{{"deleted", *sid}}};
    }
    if (method == "POST" && p.size() == 3 && p[2] == "move") {
      const StateId successor = state_from_json(nlohmann::json::parse(body), "successor_id");
      try {
        const auto replies = entry.session.human_move(successor);
        return {200, session_json(entry, replies)};
      } catch (const IllegalMoveError& e) {
        return error(400, e.what());
      }
    }
    return error(404, "no such endpoint");
  }

  ApiResponse create_session(std::string_view body) {
    const nlohmann::json req = nlohmann::json::parse(body);
    const StateId start = state_from_json(req, "start_state");
    if (family_.is_terminal(start)) throw InvalidArgument("cannot start at the terminal state");
    if (!req.contains("human_side") || !req.at("human_side").is_number_integer())
      throw InvalidArgument("'human_side' must be 1 or 2");
    const Player human = player_from_number(req.at("human_side").get<int>());

    std::lock_guard lock(mutex_);
    const std::uint64_t id = next_id_++;
    auto entry = std::make_unique<Entry>(
        Entry{id, PlaySession(family_, labels_, optimal_, start, human, default_max_turns(family_))});
    const auto replies = entry->session.advance_machine();
    ApiResponse out{201, session_json(*entry, replies)};
    sessions_.emplace(id, std::move(entry));
    return out;
  }

  nlohmann::json session_json(const Entry& e, const std::vector<StateId>& machine_moves) const {
    const PlaySession& s = e.session;
    nlohmann::json j;
    j["id"] = e.id;
    j["human_side"] = player_number(s.human());
    j["status"] = status_name(s.status());
    j["turns"] = s.turns();
    j["max_turns"] = s.max_turns();
    j["human_to_move"] = s.human_to_move();
    j["capture_time"] = value_json(s.capture_time());
    j["remaining_value"] = value_json(labels_[s.current()]);
    j["history"] = nlohmann::json::array();
    for (StateId h : s.history()) j["history"].push_back(index(h));
    j["machine_moves"] = nlohmann::json::array();
    for (StateId m : machine_moves) j["machine_moves"].push_back(index(m));
    j["state"] = state_json(s.current());
    return j;
  }

  nlohmann::json game_json() const {
    nlohmann::json j;
    j["locations1"] = family_.locations1();
    j["locations2"] = family_.locations2();
    j["state_count"] = family_.state_count();
    j["terminal"] = index(family_.terminal());
    j["metadata"] = family_.metadata();
    j["variant"] = family_.metadata_or("variant", "custom");
    if (graph_) {
      nlohmann::json edges = nlohmann::json::array();
      for (auto [u, v] : graph_->edges()) edges.push_back({u, v});
      j["graph"] = {{"vertex_count", graph_->vertex_count()}, {"directed", graph_->directed()}, {"edges", edges}};
    } else {
      j["graph"] = nullptr;
    }
    return j;
  }

  nlohmann::json values_json() const {
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t i = 0; i < family_.state_count(); ++i)
      states.push_back({{"id", i},
                        {"value", value_json(labels_.value[i])},
                        {"finitized_at", value_json(labels_.finitized_at[i])}});
    return {{"iterations_run", labels_.iterations_run}, {"states", states}};
  }

  const GameFamily family_;
  const std::optional<Graph> graph_;
  const LabelTable labels_;
  const OptimalStrategies optimal_;

  std::mutex mutex_;
  std::uint64_t next_id_ = 1;
  std::map<std::uint64_t, std::unique_ptr<Entry>> sessions_;
};

}  // namespace gcr

#endif  // GCR_SERVICE_HPP_

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

// Command-line front end. Every command reads its input file, writes results
// to `out` (or --output) and diagnostics to `err`, and returns an exit code:
// 0 ok, 1 verification failure, 2 input error, 3 oracle cap exceeded,
// 4 environment error.

#ifndef GCR_CLI_HPP_
#define GCR_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcr/game_family.hpp"
#include "gcr/graph.hpp"
#include "gcr/http_server.hpp"
#include "gcr/io.hpp"
#include "gcr/oracle.hpp"
#include "gcr/play.hpp"
#include "gcr/service.hpp"
#include "gcr/session.hpp"
#include "gcr/solver.hpp"
#include "gcr/variants.hpp"

namespace gcr::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kOracleCap = 3, kEnvironmentError = 4 };

struct RunConfig {
  std::string command;
  std::string input;
  std::string variant = "classic";
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> cops;
  bool directed = false;
  int first_mover = 1;
  std::string output;
  std::string format;
  std::string labels;
  std::uint64_t seed = 1;
  std::size_t random_opponents = 0;
  std::size_t oracle_cap = 2000;
  std::optional<std::size_t> max_turns;
  std::string start;
  int human_side = 2;
  std::string host = "127.0.0.1";
  int port = 8080;
};

/// Bad input file or flags; reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadedGame {
  GameFamily family;
  std::optional<Graph> graph;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline VariantSpec variant_spec(const RunConfig& cfg) {
  VariantSpec spec;
  spec.kind = parse_variant_kind(cfg.variant);
  spec.initial_mover = player_from_number(cfg.first_mover);
  if (spec.kind == VariantKind::distance_k) spec.capture_distance = cfg.k.value_or(0);
  if (spec.kind == VariantKind::k_cops) spec.cops = cfg.cops.value_or(1);
  if (cfg.k && spec.kind != VariantKind::distance_k) throw InputError("--k applies to --variant distance_k only");
  if (cfg.cops && spec.kind != VariantKind::k_cops) throw InputError("--cops applies to --variant k_cops only");
  return spec;
}

/// Family files (.json, or text starting with '{') are used as-is; anything
/// else is parsed as a graph (DOT subset or edge list) and built into the
/// requested variant.
inline LoadedGame load_game(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool is_family = (cfg.input.size() >= 5 && cfg.input.ends_with(".json")) ||
                         (first != std::string::npos && text[first] == '{');
  try {
    if (is_family) {
      GameFamily family = read_family(text);
      const auto violations = validate_family(family);
      if (!violations.empty()) {
        std::string msg = "invalid family: " + std::to_string(violations.size()) + " violations";
        for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
          msg += "\n  " + std::string(rule_name(violations[i].rule)) + ": " + violations[i].detail;
        throw InputError(msg);
      }
      return {std::move(family), std::nullopt};
    }
    const bool dot = first != std::string::npos &&
                     (text.compare(first, 5, "graph") == 0 || text.compare(first, 7, "digraph") == 0 ||
                      text.compare(first, 6, "strict") == 0);
    const std::optional<bool> force = cfg.directed ? std::optional<bool>(true) : std::nullopt;
    Graph graph = parse_graph(text, dot ? GraphFormat::dot_subset : GraphFormat::edge_list, force);
    GameFamily family = build_family(graph, variant_spec(cfg));
    return {std::move(family), std::move(graph)};
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const InvalidArgument& e) {
    throw InputError(e.what());
  }
}

inline LabelTable load_or_solve(const RunConfig& cfg, const GameFamily& family) {
  if (cfg.labels.empty()) return vl_solve(family);
  LabelTable labels;
  try {
    labels = read_labels(read_file(cfg.labels));
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  if (labels.size() != family.state_count())
    throw InputError("label file has " + std::to_string(labels.size()) + " states, family has " +
                     std::to_string(family.state_count()));
  return labels;
}

inline Player first_mover_of(const GameFamily& family) {
  const std::string raw = family.metadata_or("initial_mover", "1");
  if (raw == "1") return Player::pursuer;
  if (raw == "2") return Player::evader;
  throw InputError("metadata initial_mover must be 1 or 2, got '" + raw + "'");
}

/// "--start p,e,m" or a bare state id; defaults to the placement-minimax start.
inline StateId start_state(const RunConfig& cfg, const GameFamily& family, const LabelTable& labels) {
  if (cfg.start.empty()) {
    const Placement pl = placement_minimax(family, labels, first_mover_of(family));
    return family.id_of(pl.cop_placement, pl.robber_reply[pl.cop_placement], first_mover_of(family));
  }
  std::vector<std::uint32_t> parts;
  std::stringstream ss(cfg.start);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint32_t n = 0;
    if (!detail::parse_uint(item, n)) throw InputError("bad --start '" + cfg.start + "'");
    parts.push_back(n);
  }
  try {
    if (parts.size() == 1) {
      const StateId s = family.check_id(state_id(parts[0]));
      if (family.is_terminal(s)) throw InputError("--start cannot be the terminal state");
      return s;
    }
    if (parts.size() == 3) return family.id_of(parts[0], parts[1], player_from_number(static_cast<int>(parts[2])));
  } catch (const InvalidArgument& e) {
    throw InputError(std::string("bad --start: ") + e.what());
  }
  throw InputError("--start expects 'id' or 'pursuer,evader,mover'");
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

inline std::string placement_summary(const GameFamily& family, const LabelTable& labels) {
  const Placement pl = placement_minimax(family, labels, first_mover_of(family));
  std::ostringstream os;
  os << "placement_value: " << pl.value << '\n';
  os << "cop_placement: " << pl.cop_placement << '\n';
  os << "robber_replies:";
  for (std::uint32_t p = 0; p < pl.robber_reply.size(); ++p)
    os << ' ' << p << "->" << pl.robber_reply[p] << '(' << pl.reply_value[p] << ')';
  os << '\n';
  return os.str();
}

inline std::string family_header(const GameFamily& family) {
  std::ostringstream os;
  os << "variant: " << family.metadata_or("variant", "custom") << '\n';
  os << "locations: " << family.locations1() << ' ' << family.locations2() << '\n';
  os << "states: " << family.state_count() << " (" << family.regular_count() << " regular, "
     << family.capture_states().size() << " capture)\n";
  return os.str();
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const LoadedGame game = load_game(cfg);
  const LabelTable labels = vl_solve(game.family);
  Output sink(cfg.output, out);
  if (cfg.format == "json") {
    sink.stream() << write_labels(game.family, labels);
    return kOk;
  }
  if (!cfg.format.empty() && cfg.format != "text") throw InputError("unknown --format '" + cfg.format + "'");
  std::ostream& os = sink.stream();
  os << family_header(game.family);
  os << "iterations_run: " << labels.iterations_run << '\n';
  os << placement_summary(game.family, labels);
  os << "# id state value finitized_at\n";
  for (std::size_t i = 0; i < game.family.state_count(); ++i)
    os << i << ' ' << state_label(game.family, state_id(i)) << ' ' << labels.value[i] << ' '
       << labels.finitized_at[i] << '\n';
  return kOk;
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const LoadedGame game = load_game(cfg);
  const Classification c = attractor_classify(game.family);
  Output sink(cfg.output, out);
  std::ostream& os = sink.stream();
  os << family_header(game.family);
  os << "pwin: " << c.partition.pwin.size() << '\n';
  os << "ewin: " << c.partition.ewin.size() << '\n';
  os << "converged_at: " << c.trace.converged_at << '\n';
  os << "level_sizes:";
  for (std::size_t n = 0; n < c.trace.levels.size(); ++n) {
    std::size_t count = 0;
    for (bool b : c.trace.levels[n]) count += b;
    os << ' ' << count;
  }
  os << '\n';
  os << "# id state class level\n";
  for (std::size_t i = 0; i < game.family.regular_count(); ++i) {
    const auto level = c.trace.level_of(state_id(i));
    os << i << ' ' << state_label(game.family, state_id(i)) << ' ' << (level ? "P-win " : "E-win ")
       << (level ? std::to_string(*level) : "-") << '\n';
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const LoadedGame game = load_game(cfg);
  const GameFamily& family = game.family;
  const LabelTable labels = load_or_solve(cfg, family);
  Output sink(cfg.output, out);
  std::ostream& os = sink.stream();
  os << family_header(family);
  os << "labels: " << (cfg.labels.empty() ? "solved" : cfg.labels) << '\n';
  os << "seed: " << cfg.seed << '\n';

  int passed = 0, failed = 0, skipped = 0;
  auto report = [&](const char* name, const std::vector<std::string>& problems) {
    if (problems.empty()) {
      os << "[PASS] " << name << '\n';
      ++passed;
      return;
    }
    os << "[FAIL] " << name << ": " << problems.size() << " states\n";
    for (std::size_t i = 0; i < problems.size() && i < 10; ++i) os << "       " << problems[i] << '\n';
    ++failed;
  };
  auto describe = [&](StateId s) { return "state " + std::to_string(index(s)) + " " + state_label(family, s); };

  std::vector<std::string> problems;
  for (const auto& v : check_optimality_equations(family, labels))
    problems.push_back(describe(v.state) + ": expected " + v.expected.to_string() + ", got " + v.actual.to_string());
  report("optimality-equations", problems);

  problems.clear();
  for (StateId s : check_value_equals_finitization(labels))
    problems.push_back(describe(s) + ": value " + labels[s].to_string() + " but finitized at " +
                       labels.finitized_at[index(s)].to_string());
  report("value-equals-finitization", problems);

  problems.clear();
  const Classification attractor = attractor_classify(family);
  for (std::size_t i = 0; i < family.regular_count(); ++i) {
    const auto level = attractor.trace.level_of(state_id(i));
    const Value expected = level ? Value(static_cast<Value::rep>(*level)) : Value::infinity();
    if (expected != labels.value[i])
      problems.push_back(describe(state_id(i)) + ": attractor level " + expected.to_string() + ", label " +
                         labels.value[i].to_string());
  }
  report("attractor-agreement", problems);

  bool capped = false;
  if (family.regular_count() > cfg.oracle_cap) {
    os << "[SKIP] oracle-agreement: state space too large for oracle (" << family.regular_count() << " > "
       << cfg.oracle_cap << ")\n";
    ++skipped;
    capped = true;
  } else {
    problems.clear();
    const std::vector<Value> oracle = oracle_values(family);
    for (std::size_t i = 0; i < family.regular_count(); ++i)
      if (oracle[i] != labels.value[i])
        problems.push_back(describe(state_id(i)) + ": oracle " + oracle[i].to_string() + ", label " +
                           labels.value[i].to_string());
    report("oracle-agreement", problems);
  }

  if (cfg.random_opponents > 0) {
    problems.clear();
    const OptimalStrategies optimal = optimal_strategies(family, labels);
    const std::size_t limit = cfg.max_turns.value_or(default_max_turns(family));
    for (std::size_t r = 0; r < cfg.random_opponents; ++r) {
      const auto evader = random_positional_strategy(family, Player::evader, cfg.seed + 2 * r);
      const auto pursuer = random_positional_strategy(family, Player::pursuer, cfg.seed + 2 * r + 1);
      for (std::size_t i = 0; i < family.regular_count(); ++i) {
        const StateId s = state_id(i);
        const Value vs_evader = capture_time(family, play_out(family, optimal.pursuer, evader, s, limit));
        const Value vs_pursuer = capture_time(family, play_out(family, pursuer, optimal.evader, s, limit));
        if (vs_evader > labels.value[i] || vs_pursuer < labels.value[i])
          problems.push_back(describe(s) + ": opponent seed pair " + std::to_string(r));
      }
    }
    report("random-opponents", problems);
  }

  os << passed << " checks passed, " << failed << " failed, " << skipped << " skipped\n";
  if (failed > 0) return kVerifyFailed;
  return capped ? kOracleCap : kOk;
}

inline int cmd_export(const RunConfig& cfg, std::ostream& out) {
  const LoadedGame game = load_game(cfg);
  const GameFamily& family = game.family;
  Output sink(cfg.output, out);
  const std::string format = cfg.format.empty() ? "labels" : cfg.format;
  if (format == "family") {
    sink.stream() << write_family(family);
    return kOk;
  }
  const LabelTable labels = load_or_solve(cfg, family);
  if (format == "labels") {
    sink.stream() << write_labels(family, labels);
  } else if (format == "dot") {
    sink.stream() << write_dot(family, labels, optimal_strategies(family, labels));
  } else if (format == "history") {
    const OptimalStrategies optimal = optimal_strategies(family, labels);
    const History h = play_out(family, optimal.pursuer, optimal.evader, start_state(cfg, family, labels),
                               cfg.max_turns.value_or(default_max_turns(family)));
    sink.stream() << write_history(family, h);
  } else {
    throw InputError("unknown --format '" + format + "' (labels, dot, family, history)");
  }
  return kOk;
}

inline int cmd_play(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const LoadedGame game = load_game(cfg);
  const GameFamily& family = game.family;
  const LabelTable labels = load_or_solve(cfg, family);
  const OptimalStrategies optimal = optimal_strategies(family, labels);
  const Player human = player_from_number(cfg.human_side);
  const StateId start = start_state(cfg, family, labels);
  PlaySession session(family, labels, optimal, start, human, cfg.max_turns.value_or(default_max_turns(family)));

  auto human_location = [&](StateId s) {
    const State st = family.state(s);
    return human == Player::pursuer ? st.pursuer : st.evader;
  };
  auto show_machine = [&](const std::vector<StateId>& moves) {
    for (StateId m : moves) out << "machine moves to " << state_label(family, m) << '\n';
  };

  out << "you play the " << (human == Player::pursuer ? "pursuer" : "evader") << "; start "
      << state_label(family, start) << " value " << labels[start] << '\n';
  show_machine(session.advance_machine());
  while (session.status() == SessionStatus::in_progress) {
    const StateId s = session.current();
    out << "turn " << session.turns() << ": " << state_label(family, s) << " value " << labels[s] << '\n';
    for (const MoveOption& m : session.legal_moves())
      out << "  " << human_location(m.successor) << " -> " << state_label(family, m.successor) << " value "
          << m.value << (m.recommended ? " *" : "") << '\n';
    out << "your move> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\ninput closed\n";
      return kOk;
    }
    std::uint32_t loc = 0;
    std::optional<StateId> chosen;
    if (detail::parse_uint(std::string(line.begin(), std::find_if(line.begin(), line.end(), [](char c) {
                                         return c == ' ' || c == '\r' || c == '\t';
                                       })),
                           loc))
      for (const MoveOption& m : session.legal_moves())
        if (human_location(m.successor) == loc) {
          chosen = m.successor;
          break;
        }
    if (!chosen) {
      out << "illegal move '" << line << "', try again\n";
      continue;
    }
    show_machine(session.human_move(*chosen));
  }
  if (session.status() == SessionStatus::captured)
    out << "captured at turn " << session.capture_time() << " in " << state_label(family, session.current()) << '\n';
  else
    out << "evasion certified: no capture in " << session.turns() << " turns\n";
  return kOk;
}

inline int cmd_serve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  LoadedGame game = load_game(cfg);
  LabelTable labels = load_or_solve(cfg, game.family);
  GameService service(std::move(game.family), std::move(game.graph), std::move(labels));
  HttpFrontend http(service);
  if (!http.bind(cfg.host, cfg.port)) {
    err << "cannot bind " << cfg.host << ':' << cfg.port << " (port busy?)\n";
    return kEnvironmentError;
  }
  out << "listening on http://" << cfg.host << ':' << cfg.port << '\n' << std::flush;
  return http.run() ? kOk : kEnvironmentError;
}

/// Parses `args` (args[0] is the program name) and runs the chosen command.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for generalized cops-and-robbers games", "gcr"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "graph (edge list or DOT) or family .json file")->required();
    sub->add_option("--variant", cfg.variant, "classic, distance_k, k_cops or speed2_pursuer")
        ->check(CLI::IsMember({"classic", "distance_k", "k_cops", "speed2_pursuer"}));
    sub->add_option("--k", cfg.k, "capture distance for distance_k");
    sub->add_option("--cops", cfg.cops, "team size for k_cops")->check(CLI::PositiveNumber);
    sub->add_flag("--directed", cfg.directed, "treat every edge as an arc u -> v");
    sub->add_option("--first-mover", cfg.first_mover, "side to move after placement (1 pursuer, 2 evader)")
        ->check(CLI::IsMember({1, 2}));
    sub->add_option("-o,--output", cfg.output, "write the result here instead of stdout");
  };

  auto* solve = app.add_subcommand("solve", "label every state and print values and placement");
  add_input(solve);
  solve->add_option("--format", cfg.format, "text (default) or json");

  auto* classify = app.add_subcommand("classify", "P-win/E-win partition by attractor levels");
  add_input(classify);

  auto* verify = app.add_subcommand("verify", "cross-check labels against independent methods");
  add_input(verify);
  verify->add_option("--labels", cfg.labels, "check this label file instead of solving");
  verify->add_option("--oracle-cap", cfg.oracle_cap, "largest state space for the tree oracle");
  verify->add_option("--seed", cfg.seed, "seed for random opponents");
  verify->add_option("--random-opponents", cfg.random_opponents, "random positional opponents to play against");
  verify->add_option("--max-turns", cfg.max_turns, "play limit for random opponents");

  auto* exp = app.add_subcommand("export", "write labels, DOT, family file or an optimal-play history");
  add_input(exp);
  exp->add_option("--format", cfg.format, "labels (default), dot, family or history")
      ->check(CLI::IsMember({"labels", "dot", "family", "history"}));
  exp->add_option("--labels", cfg.labels, "use this label file instead of solving");
  exp->add_option("--start", cfg.start, "history start: state id or pursuer,evader,mover");
  exp->add_option("--max-turns", cfg.max_turns, "history length limit");

  auto* play = app.add_subcommand("play", "play one side against the optimal strategy");
  add_input(play);
  play->add_option("--human-side", cfg.human_side, "1 pursuer, 2 evader")->check(CLI::IsMember({1, 2}));
  play->add_option("--start", cfg.start, "state id or pursuer,evader,mover");
  play->add_option("--max-turns", cfg.max_turns, "turns without capture that certify evasion");
  play->add_option("--labels", cfg.labels, "use this label file instead of solving");

  auto* serve = app.add_subcommand("serve", "serve the HTTP API");
  add_input(serve);
  serve->add_option("--host", cfg.host, "bind address");
  serve->add_option("--port", cfg.port, "TCP port");
  serve->add_option("--labels", cfg.labels, "use this label file instead of solving");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (const auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    if (app.got_subcommand(solve)) return cmd_solve(cfg, out);
    if (app.got_subcommand(classify)) return cmd_classify(cfg, out);
    if (app.got_subcommand(verify)) return cmd_verify(cfg, out);
    if (app.got_subcommand(exp)) return cmd_export(cfg, out);
    if (app.got_subcommand(play)) return cmd_play(cfg, in, out);
    if (app.got_subcommand(serve)) return cmd_serve(cfg, out, err);
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kInputError;
  } catch (const InvalidArgument& e) {
    err << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace gcr::cli

#endif  // GCR_CLI_HPP_

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

#ifndef GCR_GRAPH_HPP_
#define GCR_GRAPH_HPP_

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcr/game_family.hpp"

namespace gcr {

/// A finite graph without self-loops. Undirected edges are stored once with
/// the smaller endpoint first.
class Graph {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  Graph(std::uint32_t vertex_count, bool directed, const std::vector<Edge>& edges = {})
      : vertex_count_(vertex_count), directed_(directed), out_(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= vertex_count_ || v >= vertex_count_)
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside [0, " + std::to_string(vertex_count_) + ")");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (!directed_ && u > v) std::swap(u, v);
    if (!edges_.insert({u, v}).second) return;
    insert_sorted(out_[u], v);
    if (!directed_) insert_sorted(out_[v], u);
  }

  std::uint32_t vertex_count() const { return vertex_count_; }
  bool directed() const { return directed_; }
  const std::set<Edge>& edges() const { return edges_; }

  /// Out-neighbors of v in ascending order (excluding v itself).
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return out_.at(v); }

  /// v followed by its out-neighbors, ascending. Staying put is always a move.
  std::vector<std::uint32_t> closed_neighborhood(std::uint32_t v) const {
    std::vector<std::uint32_t> out = neighbors(v);
    insert_sorted(out, v);
    return out;
  }

  /// BFS distances from `source` along arc direction; unreachable vertices get UINT32_MAX.
  std::vector<std::uint32_t> distances_from(std::uint32_t source) const {
    std::vector<std::uint32_t> dist(vertex_count_, UINT32_MAX);
    std::vector<std::uint32_t> queue{source};
    dist.at(source) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      for (std::uint32_t w : out_[u])
        if (dist[w] == UINT32_MAX) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    return dist;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  static void insert_sorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }

  std::uint32_t vertex_count_;
  bool directed_;
  std::set<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> out_;
};

/// Malformed graph or family text. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, range };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error((kind == Kind::range ? "range error" : "parse error") +
                           (line ? " at line " + std::to_string(line) : std::string()) + ": " + what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

enum class GraphFormat { edge_list, dot_subset };

namespace detail {

inline bool parse_uint(std::string_view token, std::uint32_t& out) {
  if (token.empty() || token.size() > 9 || token.find_first_not_of("0123456789") != std::string_view::npos)
    return false;
  out = static_cast<std::uint32_t>(std::stoul(std::string(token)));
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

inline Graph parse_edge_list(std::string_view text, std::optional<bool> force_directed) {
  using K = ParseError::Kind;
  const auto lines = lines_of(text);
  std::size_t lineno = 0;
  std::optional<Graph> graph;
  for (std::string_view raw : lines) {
    ++lineno;
    std::string_view line = raw.substr(0, raw.find('#'));
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (!graph) {
      std::uint32_t n = 0;
      if (tokens.size() > 2 || !parse_uint(tokens[0], n))
        throw ParseError(K::syntax, lineno, "expected header 'n [directed|undirected]'");
      if (n == 0) throw ParseError(K::syntax, lineno, "graph must have at least one vertex");
      bool directed = false;
      if (tokens.size() == 2) {
        if (tokens[1] == "directed") directed = true;
        else if (tokens[1] != "undirected")
          throw ParseError(K::syntax, lineno, "expected 'directed' or 'undirected'");
      }
      graph.emplace(n, force_directed.value_or(directed));
      continue;
    }
    std::uint32_t u = 0, v = 0;
    if (tokens.size() != 2 || !parse_uint(tokens[0], u) || !parse_uint(tokens[1], v))
      throw ParseError(K::syntax, lineno, "expected 'u v'");
    if (u >= graph->vertex_count() || v >= graph->vertex_count())
      throw ParseError(K::range, lineno,
                       "endpoint out of range [0, " + std::to_string(graph->vertex_count()) + ")");
    if (u == v) throw ParseError(K::syntax, lineno, "self-loops are not allowed");
    graph->add_edge(u, v);
  }
  if (!graph) throw ParseError(K::syntax, lineno ? lineno : 1, "empty input");
  return std::move(*graph);
}

// Accepts: [strict] (graph|digraph) [name] { stmt; ... } where stmt is a bare
// node id or a chain of node ids joined by -- (graph) or -> (digraph).
inline Graph parse_dot_subset(std::string_view text, std::optional<bool> force_directed) {
  using K = ParseError::Kind;
  struct Token {
    std::string text;
    std::size_t line;
  };
  std::vector<Token> tokens;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '{' || c == '}' || c == ';') {
      tokens.push_back({std::string(1, c), line});
      ++i;
    } else if (c == '-' && i + 1 < text.size() && (text[i + 1] == '-' || text[i + 1] == '>')) {
      tokens.push_back({std::string(text.substr(i, 2)), line});
      i += 2;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      tokens.push_back({std::string(text.substr(start, i - start)), line});
    } else {
      throw ParseError(K::syntax, line, std::string("unexpected character '") + c + "'");
    }
  }

  std::size_t pos = 0;
  auto at_end = [&] { return pos >= tokens.size(); };
  auto here = [&] { return at_end() ? line : tokens[pos].line; };
  if (!at_end() && tokens[pos].text == "strict") ++pos;
  if (at_end() || (tokens[pos].text != "graph" && tokens[pos].text != "digraph"))
    throw ParseError(K::syntax, here(), "expected 'graph' or 'digraph'");
  const bool directed = tokens[pos++].text == "digraph";
  const std::string arrow = directed ? "->" : "--";
  if (!at_end() && tokens[pos].text != "{") ++pos;  // graph name
  if (at_end() || tokens[pos].text != "{") throw ParseError(K::syntax, here(), "expected '{'");
  ++pos;

  std::vector<std::pair<std::uint32_t, std::size_t>> nodes;  // (id, line)
  std::vector<std::pair<Graph::Edge, std::size_t>> edges;
  bool closed = false;
  while (!at_end()) {
    const Token& t = tokens[pos];
    if (t.text == "}") {
      closed = true;
      ++pos;
      break;
    }
    if (t.text == ";") {
      ++pos;
      continue;
    }
    std::uint32_t prev = 0;
    if (!parse_uint(t.text, prev)) throw ParseError(K::syntax, t.line, "expected a numeric node id, got '" + t.text + "'");
    nodes.push_back({prev, t.line});
    ++pos;
    while (!at_end() && (tokens[pos].text == "--" || tokens[pos].text == "->")) {
      if (tokens[pos].text != arrow)
        throw ParseError(K::syntax, tokens[pos].line, "edge operator '" + tokens[pos].text + "' does not match graph kind");
      ++pos;
      std::uint32_t next = 0;
      if (at_end() || !parse_uint(tokens[pos].text, next))
        throw ParseError(K::syntax, here(), "expected a numeric node id after '" + arrow + "'");
      if (next == prev) throw ParseError(K::syntax, tokens[pos].line, "self-loops are not allowed");
      nodes.push_back({next, tokens[pos].line});
      edges.push_back({{prev, next}, tokens[pos].line});
      prev = next;
      ++pos;
    }
  }
  if (!closed) throw ParseError(K::syntax, here(), "missing '}'");
  if (!at_end()) throw ParseError(K::syntax, tokens[pos].line, "trailing input after '}'");
  if (nodes.empty()) throw ParseError(K::syntax, here(), "graph has no vertices");

  std::uint32_t n = 0;
  for (auto [id, l] : nodes) {
    if (id >= 1'000'000) throw ParseError(K::range, l, "node id too large");
    n = std::max(n, id + 1);
  }
  Graph g(n, force_directed.value_or(directed));
  for (auto [e, l] : edges) g.add_edge(e.first, e.second);
  return g;
}

}  // namespace detail

/// Parses a graph. edge_list: header "n [directed|undirected]" then one
/// 0-based "u v" pair per line ('#' starts a comment). dot_subset: bare
/// numeric node ids with "--"/"->" edges. `force_directed` overrides the
/// directedness declared by the text; pairs keep their written orientation.
inline Graph parse_graph(std::string_view text, GraphFormat format, std::optional<bool> force_directed = std::nullopt) {
  return format == GraphFormat::edge_list ? detail::parse_edge_list(text, force_directed)
                                          : detail::parse_dot_subset(text, force_directed);
}

/// Canonical edge-list rendering; parse_graph(to_edge_list(g)) == g.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << (g.directed() ? " directed" : " undirected") << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

namespace graphs {

inline Graph path(std::uint32_t n) {
  Graph g(n, false);
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(std::uint32_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete(std::uint32_t n) {
  Graph g(n, false);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  Graph g(10, false);
  for (std::uint32_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

/// Connected undirected graph on n vertices: a random spanning tree plus each
/// remaining pair independently with probability `extra_edge_probability`.
/// Uses raw engine output only, so results are identical across standard libraries.
inline Graph random_connected(std::uint32_t n, std::mt19937_64& rng, double extra_edge_probability = 0.3) {
  Graph g(n, false);
  for (std::uint32_t v = 1; v < n; ++v) g.add_edge(static_cast<std::uint32_t>(rng() % v), v);
  const auto threshold = static_cast<std::uint64_t>(extra_edge_probability * 1e6);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (rng() % 1'000'000 < threshold) g.add_edge(u, v);
  return g;
}

}  // namespace graphs

}  // namespace gcr

#endif  // GCR_GRAPH_HPP_

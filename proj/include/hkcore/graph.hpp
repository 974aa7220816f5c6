#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hkcore {

/// External node label as it appears in the input data.
using node_t = std::uint32_t;
using edge_t = std::pair<node_t, node_t>;

/// Simple undirected graph keyed by external labels. Adjacency lists are
/// kept sorted; nodes iterate in ascending label order.
class Graph {
 public:
  Graph() = default;

  void add_node(node_t v) { adj_.try_emplace(v); }

  /// Adds {u, v}. Returns false (and changes nothing beyond adding the
  /// endpoints) for self-loops and duplicates.
  bool add_edge(node_t u, node_t v) {
    add_node(u);
    add_node(v);
    if (u == v) return false;
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edges_;
    return true;
  }

  void remove_edge(node_t u, node_t v) {
    if (!has_edge(u, v)) throw DomainError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    erase_sorted(adj_.at(u), v);
    erase_sorted(adj_.at(v), u);
    --edges_;
  }

  void remove_node(node_t v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw DomainError("node " + std::to_string(v) + " not in graph");
    for (node_t u : it->second) erase_sorted(adj_.at(u), v);
    edges_ -= it->second.size();
    adj_.erase(it);
  }

  bool has_node(node_t v) const { return adj_.count(v) != 0; }

  bool has_edge(node_t u, node_t v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && std::binary_search(it->second.begin(), it->second.end(), v);
  }

  const std::vector<node_t>& neighbors(node_t v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw DomainError("node " + std::to_string(v) + " not in graph");
    return it->second;
  }

  std::size_t degree(node_t v) const { return neighbors(v).size(); }
  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  bool empty() const { return adj_.empty(); }

  std::vector<node_t> nodes() const {
    std::vector<node_t> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
  }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<edge_t> edges() const {
    std::vector<edge_t> out;
    out.reserve(edges_);
    for (const auto& [u, nbrs] : adj_)
      for (node_t v : nbrs)
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::map<node_t, std::vector<node_t>>& adjacency() const { return adj_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static void erase_sorted(std::vector<node_t>& xs, node_t v) {
    auto it = std::lower_bound(xs.begin(), xs.end(), v);
    if (it != xs.end() && *it == v) xs.erase(it);
  }

  std::map<node_t, std::vector<node_t>> adj_;
  std::size_t edges_ = 0;
};

struct ParseStats {
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline node_t parse_label(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, "malformed node label '" + std::string(tok) + "'");
  if (value == 0 || value > UINT32_MAX)
    throw ParseError(line, "node label out of range '" + std::string(tok) + "'");
  return static_cast<node_t>(value);
}

}  // namespace detail

/// Reads a whitespace- or comma-separated edge list. Lines starting with '#'
/// or '%' are comments; tokens after the first two are ignored (weights,
/// timestamps). A line holding a single label declares an isolated node.
/// Directed input is symmetrized; duplicates and self-loops are dropped and
/// counted in `stats`.
inline Graph parse_edge_list(std::istream& in, ParseStats* stats = nullptr) {
  Graph g;
  ParseStats local;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (view[first] == '#' || view[first] == '%') continue;
    auto toks = detail::split_tokens(view);
    if (toks.size() == 1) {
      g.add_node(detail::parse_label(toks[0], lineno));
      continue;
    }
    node_t u = detail::parse_label(toks[0], lineno);
    node_t v = detail::parse_label(toks[1], lineno);
    if (u == v) {
      g.add_node(u);
      ++local.self_loops;
    } else if (!g.add_edge(u, v)) {
      ++local.duplicates;
    }
  }
  if (stats) *stats = local;
  return g;
}

inline Graph parse_edge_list(std::string_view text, ParseStats* stats = nullptr) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, stats);
}

/// Writes "u v" per edge (sorted) and a single-label line for each isolated
/// node, so that parse_edge_list reproduces the same graph.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [v, nbrs] : g.adjacency())
    if (nbrs.empty()) out << v << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph induced_subgraph(const Graph& g, const std::vector<node_t>& keep) {
  std::vector<node_t> s(keep);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  Graph out;
  for (node_t v : s) {
    if (!g.has_node(v)) throw DomainError("node " + std::to_string(v) + " not in graph");
    out.add_node(v);
  }
  for (node_t u : s) {
    for (node_t v : g.neighbors(u))
      if (u < v && std::binary_search(s.begin(), s.end(), v)) out.add_edge(u, v);
  }
  return out;
}

inline Graph induced_subgraph(const Graph& g, const std::set<node_t>& keep) {
  return induced_subgraph(g, std::vector<node_t>(keep.begin(), keep.end()));
}

/// Induced subgraph on the neighbors of i; i itself is excluded.
inline Graph neighbor_subnetwork(const Graph& g, node_t i) { return induced_subgraph(g, g.neighbors(i)); }

/// Connected components, each sorted, ordered by smallest label.
inline std::vector<std::vector<node_t>> connected_components(const Graph& g) {
  std::vector<std::vector<node_t>> comps;
  std::set<node_t> seen;
  for (const auto& [start, _] : g.adjacency()) {
    if (seen.count(start)) continue;
    std::vector<node_t> comp;
    std::queue<node_t> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      node_t v = q.front();
      q.pop();
      comp.push_back(v);
      for (node_t w : g.neighbors(v))
        if (seen.insert(w).second) q.push(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// True if every neighbor of v stays reachable from the others once v is
/// removed, i.e. deleting v does not split its component.
inline bool is_non_separating(const Graph& g, node_t v) {
  const auto& nbrs = g.neighbors(v);
  if (nbrs.size() <= 1) return true;
  std::set<node_t> seen{v, nbrs.front()};
  std::queue<node_t> q;
  q.push(nbrs.front());
  std::size_t found = 1;
  while (!q.empty() && found < nbrs.size()) {
    node_t x = q.front();
    q.pop();
    for (node_t w : g.neighbors(x)) {
      if (!seen.insert(w).second) continue;
      if (std::binary_search(nbrs.begin(), nbrs.end(), w)) ++found;
      q.push(w);
    }
  }
  return found == nbrs.size();
}

/// True if u and v stay connected after removing the edge {u, v}.
inline bool edge_on_cycle(const Graph& g, node_t u, node_t v) {
  std::set<node_t> seen{u};
  std::queue<node_t> q;
  q.push(u);
  while (!q.empty()) {
    node_t x = q.front();
    q.pop();
    for (node_t w : g.neighbors(x)) {
      if (x == u && w == v) continue;
      if (w == v) return true;
      if (seen.insert(w).second) q.push(w);
    }
  }
  return false;
}

}  // namespace hkcore

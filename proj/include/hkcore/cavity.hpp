#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "neighborhood.hpp"

namespace hkcore {

struct Cavity {
  enum class Kind { minimal, suspension, cycle };

  int order = 0;
  std::vector<node_t> nodes;  // ascending
  Kind kind = Kind::cycle;
  /// minimal: the k+1 antipodal pairs; suspension: the single apex pair.
  std::vector<std::pair<node_t, node_t>> pairs;
  /// suspension: exactly one inner cavity of order - 1.
  std::vector<Cavity> inner;
  /// cycle: nodes in cycle order starting from the smallest label.
  std::vector<node_t> cycle;

  friend bool operator==(const Cavity&, const Cavity&) = default;
};

inline const char* to_string(Cavity::Kind k) {
  switch (k) {
    case Cavity::Kind::minimal: return "minimal";
    case Cavity::Kind::suspension: return "suspension";
    case Cavity::Kind::cycle: return "cycle";
  }
  return "cycle";
}

struct CavityCheck {
  long long betti_k = 0;
  bool accepted = false;
};

/// beta_k of the flag complex induced on `nodes`; accepted iff beta_k >= 1.
inline CavityCheck verify_cavity(const Graph& core, const std::vector<node_t>& nodes, int k) {
  if (k < 1) throw DomainError("cavity order must be at least 1");
  CavityCheck out;
  out.betti_k = betti_numbers(induced_subgraph(core, nodes), k)[static_cast<std::size_t>(k)];
  out.accepted = out.betti_k >= 1;
  return out;
}

namespace detail {

inline std::vector<node_t> common_neighbors(const Graph& g, const std::vector<node_t>& set) {
  if (set.empty()) return {};
  std::vector<node_t> acc = g.neighbors(set.front()), tmp;
  for (std::size_t i = 1; i < set.size() && !acc.empty(); ++i) {
    const auto& n = g.neighbors(set[i]);
    tmp.clear();
    std::set_intersection(acc.begin(), acc.end(), n.begin(), n.end(), std::back_inserter(tmp));
    acc.swap(tmp);
  }
  return acc;
}

/// Antipodal pairs if the induced graph on `nodes` is complete minus a
/// perfect matching, otherwise empty.
inline std::vector<std::pair<node_t, node_t>> antipodal_pairs(const Graph& g, const std::vector<node_t>& nodes) {
  std::vector<std::pair<node_t, node_t>> pairs;
  for (node_t a : nodes) {
    std::vector<node_t> missing;
    for (node_t b : nodes)
      if (b != a && !g.has_edge(a, b)) missing.push_back(b);
    if (missing.size() != 1) return {};
    if (a < missing[0]) pairs.emplace_back(a, missing[0]);
  }
  if (pairs.size() * 2 != nodes.size()) return {};
  return pairs;
}

inline std::vector<node_t> sorted_union(std::vector<node_t> a, std::initializer_list<node_t> extra) {
  a.insert(a.end(), extra);
  std::sort(a.begin(), a.end());
  return a;
}

/// Node order used for cavity probing: degree ascending, then label.
inline std::vector<node_t> probe_order(const Graph& g) {
  auto nodes = g.nodes();
  std::stable_sort(nodes.begin(), nodes.end(), [&](node_t a, node_t b) { return g.degree(a) < g.degree(b); });
  return nodes;
}

/// Runs `fn` on every item in parallel and concatenates the per-item results
/// in item order.
template <typename Fn>
std::vector<Cavity> ordered_map(const std::vector<node_t>& items, unsigned threads, Fn&& fn) {
  std::vector<std::vector<Cavity>> slots(items.size());
  parallel_for(items.size(), threads, [&](std::size_t j) { slots[j] = fn(items[j]); });
  std::vector<Cavity> out;
  for (auto& s : slots)
    for (auto& c : s) out.push_back(std::move(c));
  return out;
}

inline std::vector<Cavity> dedupe(std::vector<Cavity> in) {
  std::set<std::vector<node_t>> seen;
  std::vector<Cavity> out;
  for (auto& c : in)
    if (seen.insert(c.nodes).second) out.push_back(std::move(c));
  return out;
}

}  // namespace detail

/// Shortest chordless cycle of length >= 4 through each edge: BFS from one
/// endpoint to the other, skipping the edge itself and the common neighbors
/// of its endpoints (no such cycle can pass through one). Deduplicated by
/// node set, sorted by (length, node set).
inline std::vector<Cavity> shortest_cycles(const Graph& g) {
  std::vector<Cavity> out;
  std::set<std::vector<node_t>> seen;
  for (const auto& [u, v] : g.edges()) {
    std::map<node_t, node_t> parent{{u, u}};
    for (node_t w : detail::common_neighbors(g, {u, v})) parent.emplace(w, w);
    std::deque<node_t> queue{u};
    bool found = false;
    while (!queue.empty() && !found) {
      const node_t x = queue.front();
      queue.pop_front();
      for (node_t y : g.neighbors(x)) {
        if (x == u && y == v) continue;
        if (parent.count(y)) continue;
        parent[y] = x;
        if (y == v) {
          found = true;
          break;
        }
        queue.push_back(y);
      }
    }
    if (!found) continue;
    std::vector<node_t> cyc;
    for (node_t x = v; x != u; x = parent[x]) cyc.push_back(x);
    cyc.push_back(u);
    if (cyc.size() < 4) continue;
    std::vector<node_t> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    bool chordless = true;
    for (std::size_t a = 0; a < cyc.size() && chordless; ++a)
      for (std::size_t b = a + 2; b < cyc.size() && chordless; ++b)
        if (!(a == 0 && b + 1 == cyc.size()) && g.has_edge(cyc[a], cyc[b])) chordless = false;
    if (!chordless || !seen.insert(sorted).second) continue;
    auto start = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), start, cyc.end());
    if (cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
    Cavity c;
    c.order = 1;
    c.nodes = std::move(sorted);
    c.kind = Cavity::Kind::cycle;
    c.cycle = std::move(cyc);
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Cavity& a, const Cavity& b) {
    return a.nodes.size() != b.nodes.size() ? a.nodes.size() < b.nodes.size() : a.nodes < b.nodes;
  });
  return out;
}

/// Cross-polytope boundaries found from nodes of degree exactly 2k: the
/// node's neighborhood plus one non-adjacent partner sharing all of it.
inline std::vector<Cavity> minimal_cavity_probe(const Graph& core, int k, unsigned threads = 1) {
  if (k < 1) throw DomainError("cavity order must be at least 1");
  const auto want = static_cast<std::size_t>(2 * k);
  std::vector<node_t> seeds;
  for (node_t i : detail::probe_order(core))
    if (core.degree(i) == want) seeds.push_back(i);
  auto found = detail::ordered_map(seeds, threads, [&](node_t i) {
    std::vector<Cavity> out;
    const auto& s = core.neighbors(i);
    for (node_t j : detail::common_neighbors(core, s)) {
      if (j == i || core.has_edge(i, j)) continue;
      auto nodes = detail::sorted_union(s, {i, j});
      auto pairs = detail::antipodal_pairs(core, nodes);
      if (pairs.empty() || !verify_cavity(core, nodes, k).accepted) continue;
      Cavity c;
      c.order = k;
      c.nodes = std::move(nodes);
      c.kind = Cavity::Kind::minimal;
      c.pairs = std::move(pairs);
      out.push_back(std::move(c));
    }
    return out;
  });
  return detail::dedupe(std::move(found));
}

namespace detail {

/// k-simplices (as sorted label lists) whose sum is the fundamental class of
/// a cavity.
inline std::vector<std::vector<node_t>> cavity_chain(const Cavity& c) {
  std::vector<std::vector<node_t>> out;
  switch (c.kind) {
    case Cavity::Kind::cycle:
      for (std::size_t a = 0; a < c.cycle.size(); ++a) {
        node_t x = c.cycle[a], y = c.cycle[(a + 1) % c.cycle.size()];
        out.push_back({std::min(x, y), std::max(x, y)});
      }
      break;
    case Cavity::Kind::minimal: {
      const std::size_t n = c.pairs.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<node_t> s;
        for (std::size_t p = 0; p < n; ++p) s.push_back((mask >> p) & 1 ? c.pairs[p].second : c.pairs[p].first);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
      break;
    }
    case Cavity::Kind::suspension:
      for (const auto& base : cavity_chain(c.inner.front()))
        for (node_t apex : {c.pairs.front().first, c.pairs.front().second}) {
          auto s = base;
          s.push_back(apex);
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
        }
      break;
  }
  return out;
}

/// Keeps cavities whose classes are independent in `g`, in input order.
inline std::vector<Cavity> independent_cavities(const Graph& g, std::vector<Cavity> in, int k) {
  if (in.empty()) return in;
  const auto complex = build_flag_complex(g, k + 1);
  CycleClassFilter filter(complex, k);
  std::vector<Cavity> out;
  for (auto& c : in) {
    SparseColumn chain;
    bool ok = true;
    for (const auto& s : cavity_chain(c)) {
      auto idx = complex.find_labels(s);
      if (!idx) {
        ok = false;
        break;
      }
      chain.push_back(static_cast<std::uint32_t>(*idx));
    }
    if (ok && filter.accept(std::move(chain))) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

/// Iterated suspensions: for each node j whose subnetwork carries
/// beta_{k-1}, finds independent (k-1)-cavities of the subnetwork recursively
/// (chordless cycles at order 1) and cones each one off with j and with every
/// other node adjacent to all of it.
inline std::vector<Cavity> suspension_cavity_search(const Graph& core, int k, unsigned threads = 1) {
  if (k < 2) throw DomainError("suspension search needs order >= 2");
  const auto below = static_cast<std::size_t>(k - 1);
  auto found = detail::ordered_map(detail::probe_order(core), threads, [&](node_t j) {
    std::vector<Cavity> out;
    const Graph sub = neighbor_subnetwork(core, j);
    if (sub.empty() || betti_numbers(sub, k - 1)[below] == 0) return out;
    auto inner = k - 1 == 1 ? shortest_cycles(sub) : suspension_cavity_search(sub, k - 1);
    inner = detail::independent_cavities(sub, std::move(inner), k - 1);
    for (const auto& c : inner) {
      for (node_t i : detail::common_neighbors(core, c.nodes)) {
        if (i == j || std::binary_search(c.nodes.begin(), c.nodes.end(), i)) continue;
        auto nodes = detail::sorted_union(c.nodes, {i, j});
        if (!verify_cavity(core, nodes, k).accepted) continue;
        Cavity s;
        s.order = k;
        s.nodes = std::move(nodes);
        s.kind = Cavity::Kind::suspension;
        s.pairs = {{std::min(i, j), std::max(i, j)}};
        s.inner = {c};
        out.push_back(std::move(s));
      }
    }
    return out;
  });
  return detail::dedupe(std::move(found));
}

struct CavityReport {
  int order = 0;
  long long betti_k = 0;
  std::vector<Cavity> cavities;
  std::vector<std::string> warnings;
};

/// Highest-order cavity search on a core: order 1 uses shortest cycles;
/// higher orders run the minimal probe, then the suspension search (smaller
/// sets first). Candidates are kept while their classes stay independent,
/// and the count is reconciled against beta_k.
inline CavityReport find_cavities(const Graph& core, int k, unsigned threads = 1) {
  if (k < 1) throw DomainError("cavity order must be at least 1");
  CavityReport r;
  r.order = k;
  r.betti_k = betti_numbers(core, k)[static_cast<std::size_t>(k)];
  std::vector<Cavity> cands;
  if (k == 1) {
    cands = shortest_cycles(core);
  } else {
    cands = minimal_cavity_probe(core, k, threads);
    auto more = suspension_cavity_search(core, k, threads);
    std::stable_sort(more.begin(), more.end(),
                     [](const Cavity& a, const Cavity& b) { return a.nodes.size() < b.nodes.size(); });
    cands.insert(cands.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    cands = detail::dedupe(std::move(cands));
  }
  r.cavities = detail::independent_cavities(core, std::move(cands), k);
  if (static_cast<long long>(r.cavities.size()) != r.betti_k)
    r.warnings.push_back("found " + std::to_string(r.cavities.size()) + " independent order-" + std::to_string(k) +
                         " cavities but beta_" + std::to_string(k) + " = " + std::to_string(r.betti_k));
  return r;
}

/// Layers of a cavity from the outside in: apex pairs of each suspension,
/// then the antipodal pairs of a minimal core or the base cycle in order.
inline std::vector<std::vector<node_t>> nesting(const Cavity& c) {
  std::vector<std::vector<node_t>> out;
  const Cavity* cur = &c;
  while (cur->kind == Cavity::Kind::suspension) {
    out.push_back({cur->pairs.front().first, cur->pairs.front().second});
    cur = &cur->inner.front();
  }
  if (cur->kind == Cavity::Kind::cycle) out.push_back(cur->cycle);
  else
    for (const auto& [a, b] : cur->pairs) out.push_back({a, b});
  return out;
}

}  // namespace hkcore

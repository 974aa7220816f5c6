#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "homology.hpp"
#include "parallel.hpp"

namespace hkcore {

/// Index of a node computed from its neighbor subnetwork: neighbor count,
/// Betti numbers up to the cutoff, characteristic number 1 - chi(subnetwork),
/// and whether the subnetwork has a central (degree n-1) or isolated member.
struct NodeIndex {
  node_t node = 0;
  std::size_t n = 0;
  std::vector<long long> betti;
  long long chi_i = 1;
  bool has_central = false;
  bool has_isolated = false;
  /// Strict mode only: the untruncated profile has a nonzero Betti number
  /// above the cutoff.
  bool hidden_betti = false;

  long long betti_at(std::size_t k) const { return k < betti.size() ? betti[k] : 0; }

  friend bool operator==(const NodeIndex&, const NodeIndex&) = default;
};

enum class DeletionClass { trivial, branchy, edge_candidate, cycle, keep };

inline const char* to_string(DeletionClass c) {
  switch (c) {
    case DeletionClass::trivial: return "trivial";
    case DeletionClass::branchy: return "branchy";
    case DeletionClass::edge_candidate: return "edge_candidate";
    case DeletionClass::cycle: return "cycle";
    case DeletionClass::keep: return "keep";
  }
  return "keep";
}

struct IndexOptions {
  /// Compute the full subnetwork profile, flag truncation losses, and
  /// cross-check the central-node shortcut.
  bool strict = false;
};

namespace detail {

inline void subnetwork_flags(const Graph& sub, NodeIndex& idx) {
  for (const auto& [v, nbrs] : sub.adjacency()) {
    if (nbrs.size() + 1 == sub.node_count()) idx.has_central = true;
    if (nbrs.empty()) idx.has_isolated = true;
  }
}

inline std::vector<long long> unit_betti(int k_cut) {
  std::vector<long long> b(static_cast<std::size_t>(k_cut + 1), 0);
  b[0] = 1;
  return b;
}

}  // namespace detail

inline NodeIndex node_index(const Graph& g, node_t i, int k_cut, const IndexOptions& opts = {}) {
  if (k_cut < 1) throw DomainError("betti cutoff must be at least 1");
  NodeIndex idx;
  idx.node = i;
  const Graph sub = neighbor_subnetwork(g, i);
  idx.n = sub.node_count();
  if (idx.n == 0) return idx;
  detail::subnetwork_flags(sub, idx);

  if (!opts.strict) {
    if (idx.has_central) {
      // a cone is contractible
      idx.betti = detail::unit_betti(k_cut);
      idx.chi_i = 0;
    } else {
      idx.betti = betti_numbers(sub, k_cut);
      idx.chi_i = 1 - alternating_sum(count_cliques(sub));
    }
    return idx;
  }

  const auto full = triplet_profile(sub);
  idx.betti.assign(static_cast<std::size_t>(k_cut + 1), 0);
  for (std::size_t k = 0; k < full.betti.size(); ++k) {
    if (k < idx.betti.size()) idx.betti[k] = full.betti[k];
    else if (full.betti[k] != 0) idx.hidden_betti = true;
  }
  idx.chi_i = 1 - full.chi;
  if (idx.has_central && (idx.betti != detail::unit_betti(k_cut) || idx.hidden_betti || idx.chi_i != 0)) {
    throw DiagnosticError(DiagnosticError::Kind::proposition_violation,
                          "node " + std::to_string(i) + " has a central neighbor but a non-trivial subnetwork",
                          idx.betti);
  }
  return idx;
}

/// Indices for every node. Each node is computed independently; the result
/// does not depend on the thread count.
inline std::map<node_t, NodeIndex> index_all(const Graph& g, int k_cut, const IndexOptions& opts = {},
                                             unsigned threads = 1) {
  const auto nodes = g.nodes();
  std::vector<NodeIndex> slots(nodes.size());
  parallel_for(nodes.size(), threads, [&](std::size_t j) { slots[j] = node_index(g, nodes[j], k_cut, opts); });
  std::map<node_t, NodeIndex> out;
  for (auto& idx : slots) out.emplace(idx.node, std::move(idx));
  return out;
}

/// Deletion class of a node at a given peel level.
///   level 1: trivial (1,0,..,0) or keep
///   level 2: branchy (b0>1, b1=0) / edge candidate (b0>1, b1>0), higher zero
///   level 3: cycle (b0 <= b1, b2.. = 0)
///   level >= 4: cycle unless some b_j > 0 with j >= level - 1
/// Nodes with an empty neighborhood, or with Betti numbers hidden by the
/// cutoff, are always kept.
inline DeletionClass classify(const NodeIndex& idx, int level) {
  if (level < 1) throw DomainError("peel level must be at least 1");
  if (idx.n == 0 || idx.betti.empty() || idx.hidden_betti) return DeletionClass::keep;
  auto zero_from = [&](std::size_t from) {
    for (std::size_t k = from; k < idx.betti.size(); ++k)
      if (idx.betti[k] != 0) return false;
    return true;
  };
  const long long b0 = idx.betti[0];
  const long long b1 = idx.betti_at(1);
  if (b0 == 1 && zero_from(1)) return DeletionClass::trivial;
  switch (level) {
    case 1:
      return DeletionClass::keep;
    case 2:
      if (b0 > 1 && zero_from(2)) return b1 == 0 ? DeletionClass::branchy : DeletionClass::edge_candidate;
      return DeletionClass::keep;
    case 3:
      return (zero_from(2) && b0 <= b1) ? DeletionClass::cycle : DeletionClass::keep;
    default:
      return zero_from(static_cast<std::size_t>(level - 1)) ? DeletionClass::cycle : DeletionClass::keep;
  }
}

/// Connected component of a neighbor subnetwork with its own Betti numbers.
struct Branch {
  std::vector<node_t> nodes;
  std::vector<long long> betti;
};

/// Branches of the neighbor subnetwork of i, ordered by smallest label.
inline std::vector<Branch> neighbor_branches(const Graph& g, node_t i, int k_cut) {
  const Graph sub = neighbor_subnetwork(g, i);
  std::vector<Branch> out;
  for (auto& comp : connected_components(sub)) {
    Branch b;
    b.betti = betti_numbers(induced_subgraph(sub, comp), k_cut);
    b.nodes = std::move(comp);
    out.push_back(std::move(b));
  }
  return out;
}

/// Compact rendering used in deletion logs, e.g. {3,dmax=2,(1,0,0),0}.
inline std::string format_index(const NodeIndex& idx) {
  std::ostringstream s;
  s << '{' << idx.n;
  if (idx.has_central) s << ",dmax=" << (idx.n - 1);
  if (idx.has_isolated) s << ",dmin=0";
  s << ",(";
  for (std::size_t k = 0; k < idx.betti.size(); ++k) s << (k ? "," : "") << idx.betti[k];
  s << ")," << idx.chi_i << '}';
  return s.str();
}

}  // namespace hkcore

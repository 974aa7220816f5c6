#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "neighborhood.hpp"

namespace hkcore {

struct DecomposeOptions {
  /// Recompute the global profile after every deletion and check the Betti
  /// bookkeeping of each node deletion; indices use untruncated profiles.
  bool strict = false;
  unsigned threads = 1;
  /// Betti cutoff for node indices. Defaults to the largest nonzero Betti
  /// index of the input network (at least 1).
  std::optional<int> k_cut;
};

struct DeletionLogEntry {
  enum class Action { node, edge };

  int step = 0;
  Action action = Action::node;
  node_t u = 0;
  node_t v = 0;  // second endpoint for edge deletions
  NodeIndex index_before;
  std::optional<std::vector<long long>> global_betti_after;

  friend bool operator==(const DeletionLogEntry&, const DeletionLogEntry&) = default;
};

/// "DEL NODE 4 step=1 idx={3,dmax=2,(1,0,0),0}" or "DEL EDGE 16 23 step=2".
inline std::string format_log_line(const DeletionLogEntry& e) {
  std::ostringstream s;
  if (e.action == DeletionLogEntry::Action::node) s << "DEL NODE " << e.u;
  else s << "DEL EDGE " << e.u << ' ' << e.v;
  s << " step=" << e.step << " idx=" << format_index(e.index_before);
  if (e.global_betti_after) {
    s << " betti=(";
    for (std::size_t k = 0; k < e.global_betti_after->size(); ++k) s << (k ? "," : "") << (*e.global_betti_after)[k];
    s << ')';
  }
  return s.str();
}

struct CoreLevel {
  int level = 0;
  Graph graph;
  TripletProfile profile;
};

struct CoreResult {
  std::vector<CoreLevel> cores;
  /// logs[j] holds the deletions that turned H_{j-1} into H_j; logs[0] is empty.
  std::vector<std::vector<DeletionLogEntry>> logs;
  /// Highest core level containing each node of the input.
  std::map<node_t, int> rank;
  int k_cut = 1;
  std::vector<std::string> warnings;
};

namespace detail {

inline long long betti_get(const std::vector<long long>& b, std::size_t k) { return k < b.size() ? b[k] : 0; }

inline bool betti_equal(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k)
    if (betti_get(a, k) != betti_get(b, k)) return false;
  return true;
}

inline bool betti_equal_except(const std::vector<long long>& a, const std::vector<long long>& b, std::size_t skip) {
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k)
    if (k != skip && betti_get(a, k) != betti_get(b, k)) return false;
  return true;
}

inline std::string betti_string(const std::vector<long long>& b) {
  std::string s = "(";
  for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
  return s + ")";
}

using EdgeAcceptance = std::function<bool(const std::vector<long long>& before, const std::vector<long long>& after)>;

/// Mutable peeling state: one core graph, its node indices, and the running
/// deletion log. Single writer; index refreshes fan out over threads.
class Peeler {
 public:
  Peeler(Graph g, int k_cut, const DecomposeOptions& opts)
      : g_(std::move(g)), k_cut_(k_cut), opts_(opts) {
    for (const auto& [v, nbrs] : g_.adjacency()) base_degree_.emplace(v, nbrs.size());
    idx_ = index_all(g_, k_cut_, index_options(), opts_.threads);
    for (const auto& [v, idx] : idx_) note_hidden(idx);
  }

  const Graph& graph() const { return g_; }
  int k_cut() const { return k_cut_; }
  const NodeIndex& index(node_t v) const { return idx_.at(v); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  void begin_step(int step, std::vector<DeletionLogEntry>* log) {
    step_ = step;
    log_ = log;
  }

  const std::vector<long long>& global_betti() {
    if (!betti_) betti_ = triplet_profile(g_, opts_.threads).betti;
    return *betti_;
  }

  /// Peel order: current degree ascending, then degree in the input graph
  /// descending, then label descending.
  std::vector<node_t> ordered_nodes() const {
    auto nodes = g_.nodes();
    std::sort(nodes.begin(), nodes.end(), [&](node_t a, node_t b) {
      const auto da = g_.degree(a), db = g_.degree(b);
      if (da != db) return da < db;
      const auto oa = base_degree_.at(a), ob = base_degree_.at(b);
      return oa != ob ? oa > ob : a > b;
    });
    return nodes;
  }

  /// Deletes trivial nodes one at a time until none is left. With
  /// `central_first`, nodes whose subnetwork has a central member go first.
  void purge_trivial(bool central_first = false) {
    if (central_first) {
      while (auto v = first_node([&](const NodeIndex& i) {
               return i.has_central && classify(i, 1) == DeletionClass::trivial;
             }))
        delete_node(*v, DeletionClass::trivial);
    }
    while (auto v = first_node([](const NodeIndex& i) { return classify(i, 1) == DeletionClass::trivial; }))
      delete_node(*v, DeletionClass::trivial);
  }

  /// Level 2: branchy nodes (interleaved with trivial purges), then edge
  /// deletions until the global beta_1 vanishes.
  void peel_level2() {
    for (;;) {
      purge_trivial();
      auto v = first_node([&](const NodeIndex& i) {
        return classify(i, 2) == DeletionClass::branchy && is_non_separating(g_, i.node);
      });
      if (!v) break;
      delete_node(*v, DeletionClass::branchy);
    }
    reduce_by_edges(2);
    require_zero_below(2);
  }

  /// Level j >= 3: cycle-class node deletions, then edge deletions until
  /// beta_{j-1} vanishes. Every cycle-class deletion is checked against the
  /// global profile and undone if it disturbs anything but beta_{j-1}.
  void peel_level(int level) {
    std::set<node_t> rejected;
    for (;;) {
      purge_trivial();
      auto v = first_node([&](const NodeIndex& i) {
        return !rejected.count(i.node) && classify(i, level) == DeletionClass::cycle &&
               is_non_separating(g_, i.node);
      });
      if (!v) break;
      const auto before = global_betti();
      Graph trial = g_;
      trial.remove_node(*v);
      const auto after = triplet_profile(trial, opts_.threads).betti;
      if (level_step_ok(before, after, level)) {
        auto touched = g_.neighbors(*v);
        delete_node(*v, DeletionClass::cycle, after);
        for (node_t w : touched) rejected.erase(w);
      } else {
        rejected.insert(*v);
      }
    }
    reduce_by_edges(level);
    require_zero_below(level);
  }

  /// Deletes edges from nodes whose subnetwork carries beta_k toward the
  /// carrying branch until every beta_j with j > k is zero. Candidates go by
  /// (degree, label) ascending; nodes of `higher_core` that also touch the
  /// rest of the core are tried first.
  void detach_above(int k, const Graph& higher_core) {
    const auto limit = g_.node_count() + g_.edge_count() + 1;
    for (std::size_t guard = 0; guard < limit; ++guard) {
      const auto before = global_betti();
      if (above_sum(before, k) == 0) return;
      std::vector<edge_t> cands;
      auto carries = [&](const NodeIndex& i) { return i.betti_at(static_cast<std::size_t>(k)) > 0; };
      std::vector<node_t> boundary, inner;
      auto order = g_.nodes();
      std::stable_sort(order.begin(), order.end(), [&](node_t a, node_t b) { return g_.degree(a) < g_.degree(b); });
      for (node_t v : order) {
        if (!carries(idx_.at(v))) continue;
        bool on_boundary = higher_core.has_node(v) &&
                           std::any_of(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                                       [&](node_t w) { return !higher_core.has_node(w); });
        (on_boundary ? boundary : inner).push_back(v);
      }
      boundary.insert(boundary.end(), inner.begin(), inner.end());
      for (node_t v : boundary) {
        const Graph sub = neighbor_subnetwork(g_, v);
        for (const auto& br : neighbor_branches(g_, v, k_cut_)) {
          if (betti_get(br.betti, static_cast<std::size_t>(k)) == 0) continue;
          auto ends = branch_endpoints(sub, br.nodes);
          std::stable_partition(ends.begin(), ends.end(), [&](node_t x) { return higher_core.has_node(x); });
          for (node_t x : ends) cands.emplace_back(v, x);
        }
      }
      const auto accept = [k](const std::vector<long long>& b, const std::vector<long long>& a) {
        for (std::size_t j = 0; j <= static_cast<std::size_t>(k); ++j)
          if (betti_get(a, j) != betti_get(b, j)) return false;
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j < std::max(a.size(), b.size()); ++j)
          if (betti_get(a, j) > betti_get(b, j)) return false;
        return above_sum(a, k) < above_sum(b, k);
      };
      bool done = false;
      for (const auto& [u, x] : cands)
        if ((done = try_edge(u, x, accept))) break;
      if (!done)
        throw DiagnosticError(DiagnosticError::Kind::stuck_phase,
                              "shell extraction cannot detach Betti numbers above " + std::to_string(k) +
                                  "; residual betti " + betti_string(before),
                              before);
      purge_trivial();
    }
  }

 private:
  IndexOptions index_options() const { return IndexOptions{opts_.strict}; }

  void note_hidden(const NodeIndex& idx) {
    if (idx.hidden_betti)
      warnings_.push_back("node " + std::to_string(idx.node) +
                          ": subnetwork has a nonzero Betti number above the cutoff " + std::to_string(k_cut_));
  }

  template <typename Pred>
  std::optional<node_t> first_node(Pred pred) const {
    for (node_t v : ordered_nodes())
      if (pred(idx_.at(v))) return v;
    return std::nullopt;
  }

  void reindex(std::vector<node_t> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    nodes.erase(std::remove_if(nodes.begin(), nodes.end(), [&](node_t v) { return !g_.has_node(v); }), nodes.end());
    std::vector<NodeIndex> fresh(nodes.size());
    parallel_for(nodes.size(), opts_.threads,
                 [&](std::size_t j) { fresh[j] = node_index(g_, nodes[j], k_cut_, index_options()); });
    for (auto& idx : fresh) {
      note_hidden(idx);
      idx_[idx.node] = std::move(idx);
    }
  }

  void delete_node(node_t v, DeletionClass cls, std::optional<std::vector<long long>> known_after = {}) {
    const std::optional<std::vector<long long>> before =
        opts_.strict ? std::optional(global_betti()) : std::nullopt;
    DeletionLogEntry entry;
    entry.step = step_;
    entry.action = DeletionLogEntry::Action::node;
    entry.u = v;
    entry.index_before = idx_.at(v);
    const auto former = g_.neighbors(v);
    g_.remove_node(v);
    idx_.erase(v);
    betti_ = std::move(known_after);
    reindex(former);
    if (opts_.strict) {
      const auto after = global_betti();
      check_node_bookkeeping(entry.index_before, cls, *before, after);
      entry.global_betti_after = after;
    }
    if (log_) log_->push_back(std::move(entry));
  }

  void commit_edge(node_t u, node_t v, std::optional<std::vector<long long>> known_after) {
    DeletionLogEntry entry;
    entry.step = step_;
    entry.action = DeletionLogEntry::Action::edge;
    entry.u = u;
    entry.v = v;
    entry.index_before = idx_.at(u);
    std::vector<node_t> touched{u, v};
    std::set_intersection(g_.neighbors(u).begin(), g_.neighbors(u).end(), g_.neighbors(v).begin(),
                          g_.neighbors(v).end(), std::back_inserter(touched));
    g_.remove_edge(u, v);
    betti_ = std::move(known_after);
    reindex(touched);
    if (opts_.strict) entry.global_betti_after = global_betti();
    if (log_) log_->push_back(std::move(entry));
  }

  /// Tentatively removes {u, x}; keeps the deletion if `accept` approves the
  /// Betti change.
  bool try_edge(node_t u, node_t x, const EdgeAcceptance& accept) {
    if (!g_.has_edge(u, x)) return false;
    const auto before = global_betti();
    Graph trial = g_;
    trial.remove_edge(u, x);
    auto after = triplet_profile(trial, opts_.threads).betti;
    if (!accept(before, after)) return false;
    commit_edge(u, x, std::move(after));
    return true;
  }

  /// An edge whose endpoints share no neighbor and which lies on a cycle
  /// lowers beta_1 by exactly one and touches nothing else.
  bool lowers_beta1_only(node_t u, node_t x) const {
    const auto& nu = g_.neighbors(u);
    const auto& nx = g_.neighbors(x);
    std::vector<node_t> common;
    std::set_intersection(nu.begin(), nu.end(), nx.begin(), nx.end(), std::back_inserter(common));
    return common.empty() && edge_on_cycle(g_, u, x);
  }

  /// Members of a branch ordered by (subnetwork degree ascending, label
  /// descending).
  static std::vector<node_t> branch_endpoints(const Graph& sub, std::vector<node_t> members) {
    std::sort(members.begin(), members.end(), [&](node_t a, node_t b) {
      const auto da = sub.degree(a), db = sub.degree(b);
      return da != db ? da < db : a > b;
    });
    return members;
  }

  /// Candidate edges at a level: for each qualifying node in peel order,
  /// branches free of beta_t first (smallest label first), then the rest.
  std::vector<edge_t> rule_edges(int level) {
    const auto t = static_cast<std::size_t>(level - 1);
    std::vector<edge_t> out;
    for (node_t v : ordered_nodes()) {
      const auto& idx = idx_.at(v);
      bool qualifies = false;
      if (level == 2) {
        qualifies = classify(idx, 2) == DeletionClass::edge_candidate;
      } else if (idx.n > 0 && !idx.hidden_betti && classify(idx, 1) != DeletionClass::trivial) {
        bool higher_zero = true;
        for (std::size_t k = static_cast<std::size_t>(level); k < idx.betti.size(); ++k)
          higher_zero = higher_zero && idx.betti[k] == 0;
        qualifies = higher_zero && (idx.betti_at(0) > 1 || idx.betti_at(t) > 0);
      }
      if (!qualifies) continue;
      const Graph sub = neighbor_subnetwork(g_, v);
      auto branches = neighbor_branches(g_, v, k_cut_);
      std::stable_partition(branches.begin(), branches.end(),
                            [&](const Branch& b) { return betti_get(b.betti, t) == 0; });
      for (const auto& br : branches)
        for (node_t x : branch_endpoints(sub, br.nodes)) out.emplace_back(v, x);
    }
    return out;
  }

  /// Edge-deletion phase for `level`: lowers beta_{level-1} to zero. Tries
  /// the rule-ordered candidates, then any edge, that lower it while leaving
  /// every other Betti number alone; failing that, a rule candidate that
  /// keeps the profile unchanged (shrinking a branch).
  void reduce_by_edges(int level) {
    const auto t = static_cast<std::size_t>(level - 1);
    const auto lowers = [t](const std::vector<long long>& b, const std::vector<long long>& a) {
      return betti_equal_except(a, b, t) && betti_get(a, t) < betti_get(b, t);
    };
    const auto keeps = [](const std::vector<long long>& b, const std::vector<long long>& a) {
      return betti_equal(a, b);
    };
    const auto limit = g_.node_count() + g_.edge_count() + 1;
    for (std::size_t guard = 0; guard < limit && betti_get(global_betti(), t) > 0; ++guard) {
      const auto before = global_betti();
      auto cands = rule_edges(level);
      bool done = false;
      for (const auto& [u, x] : cands) {
        if (t == 1 && !opts_.strict && g_.has_edge(u, x) && lowers_beta1_only(u, x)) {
          auto after = before;
          --after[1];
          commit_edge(u, x, std::move(after));
          done = true;
        } else {
          done = try_edge(u, x, lowers);
        }
        if (done) break;
      }
      if (!done) {
        std::set<edge_t> tried;
        for (auto [u, x] : cands) tried.insert({std::min(u, x), std::max(u, x)});
        for (const auto& e : g_.edges()) {
          if (tried.count(e)) continue;
          if ((done = try_edge(e.first, e.second, lowers))) break;
        }
      }
      if (!done)
        for (const auto& [u, x] : cands)
          if ((done = try_edge(u, x, keeps))) break;
      if (!done) {
        throw DiagnosticError(DiagnosticError::Kind::stuck_phase,
                              "level " + std::to_string(level) + " peel cannot reduce beta_" + std::to_string(t) +
                                  " to zero; residual betti " + betti_string(before),
                              before);
      }
      purge_trivial();
    }
    if (betti_get(global_betti(), t) > 0)
      throw DiagnosticError(DiagnosticError::Kind::stuck_phase,
                            "level " + std::to_string(level) + " peel exceeded its deletion budget",
                            global_betti());
  }

  bool level_step_ok(const std::vector<long long>& before, const std::vector<long long>& after, int level) const {
    const auto t = static_cast<std::size_t>(level - 1);
    if (betti_get(after, 0) != betti_get(before, 0)) return false;
    for (std::size_t k = 1; k < t; ++k)
      if (betti_get(after, k) != 0) return false;
    if (betti_get(after, t) > betti_get(before, t)) return false;
    for (std::size_t k = t + 1; k < std::max(after.size(), before.size()); ++k)
      if (betti_get(after, k) != betti_get(before, k)) return false;
    return true;
  }

  void require_zero_below(int level) {
    const auto& b = global_betti();
    for (std::size_t k = 1; k < static_cast<std::size_t>(level); ++k)
      if (betti_get(b, k) != 0)
        throw DiagnosticError(DiagnosticError::Kind::stuck_phase,
                              "level " + std::to_string(level) + " core still has beta_" + std::to_string(k) +
                                  " > 0; residual betti " + betti_string(b),
                              b);
  }

  /// Trivial deletions keep every Betti number; a branchy deletion with b
  /// subnetwork branches lowers beta_1 by b - 1 and keeps the rest.
  void check_node_bookkeeping(const NodeIndex& idx, DeletionClass cls, const std::vector<long long>& before,
                              const std::vector<long long>& after) const {
    std::vector<long long> expected = before;
    if (cls == DeletionClass::branchy) {
      if (expected.size() < 2) expected.resize(2, 0);
      expected[1] -= idx.betti_at(0) - 1;
    } else if (cls != DeletionClass::trivial) {
      return;
    }
    if (!betti_equal(expected, after))
      throw DiagnosticError(DiagnosticError::Kind::proposition_violation,
                            "deleting node " + std::to_string(idx.node) + " " + format_index(idx) +
                                " changed betti " + betti_string(before) + " -> " + betti_string(after) +
                                ", expected " + betti_string(expected),
                            after);
  }

  static long long above_sum(const std::vector<long long>& b, int k) {
    long long s = 0;
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < b.size(); ++j) s += b[j];
    return s;
  }

  Graph g_;
  int k_cut_;
  DecomposeOptions opts_;
  std::map<node_t, NodeIndex> idx_;
  std::map<node_t, std::size_t> base_degree_;
  std::optional<std::vector<long long>> betti_;
  int step_ = 0;
  std::vector<DeletionLogEntry>* log_ = nullptr;
  std::vector<std::string> warnings_;
};

inline int default_cutoff(const TripletProfile& p) { return std::max(1, p.top_betti()); }

}  // namespace detail

/// Level 1: deletes nodes whose subnetwork has Betti numbers (1,0,..,0),
/// central-member nodes first, in peel order.
inline std::pair<Graph, std::vector<DeletionLogEntry>> peel_trivial(const Graph& core, int k_cut,
                                                                    const DecomposeOptions& opts = {}) {
  std::vector<DeletionLogEntry> log;
  detail::Peeler p(core, k_cut, opts);
  p.begin_step(1, &log);
  p.purge_trivial(true);
  return {p.graph(), std::move(log)};
}

/// Level 2 on an H_1-core: branchy-node deletions, then edge deletions until
/// beta_1 = 0.
inline std::pair<Graph, std::vector<DeletionLogEntry>> peel_level2(const Graph& core, int k_cut,
                                                                   const DecomposeOptions& opts = {}) {
  std::vector<DeletionLogEntry> log;
  detail::Peeler p(core, k_cut, opts);
  p.begin_step(2, &log);
  p.peel_level2();
  return {p.graph(), std::move(log)};
}

/// Level j >= 3 on an H_{j-1}-core.
inline std::pair<Graph, std::vector<DeletionLogEntry>> peel_level_j(const Graph& core, int level, int k_cut,
                                                                    const DecomposeOptions& opts = {}) {
  if (level < 3) throw DomainError("peel_level_j needs level >= 3");
  std::vector<DeletionLogEntry> log;
  detail::Peeler p(core, k_cut, opts);
  p.begin_step(level, &log);
  p.peel_level(level);
  return {p.graph(), std::move(log)};
}

namespace detail {

inline bool is_subgraph(const Graph& small, const Graph& big) {
  for (const auto& [v, nbrs] : small.adjacency()) {
    if (!big.has_node(v)) return false;
    for (node_t w : nbrs)
      if (!big.has_edge(v, w)) return false;
  }
  return true;
}

inline void check_core(const CoreResult& r, int level) {
  const auto& h0 = r.cores.front().profile.betti;
  const auto& cur = r.cores.back();
  const auto& prev = r.cores[r.cores.size() - 2];
  auto fail = [&](const std::string& what) {
    throw DiagnosticError(DiagnosticError::Kind::invariant_violation,
                          "H_" + std::to_string(level) + "-core " + what + "; betti " +
                              betti_string(cur.profile.betti),
                          cur.profile.betti);
  };
  if (!is_subgraph(cur.graph, prev.graph)) fail("is not a subgraph of its predecessor");
  if (betti_get(cur.profile.betti, 0) != betti_get(h0, 0)) fail("changed the number of components");
  for (std::size_t k = 1; k < std::max(cur.profile.betti.size(), h0.size()); ++k) {
    const long long want = k < static_cast<std::size_t>(level) ? 0 : betti_get(h0, k);
    if (betti_get(cur.profile.betti, k) != want) fail("has unexpected beta_" + std::to_string(k));
  }
}

}  // namespace detail

/// H_k-core decomposition H_0 >= H_1 >= ... >= H_k. The requested depth is
/// capped at the largest nonzero Betti index of the input.
inline CoreResult decompose(const Graph& g, int k_target, const DecomposeOptions& opts = {}) {
  if (k_target < 1) throw DomainError("k_target must be at least 1");
  CoreResult r;
  auto p0 = triplet_profile(g, opts.threads);
  r.k_cut = opts.k_cut.value_or(detail::default_cutoff(p0));
  r.cores.push_back({0, g, p0});
  r.logs.emplace_back();
  const int levels = std::min(k_target, p0.top_betti());
  if (levels >= 1) {
    detail::Peeler peeler(g, r.k_cut, opts);
    for (int level = 1; level <= levels; ++level) {
      r.logs.emplace_back();
      peeler.begin_step(level, &r.logs.back());
      if (level == 1) peeler.purge_trivial(true);
      else if (level == 2) peeler.peel_level2();
      else peeler.peel_level(level);
      r.cores.push_back({level, peeler.graph(), triplet_profile(peeler.graph(), opts.threads)});
      detail::check_core(r, level);
    }
    r.warnings = peeler.warnings();
  }
  for (const auto& core : r.cores)
    for (node_t v : core.graph.nodes()) r.rank[v] = core.level;
  return r;
}

struct RetentionOutcome {
  bool accepted = false;
  Graph graph;
  std::vector<node_t> kept;
  TripletProfile before;
  TripletProfile after;
  /// Dimensions >= level whose Betti number differs after retention.
  std::vector<int> changed;
};

/// Keeps the nodes whose subnetwork has some beta_j > 0 with j >= level - 1
/// and compares the resulting profile against the input. A changed
/// beta_j (j >= level) rejects the shortcut.
inline RetentionOutcome retain_subnetwork(const Graph& core, int level, int k_cut, const DecomposeOptions& opts = {}) {
  if (level < 2) throw DomainError("retention needs level >= 2");
  RetentionOutcome out;
  const auto indices = index_all(core, k_cut, IndexOptions{opts.strict}, opts.threads);
  for (const auto& [v, idx] : indices) {
    bool keep = false;
    for (std::size_t k = static_cast<std::size_t>(level - 1); k < idx.betti.size(); ++k) keep = keep || idx.betti[k] > 0;
    if (keep) out.kept.push_back(v);
  }
  out.graph = induced_subgraph(core, out.kept);
  out.before = triplet_profile(core, opts.threads);
  out.after = triplet_profile(out.graph, opts.threads);
  const auto dims = std::max(out.before.betti.size(), out.after.betti.size());
  for (std::size_t k = static_cast<std::size_t>(level); k < dims; ++k)
    if (detail::betti_get(out.before.betti, k) != detail::betti_get(out.after.betti, k))
      out.changed.push_back(static_cast<int>(k));
  out.accepted = out.changed.empty();
  return out;
}

struct ShellResult {
  Graph graph;
  TripletProfile profile;
  std::vector<DeletionLogEntry> log;
};

/// H_k-shell: detaches the H_{k+1}-core from the H_k-core by deleting edges
/// from beta_k-carrying subnetworks toward the cavity, then peels the nodes
/// that became trivial.
inline ShellResult hk_shell(const Graph& core_k, const Graph& core_k1, int k, const DecomposeOptions& opts = {}) {
  if (k < 1) throw DomainError("shell order must be at least 1");
  ShellResult out;
  if (core_k == core_k1) return out;
  const auto p = triplet_profile(core_k, opts.threads);
  detail::Peeler peeler(core_k, opts.k_cut.value_or(detail::default_cutoff(p)), opts);
  peeler.begin_step(k, &out.log);
  peeler.detach_above(k, core_k1);
  out.graph = peeler.graph();
  out.profile = triplet_profile(out.graph, opts.threads);
  return out;
}

struct RankedNode {
  node_t node = 0;
  int level = 0;
  long long betti = 0;  // beta_{level-1} of the node's subnetwork within its highest core
};

/// Nodes by (highest core level desc, subnetwork beta_{level-1} desc, label asc).
inline std::vector<RankedNode> core_rank(const CoreResult& result) {
  std::vector<RankedNode> out;
  for (const auto& [v, level] : result.rank) {
    RankedNode rn{v, level, 0};
    if (level >= 1) {
      const auto idx = node_index(result.cores[static_cast<std::size_t>(level)].graph, v, result.k_cut);
      rn.betti = idx.betti_at(static_cast<std::size_t>(level - 1));
    }
    out.push_back(rn);
  }
  std::sort(out.begin(), out.end(), [](const RankedNode& a, const RankedNode& b) {
    if (a.level != b.level) return a.level > b.level;
    if (a.betti != b.betti) return a.betti > b.betti;
    return a.node < b.node;
  });
  return out;
}

}  // namespace hkcore

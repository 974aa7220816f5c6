#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "graph.hpp"
#include "parallel.hpp"

namespace hkcore {

inline constexpr int unbounded = std::numeric_limits<int>::max();

namespace detail {

/// Graph re-indexed 0..n-1 in ascending label order with bitset adjacency.
struct DenseGraph {
  std::vector<node_t> labels;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  const std::uint64_t* row(std::size_t v) const { return bits.data() + v * words; }
  bool adjacent(std::size_t u, std::size_t v) const { return (row(u)[v / 64] >> (v % 64)) & 1u; }
};

inline DenseGraph to_dense(const Graph& g) {
  DenseGraph d;
  d.labels = g.nodes();
  const std::size_t n = d.labels.size();
  d.words = (n + 63) / 64;
  d.bits.assign(n * d.words, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (node_t w : g.neighbors(d.labels[u])) {
      auto v = static_cast<std::size_t>(std::lower_bound(d.labels.begin(), d.labels.end(), w) - d.labels.begin());
      d.bits[u * d.words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  return d;
}

/// Depth-first clique expansion. Candidates are always higher-indexed than
/// the last clique vertex, so each dimension is produced in lexicographic
/// order. `emit(size, clique)` is called for every clique of size >= 2.
template <typename Emit>
void expand_cliques(const DenseGraph& d, std::vector<std::uint32_t>& clique, std::vector<std::uint64_t>& cand,
                    std::size_t max_size, bool& capped, Emit& emit) {
  std::vector<std::uint64_t> next(d.words);
  for (std::size_t w = 0; w < d.words; ++w) {
    std::uint64_t word = cand[w];
    while (word) {
      const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
      word &= word - 1;
      clique.push_back(static_cast<std::uint32_t>(v));
      emit(clique);
      // higher neighbors of v that are still candidates
      bool any = false;
      const std::uint64_t* nv = d.row(v);
      for (std::size_t x = 0; x < d.words; ++x) {
        std::uint64_t mask = x < v / 64 ? 0 : (x == v / 64 ? (v % 64 == 63 ? 0 : ~std::uint64_t{0} << (v % 64 + 1)) : ~std::uint64_t{0});
        next[x] = cand[x] & nv[x] & mask;
        any = any || next[x];
      }
      if (any) {
        if (clique.size() < max_size) {
          auto sub = next;
          expand_cliques(d, clique, sub, max_size, capped, emit);
        } else {
          capped = true;
        }
      }
      clique.pop_back();
    }
  }
}

inline std::vector<std::uint64_t> higher_neighbors(const DenseGraph& d, std::size_t v) {
  std::vector<std::uint64_t> cand(d.row(v), d.row(v) + d.words);
  for (std::size_t x = 0; x <= v / 64 && x < d.words; ++x) {
    if (x < v / 64) cand[x] = 0;
    else cand[x] &= (v % 64 == 63) ? 0 : (~std::uint64_t{0} << (v % 64 + 1));
  }
  return cand;
}

}  // namespace detail

/// Flag complex of a graph: simplices[k] holds every (k+1)-clique as a sorted
/// tuple of vertex indices, in lexicographic order. Vertex index i is the i-th
/// smallest node label.
class CliqueComplex {
 public:
  CliqueComplex() = default;

  const std::vector<node_t>& labels() const { return labels_; }

  /// Highest dimension with at least one simplex; -1 for the empty complex.
  int dims() const { return static_cast<int>(simplices_.size()) - 1; }

  std::size_t count(int k) const {
    return (k < 0 || k > dims()) ? 0 : simplices_[static_cast<std::size_t>(k)].size() / static_cast<std::size_t>(k + 1);
  }

  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (int k = 0; k <= dims(); ++k) out.push_back(count(k));
    return out;
  }

  std::span<const std::uint32_t> simplex(int k, std::size_t i) const {
    const auto stride = static_cast<std::size_t>(k + 1);
    return {simplices_[static_cast<std::size_t>(k)].data() + i * stride, stride};
  }

  std::vector<node_t> simplex_labels(int k, std::size_t i) const {
    std::vector<node_t> out;
    for (auto v : simplex(k, i)) out.push_back(labels_[v]);
    return out;
  }

  /// Index of the simplex with the given sorted vertex indices.
  std::optional<std::size_t> find(int k, std::span<const std::uint32_t> verts) const {
    std::size_t lo = 0, hi = count(k);
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto s = simplex(k, mid);
      if (std::lexicographical_compare(s.begin(), s.end(), verts.begin(), verts.end())) lo = mid + 1;
      else hi = mid;
    }
    if (lo < count(k)) {
      auto s = simplex(k, lo);
      if (std::equal(s.begin(), s.end(), verts.begin(), verts.end())) return lo;
    }
    return std::nullopt;
  }

  /// Same lookup by external labels (any order).
  std::optional<std::size_t> find_labels(std::vector<node_t> verts) const {
    std::sort(verts.begin(), verts.end());
    std::vector<std::uint32_t> idx;
    for (node_t v : verts) {
      auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
      if (it == labels_.end() || *it != v) return std::nullopt;
      idx.push_back(static_cast<std::uint32_t>(it - labels_.begin()));
    }
    if (idx.empty()) return std::nullopt;
    return find(static_cast<int>(idx.size()) - 1, idx);
  }

  /// True when a dimension cap cut off existing higher cliques.
  bool truncated() const { return truncated_; }

 private:
  friend CliqueComplex build_flag_complex(const Graph&, int, unsigned);

  std::vector<node_t> labels_;
  std::vector<std::vector<std::uint32_t>> simplices_;
  bool truncated_ = false;
};

/// Enumerates all cliques of g up to dimension max_dim (unbounded by default).
/// Root vertices are processed in parallel; the merge is in root order, so the
/// result is independent of the thread count.
inline CliqueComplex build_flag_complex(const Graph& g, int max_dim = unbounded, unsigned threads = 1) {
  if (max_dim < 0) throw DomainError("max_dim must be non-negative");
  CliqueComplex c;
  auto d = detail::to_dense(g);
  c.labels_ = d.labels;
  const std::size_t n = d.labels.size();
  if (n == 0) return c;

  const std::size_t max_size = max_dim == unbounded ? n : static_cast<std::size_t>(max_dim) + 1;
  std::vector<std::vector<std::vector<std::uint32_t>>> per_root(n);
  std::vector<char> capped_root(n, 0);
  parallel_for(n, threads, [&](std::size_t v) {
    auto& out = per_root[v];
    auto emit = [&](const std::vector<std::uint32_t>& clique) {
      const std::size_t k = clique.size() - 1;
      if (out.size() <= k) out.resize(k + 1);
      out[k].insert(out[k].end(), clique.begin(), clique.end());
    };
    std::vector<std::uint32_t> clique{static_cast<std::uint32_t>(v)};
    auto cand = detail::higher_neighbors(d, v);
    bool capped = false;
    if (max_size > 1) {
      detail::expand_cliques(d, clique, cand, max_size, capped, emit);
    } else {
      capped = std::any_of(cand.begin(), cand.end(), [](auto w) { return w != 0; });
    }
    capped_root[v] = capped;
  });

  std::size_t top = 0;
  for (const auto& r : per_root) top = std::max(top, r.size());
  c.simplices_.assign(std::max<std::size_t>(top, 1), {});
  for (std::size_t v = 0; v < n; ++v) c.simplices_[0].push_back(static_cast<std::uint32_t>(v));
  // Within each dimension, all cliques rooted at v precede those rooted at v+1.
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 1; k < per_root[v].size(); ++k)
      c.simplices_[k].insert(c.simplices_[k].end(), per_root[v][k].begin(), per_root[v][k].end());
  c.truncated_ = std::any_of(capped_root.begin(), capped_root.end(), [](char x) { return x != 0; });
  return c;
}

/// Clique counts per dimension without storing the simplices.
inline std::vector<std::size_t> count_cliques(const Graph& g) {
  auto d = detail::to_dense(g);
  const std::size_t n = d.labels.size();
  std::vector<std::size_t> counts;
  if (n == 0) return counts;
  counts.push_back(n);
  auto emit = [&](const std::vector<std::uint32_t>& clique) {
    const std::size_t k = clique.size() - 1;
    if (counts.size() <= k) counts.resize(k + 1, 0);
    ++counts[k];
  };
  bool capped = false;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::uint32_t> clique{static_cast<std::uint32_t>(v)};
    auto cand = detail::higher_neighbors(d, v);
    detail::expand_cliques(d, clique, cand, n, capped, emit);
  }
  return counts;
}

template <typename Counts>
long long alternating_sum(const Counts& m) {
  long long chi = 0;
  for (std::size_t k = 0; k < m.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(m[k]);
  return chi;
}

inline long long euler_characteristic(const CliqueComplex& c) { return alternating_sum(c.counts()); }

/// Every codimension-1 face of every listed simplex is listed.
inline bool is_downward_closed(const CliqueComplex& c) {
  std::vector<std::uint32_t> face;
  for (int k = 1; k <= c.dims(); ++k) {
    for (std::size_t i = 0; i < c.count(k); ++i) {
      auto s = c.simplex(k, i);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) face.push_back(s[j]);
        if (!c.find(k - 1, face)) return false;
      }
    }
  }
  return true;
}

/// One simplex per line, dimension-major, labels separated by spaces.
inline void write_simplices(const CliqueComplex& c, std::ostream& out) {
  for (int k = 0; k <= c.dims(); ++k) {
    for (std::size_t i = 0; i < c.count(k); ++i) {
      auto labels = c.simplex_labels(k, i);
      for (std::size_t j = 0; j < labels.size(); ++j) out << (j ? " " : "") << labels[j];
      out << '\n';
    }
  }
}

}  // namespace hkcore

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "complex.hpp"
#include "gf2.hpp"

namespace hkcore {

/// Per-dimension simplex counts m, boundary ranks r (r[0] = 0), Betti numbers
/// and Euler characteristic of a flag complex.
struct TripletProfile {
  std::vector<long long> m;
  std::vector<long long> r;
  std::vector<long long> betti;
  long long chi = 0;

  long long betti_at(std::size_t k) const { return k < betti.size() ? betti[k] : 0; }

  /// Largest k with betti[k] > 0, or -1 for the empty profile.
  int top_betti() const {
    for (int k = static_cast<int>(betti.size()) - 1; k >= 0; --k)
      if (betti[static_cast<std::size_t>(k)] > 0) return k;
    return -1;
  }

  friend bool operator==(const TripletProfile&, const TripletProfile&) = default;
};

/// Facet indices of simplex i in dimension k, ascending.
inline SparseColumn boundary_column(const CliqueComplex& c, int k, std::size_t i) {
  auto s = c.simplex(k, i);
  SparseColumn col;
  col.reserve(s.size());
  std::vector<std::uint32_t> face(s.size() - 1);
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != drop) face[w++] = s[j];
    auto idx = c.find(k - 1, face);
    if (!idx) throw DomainError("complex is not downward closed");
    col.push_back(static_cast<std::uint32_t>(*idx));
  }
  std::sort(col.begin(), col.end());
  return col;
}

/// B_k: rows are the (k-1)-simplices, columns the k-simplices, both in table
/// order; entry (t, s) is 1 when t is a facet of s.
inline Gf2Matrix boundary_matrix(const CliqueComplex& c, int k) {
  if (k < 1 || k > c.dims())
    throw DomainError("boundary dimension " + std::to_string(k) + " outside 1.." + std::to_string(c.dims()));
  Gf2Matrix b(c.count(k - 1), c.count(k));
  for (std::size_t j = 0; j < c.count(k); ++j)
    for (auto row : boundary_column(c, k, j)) b.set(row, j);
  return b;
}

/// Ranks r_0..r_top of all boundary matrices. Works top-down so that columns
/// already known to reduce to zero (pivots of the dimension above) are skipped.
inline std::vector<long long> boundary_ranks(const CliqueComplex& c) {
  const int top = c.dims();
  std::vector<long long> r(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  if (top < 1) return r;
  std::vector<char> cleared(c.count(top), 0);
  for (int k = top; k >= 1; --k) {
    std::vector<char> cleared_below(c.count(k - 1), 0);
    ColumnReducer reducer;
    for (std::size_t i = 0; i < c.count(k); ++i) {
      if (cleared[i]) continue;
      std::uint32_t pivot = 0;
      if (reducer.insert(boundary_column(c, k, i), &pivot)) cleared_below[pivot] = 1;
    }
    r[static_cast<std::size_t>(k)] = static_cast<long long>(reducer.rank());
    cleared.swap(cleared_below);
  }
  return r;
}

/// Profile of a complete (non-truncated) complex. If the complex was built
/// with a dimension cap that cut off cliques, the top Betti number is dropped
/// since its r_{k+1} is unknown.
inline TripletProfile triplet_profile(const CliqueComplex& c) {
  TripletProfile p;
  for (auto m : c.counts()) p.m.push_back(static_cast<long long>(m));
  p.r = boundary_ranks(c);
  const std::size_t top = p.m.size();
  for (std::size_t k = 0; k < top; ++k) {
    const long long next = k + 1 < top ? p.r[k + 1] : 0;
    p.betti.push_back(p.m[k] - p.r[k] - next);
  }
  if (c.truncated() && !p.betti.empty()) p.betti.pop_back();
  p.chi = alternating_sum(p.m);
  return p;
}

inline TripletProfile triplet_profile(const Graph& g, unsigned threads = 1) {
  return triplet_profile(build_flag_complex(g, unbounded, threads));
}

/// beta_0..beta_max_k of the flag complex of g, zero padded. Only cliques up
/// to dimension max_k + 1 are built.
inline std::vector<long long> betti_numbers(const Graph& g, int max_k) {
  std::vector<long long> out(static_cast<std::size_t>(max_k + 1), 0);
  if (g.empty()) return out;
  auto c = build_flag_complex(g, max_k + 1);
  auto p = triplet_profile(c);
  for (std::size_t k = 0; k < out.size() && k < p.betti.size(); ++k) out[k] = p.betti[k];
  return out;
}

/// Tests k-cycles for independence modulo the boundaries of (k+1)-simplices
/// and of previously accepted cycles.
class CycleClassFilter {
 public:
  CycleClassFilter(const CliqueComplex& c, int k) : complex_(&c), k_(k) {
    if (k + 1 <= c.dims())
      for (std::size_t i = 0; i < c.count(k + 1); ++i) reducer_.insert(boundary_column(c, k + 1, i));
  }

  /// `chain` lists k-simplex indices. Returns true (and remembers the class)
  /// if it is a cycle not homologous to any combination already seen.
  bool accept(SparseColumn chain) {
    std::sort(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    if (chain.empty() || !is_cycle(chain)) return false;
    return reducer_.insert(std::move(chain));
  }

  bool is_cycle(const SparseColumn& chain) const {
    if (k_ == 0) return true;
    SparseColumn acc, scratch;
    for (auto i : chain) add_into(acc, boundary_column(*complex_, k_, i), scratch);
    return acc.empty();
  }

 private:
  const CliqueComplex* complex_;
  int k_;
  ColumnReducer reducer_;
};

}  // namespace hkcore

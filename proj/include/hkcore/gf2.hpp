#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace hkcore {

/// Dense binary matrix, row-major, 64 entries per word.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u; }

  void set(std::size_t r, std::size_t c, bool value = true) {
    auto& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Matrix product over GF(2).
inline Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("dimension mismatch in GF(2) product");
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t* dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      const std::uint64_t* src = b.row(k);
      for (std::size_t w = 0; w < b.words_per_row(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

/// Rank by Gaussian elimination on a copy of the packed rows. Columns are
/// scanned left to right; the pivot is the first remaining row with a one.
inline std::size_t gf2_rank(const Gf2Matrix& m) {
  Gf2Matrix a = m;
  const std::size_t words = a.words_per_row();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < a.rows() && !(a.row(pivot)[w] & bit)) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) std::swap_ranges(a.row(pivot), a.row(pivot) + words, a.row(rank));
    const std::uint64_t* p = a.row(rank);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      std::uint64_t* row = a.row(r);
      if (!(row[w] & bit)) continue;
      for (std::size_t x = w; x < words; ++x) row[x] ^= p[x];
    }
    ++rank;
  }
  return rank;
}

/// Sparse column, sorted ascending row indices.
using SparseColumn = std::vector<std::uint32_t>;

inline void add_into(SparseColumn& acc, const SparseColumn& other, SparseColumn& scratch) {
  scratch.clear();
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(scratch));
  acc.swap(scratch);
}

/// Streams sparse columns against a growing reduced basis keyed by pivot
/// (largest row index). Inserting a column reports whether it raised the rank.
class ColumnReducer {
 public:
  /// Reduces `col` (sorted ascending) in place. Returns the pivot it was
  /// stored under, or nothing if it reduced to zero.
  bool insert(SparseColumn col, std::uint32_t* pivot_out = nullptr) {
    while (!col.empty()) {
      const std::uint32_t pivot = col.back();
      auto it = basis_.find(pivot);
      if (it == basis_.end()) {
        if (pivot_out) *pivot_out = pivot;
        basis_.emplace(pivot, std::move(col));
        return true;
      }
      add_into(col, it->second, scratch_);
    }
    return false;
  }

  /// Reduces without storing; true if the column is independent of the basis.
  bool is_independent(SparseColumn col) {
    while (!col.empty()) {
      auto it = basis_.find(col.back());
      if (it == basis_.end()) return true;
      add_into(col, it->second, scratch_);
    }
    return false;
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  std::unordered_map<std::uint32_t, SparseColumn> basis_;
  SparseColumn scratch_;
};

}  // namespace hkcore

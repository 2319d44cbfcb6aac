#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "shtab/errors.hpp"

namespace shtab {

/// A box of a shifted diagram. Rows and columns are 1-based; row r of a
/// shifted shape starts at column r.
struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
  constexpr bool diagonal() const { return row == col; }
};

class StrictPartition {
 public:
  StrictPartition() = default;

  /// Trailing zeros are dropped; anything else that is not strictly
  /// decreasing and positive throws TableauError.
  explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw TableauError("shape not strict: non-positive part");
      if (k > 0 && parts_[k] >= parts_[k - 1]) {
        throw TableauError("shape not strict: parts must strictly decrease");
      }
    }
  }

  static StrictPartition staircase(int n) {
    std::vector<int> p;
    for (int k = n; k >= 1; --k) p.push_back(k);
    return StrictPartition(std::move(p));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Part of row r (1-based), zero past the end.
  int part(int r) const {
    return (r >= 1 && r <= length()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }

  bool has_cell(Cell c) const {
    return c.row >= 1 && c.row <= length() && c.col >= c.row &&
           c.col < c.row + part(c.row);
  }

  bool contains(const StrictPartition& other) const {
    if (other.length() > length()) return false;
    for (int r = 1; r <= other.length(); ++r) {
      if (other.part(r) > part(r)) return false;
    }
    return true;
  }

  /// Parts of {1..staircase} not used by this partition.
  StrictPartition complement(int staircase) const {
    if (first() > staircase) throw TableauError("partition does not fit the staircase");
    std::vector<int> p;
    for (int k = staircase; k >= 1; --k) {
      if (std::find(parts_.begin(), parts_.end(), k) == parts_.end()) p.push_back(k);
    }
    return StrictPartition(std::move(p));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(parts_[k]);
    }
    return s + ")";
  }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// The skew shifted shape outer/inner.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(StrictPartition outer, StrictPartition inner = {})
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw TableauError("inner shape is not contained in outer shape");
  }

  const StrictPartition& outer() const { return outer_; }
  const StrictPartition& inner() const { return inner_; }
  bool straight() const { return inner_.empty(); }
  int rows() const { return outer_.length(); }
  int size() const { return outer_.size() - inner_.size(); }

  /// First column of row r that belongs to the skew shape.
  int row_begin(int r) const { return r + inner_.part(r); }
  /// One past the last column of row r.
  int row_end(int r) const { return r + outer_.part(r); }
  int row_size(int r) const { return outer_.part(r) - inner_.part(r); }

  bool contains(Cell c) const { return outer_.has_cell(c) && !inner_.has_cell(c); }

  /// Cells in row-major order, top row first.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int r = 1; r <= rows(); ++r) {
      for (int c = row_begin(r); c < row_end(r); ++c) out.push_back({r, c});
    }
    return out;
  }

  /// Cells in reading order: bottom row first, each row left to right.
  std::vector<Cell> reading_cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int r = rows(); r >= 1; --r) {
      for (int c = row_begin(r); c < row_end(r); ++c) out.push_back({r, c});
    }
    return out;
  }

  std::string str() const {
    return straight() ? outer_.str() : outer_.str() + "/" + inner_.str();
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  StrictPartition outer_;
  StrictPartition inner_;
};

/// Shapes are ordered by number of cells, then outer parts, then inner parts.
inline bool shape_less(const SkewShape& a, const SkewShape& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.outer() != b.outer()) return a.outer() < b.outer();
  return a.inner() < b.inner();
}

/// All strict partitions whose largest part is at most `largest`, i.e. the
/// subsets of {1..largest}. Sorted lexicographically.
inline std::vector<StrictPartition> strict_partitions_within(int largest) {
  std::vector<StrictPartition> out;
  for (unsigned mask = 0; mask < (1u << largest); ++mask) {
    std::vector<int> p;
    for (int k = largest; k >= 1; --k) {
      if (mask & (1u << (k - 1))) p.push_back(k);
    }
    out.emplace_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Straight shapes nu with |nu| <= max_cells and nu_1 <= largest.
inline std::vector<SkewShape> straight_shapes(int largest, int max_cells) {
  std::vector<SkewShape> out;
  for (auto& p : strict_partitions_within(largest)) {
    if (p.size() <= max_cells) out.emplace_back(p);
  }
  std::sort(out.begin(), out.end(), shape_less);
  return out;
}

/// Skew shapes lambda/mu with mu nonempty, lambda_1 <= largest and
/// 1 <= |lambda/mu| <= max_cells, in shape order.
inline std::vector<SkewShape> proper_skew_shapes(int largest, int max_cells) {
  std::vector<SkewShape> out;
  auto parts = strict_partitions_within(largest);
  for (auto& outer : parts) {
    for (auto& inner : parts) {
      if (inner.empty() || !outer.contains(inner)) continue;
      int cells = outer.size() - inner.size();
      if (cells >= 1 && cells <= max_cells) out.emplace_back(outer, inner);
    }
  }
  std::sort(out.begin(), out.end(), shape_less);
  return out;
}

}  // namespace shtab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "shtab/tableau.hpp"

namespace shtab {

/// ShST(shape, n): every canonical shifted semistandard tableau of a shape,
/// ordered lexicographically by reading word.
class TableauFamily {
 public:
  TableauFamily(SkewShape shape, int n, std::vector<Tableau> members)
      : shape_(std::move(shape)), n_(n), members_(std::move(members)) {
    index_.reserve(members_.size());
    for (std::size_t k = 0; k < members_.size(); ++k) index_.emplace(members_[k].key(), k);
  }

  const SkewShape& shape() const { return shape_; }
  int max_letter() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Tableau>& members() const { return members_; }
  const Tableau& operator[](std::size_t k) const { return members_[k]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Position of t in the family, if it belongs to it.
  std::optional<std::size_t> index_of(const Tableau& t) const {
    if (t.shape() != shape_ || t.max_letter() != n_) return std::nullopt;
    auto it = index_.find(t.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  SkewShape shape_;
  int n_;
  std::vector<Tableau> members_;
  std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

// Backtracking over cells in reading order. Because cells are filled in the
// order the reading word visits them, the canonical rule can be enforced as
// soon as a letter first appears, and the output comes out sorted.
template <typename Visit>
void fill_reading_order(const SkewShape& shape, int n, Visit&& visit) {
  std::vector<Cell> order = shape.reading_cells();
  Tableau t(shape, n);
  std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
  const int max_code = 2 * n;

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      visit(t);
      return;
    }
    Cell c = order[pos];
    Cell left{c.row, c.col - 1};
    Cell below{c.row + 1, c.col};
    int lo = 1;
    int hi = max_code;
    bool has_left = shape.contains(left);
    bool has_below = shape.contains(below);
    if (has_left) lo = t.at(left).code();
    if (has_below) hi = t.at(below).code();
    for (int code = lo; code <= hi; ++code) {
      Entry e = Entry::from_code(code);
      if (has_left && code == lo && e.is_primed()) continue;   // k' k' in a row
      if (has_below && code == hi && !e.is_primed()) continue; // k over k in a column
      auto k = static_cast<std::size_t>(e.value());
      if (seen[k] == 0 && e.is_primed()) continue;             // canonical form
      ++seen[k];
      t.set(c, e);
      self(self, pos + 1);
      --seen[k];
    }
    t.set(c, Entry{});
  };
  rec(rec, 0);
}

}  // namespace detail

inline TableauFamily enumerate(const SkewShape& shape, int n) {
  if (n < 1) throw TableauError("alphabet bound must be at least 1");
  std::vector<Tableau> members;
  detail::fill_reading_order(shape, n, [&](const Tableau& t) { members.push_back(t); });
  return TableauFamily(shape, n, std::move(members));
}

inline std::uint64_t count(const SkewShape& shape, int n) {
  if (n < 1) throw TableauError("alphabet bound must be at least 1");
  std::uint64_t total = 0;
  detail::fill_reading_order(shape, n, [&](const Tableau&) { ++total; });
  return total;
}

}  // namespace shtab

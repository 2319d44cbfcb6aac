#pragma once

// Shifted jeu de taquin and everything built from it: rectification,
// complement, evacuation, reversal, the restricted Schutzenberger
// involutions eta_{i,j}, and brute-force Knuth / dual equivalence tests.
//
// Slides are carried out on standard tableaux, where the moves are the
// ordinary ones (the shifted shape simply has no cell below a diagonal box).
// A semistandard slide standardizes, slides, destandardizes and then
// restores canonical form; a diagonal k' produced by a slide is always the
// first k in reading order, so canonicalizing it is the diagonal exception.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shtab/tableau.hpp"

namespace shtab {

struct SlideRecord {
  std::vector<Cell> corners;  ///< inner corners, in the order slid into
  std::vector<Cell> vacated;  ///< outer cell freed by each slide
  std::size_t size() const { return corners.size(); }
};

struct Rectification {
  Tableau tableau;
  SlideRecord record;
};

enum class CornerStrategy { topmost, bottommost };

/// Removable corners of a strict partition, top row first.
inline std::vector<Cell> removable_corners(const StrictPartition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= p.length(); ++r) {
    if (p.part(r + 1) == 0 || p.part(r) - 1 > p.part(r + 1)) {
      out.push_back({r, r + p.part(r) - 1});
    }
  }
  return out;
}

/// Cells that can be added to a strict partition, top row first.
inline std::vector<Cell> addable_cells(const StrictPartition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= p.length() + 1; ++r) {
    if (r == 1 || p.part(r - 1) > p.part(r) + 1) out.push_back({r, r + p.part(r)});
  }
  return out;
}

namespace detail {

// Dense board of standard labels with the current outer and inner shapes.
class SlideBoard {
 public:
  explicit SlideBoard(const Tableau& standard)
      : nrows_(standard.shape().rows() + 1), ncols_(standard.shape().outer().first() + 1) {
    outer_.assign(static_cast<std::size_t>(nrows_ + 1), 0);
    inner_.assign(static_cast<std::size_t>(nrows_ + 1), 0);
    for (int r = 1; r <= standard.shape().rows(); ++r) {
      outer_[static_cast<std::size_t>(r - 1)] = standard.shape().outer().part(r);
      inner_[static_cast<std::size_t>(r - 1)] = standard.shape().inner().part(r);
    }
    lab_.assign(static_cast<std::size_t>((nrows_ + 2) * (ncols_ + 2)), 0);
    for (Cell c : standard.shape().cells()) label(c.row, c.col) = standard.at(c).value();
  }

  int outer(int r) const { return r >= 1 && r <= nrows_ ? outer_[static_cast<std::size_t>(r - 1)] : 0; }
  int inner(int r) const { return r >= 1 && r <= nrows_ ? inner_[static_cast<std::size_t>(r - 1)] : 0; }

  bool in_skew(int r, int c) const {
    return r >= 1 && r <= nrows_ && c >= r + inner(r) && c < r + outer(r);
  }

  int& label(int r, int c) { return lab_[static_cast<std::size_t>(r * (ncols_ + 2) + c)]; }

  // Slides into a removable inner corner; returns the vacated outer cell.
  Cell slide_in(Cell corner) {
    int r = corner.row;
    int c = corner.col;
    --inner_[static_cast<std::size_t>(r - 1)];
    while (true) {
      bool east = in_skew(r, c + 1);
      bool south = in_skew(r + 1, c);
      if (!east && !south) break;
      bool go_east = east && (!south || label(r, c + 1) < label(r + 1, c));
      int nr = go_east ? r : r + 1;
      int nc = go_east ? c + 1 : c;
      label(r, c) = label(nr, nc);
      r = nr;
      c = nc;
    }
    label(r, c) = 0;
    if (c != r + outer(r) - 1) throw IntegrityError("slide did not end at an outer corner");
    --outer_[static_cast<std::size_t>(r - 1)];
    return {r, c};
  }

  // Slides out of an addable outer cell; returns the cell joining the inner shape.
  Cell slide_out(Cell cell) {
    int r = cell.row;
    int c = cell.col;
    if (r > nrows_ || c > ncols_) throw IntegrityError("outer slide beyond board");
    ++outer_[static_cast<std::size_t>(r - 1)];
    while (true) {
      bool west = in_skew(r, c - 1);
      bool north = in_skew(r - 1, c);
      if (!west && !north) break;
      bool go_west = west && (!north || label(r, c - 1) > label(r - 1, c));
      int nr = go_west ? r : r - 1;
      int nc = go_west ? c - 1 : c;
      label(r, c) = label(nr, nc);
      r = nr;
      c = nc;
    }
    label(r, c) = 0;
    if (c != r + inner(r)) throw IntegrityError("outer slide did not end at an inner corner");
    ++inner_[static_cast<std::size_t>(r - 1)];
    return {r, c};
  }

  Tableau to_tableau(int n) {
    std::vector<int> o;
    std::vector<int> i;
    for (int r = 1; r <= nrows_; ++r) {
      o.push_back(outer(r));
      i.push_back(inner(r));
    }
    SkewShape shape{StrictPartition(o), StrictPartition(i)};
    Tableau t(shape, n);
    for (Cell cell : shape.cells()) t.set(cell, Entry::plain(label(cell.row, cell.col)));
    return t;
  }

 private:
  int nrows_;
  int ncols_;
  std::vector<int> outer_;
  std::vector<int> inner_;
  std::vector<int> lab_;
};

// Letters k with another k directly below must be k'; letters k with another
// k directly to the left must be k. Only an entry that left the diagonal can
// disagree with the prime it carried through the standard slide.
inline void force_primes(Tableau& t) {
  const SkewShape& sh = t.shape();
  for (Cell c : sh.cells()) {
    Entry e = t.at(c);
    Cell below{c.row + 1, c.col};
    Cell left{c.row, c.col - 1};
    bool down = sh.contains(below) && t.at(below).value() == e.value();
    bool side = sh.contains(left) && t.at(left).value() == e.value();
    if (down && !side) t.set(c, e.with_prime(true));
    if (side && !down) t.set(c, e.with_prime(false));
  }
}

inline Tableau finish_slide(const Tableau& standard_result, const Standardization& s) {
  Tableau t = destandardize(standard_result, s.alphabet, s.n);
  force_primes(t);
  if (auto v = semistandard_violation(t)) {
    throw IntegrityError("slide broke the tableau rules: " + describe(*v));
  }
  return canonicalize(std::move(t));
}

inline bool is_removable(const StrictPartition& p, Cell c) {
  for (Cell k : removable_corners(p)) {
    if (k == c) return true;
  }
  return false;
}

}  // namespace detail

/// One inner slide into `corner`, a removable corner of the inner shape.
/// `vacated` receives the outer cell that leaves the shape.
inline Tableau inner_slide(const Tableau& t, Cell corner, Cell* vacated = nullptr) {
  if (!detail::is_removable(t.shape().inner(), corner)) {
    throw TableauError("cell (" + std::to_string(corner.row) + "," + std::to_string(corner.col) +
                       ") is not an inner corner");
  }
  Standardization s = standardize(t);
  detail::SlideBoard board(s.standard);
  Cell out = board.slide_in(corner);
  if (vacated) *vacated = out;
  return detail::finish_slide(board.to_tableau(s.standard.max_letter()), s);
}

/// One outer slide out of `cell`, an addable cell of the outer shape.
/// `filled` receives the cell that joins the inner shape.
inline Tableau outer_slide(const Tableau& t, Cell cell, Cell* filled = nullptr) {
  bool ok = false;
  for (Cell a : addable_cells(t.shape().outer())) ok = ok || a == cell;
  if (!ok) throw TableauError("cell is not an addable outer cell");
  Standardization s = standardize(t);
  detail::SlideBoard board(s.standard);
  Cell in = board.slide_out(cell);
  if (filled) *filled = in;
  return detail::finish_slide(board.to_tableau(s.standard.max_letter()), s);
}

inline Rectification rectify(const Tableau& t, CornerStrategy strategy = CornerStrategy::topmost) {
  Rectification out{t, {}};
  while (!out.tableau.straight()) {
    auto corners = removable_corners(out.tableau.shape().inner());
    Cell corner = strategy == CornerStrategy::topmost ? corners.front() : corners.back();
    Cell vacated;
    out.tableau = inner_slide(out.tableau, corner, &vacated);
    out.record.corners.push_back(corner);
    out.record.vacated.push_back(vacated);
  }
  return out;
}

/// Undoes a rectification record by outer slides in reverse order. The input
/// must have the rectified shape of the record.
inline Tableau replay_outer(const Tableau& straight, const SlideRecord& rec) {
  Tableau t = straight;
  for (std::size_t k = rec.size(); k-- > 0;) {
    Cell filled;
    t = outer_slide(t, rec.vacated[k], &filled);
    if (filled != rec.corners[k]) throw IntegrityError("slide record does not replay");
  }
  return t;
}

inline bool knuth_equivalent(const Tableau& a, const Tableau& b) {
  Tableau ra = rectify(a).tableau;
  Tableau rb = rectify(b).tableau;
  return ra.shape() == rb.shape() && ra.rows() == rb.rows();
}

/// Reflection in the anti-diagonal of the staircase of size `staircase`
/// (default: the first outer part) with letters complemented by
/// k -> (n-k+1)' and k' -> n-k+1, then put in canonical form.
inline Tableau complement(const Tableau& t, int n, std::optional<int> staircase = std::nullopt) {
  if (t.largest_value() > n) throw TableauError("tableau uses letters beyond the alphabet");
  int size = staircase.value_or(t.shape().outer().first());
  SkewShape shape(t.shape().inner().complement(size), t.shape().outer().complement(size));
  Tableau c(shape, n);
  for (Cell cell : t.shape().cells()) {
    Entry e = t.at(cell);
    Cell image{size + 1 - cell.col, size + 1 - cell.row};
    c.set(image, Entry::make(n - e.value() + 1, !e.is_primed()));
  }
  return canonicalize(std::move(c));
}

/// evac(T) = rect(c_n(T)) for straight T.
inline Tableau evacuation_jdt(const Tableau& t) {
  if (!t.straight()) throw TableauError("evacuation needs a straight shape");
  Tableau r = rectify(complement(t, t.max_letter())).tableau;
  if (r.shape() != t.shape()) throw IntegrityError("evacuation changed the shape");
  return r;
}

/// Rectify, evacuate, then undo the rectification by outer slides.
inline Tableau reversal(const Tableau& t) {
  if (t.straight()) return evacuation_jdt(t);
  Rectification rect = rectify(t);
  return replay_outer(evacuation_jdt(rect.tableau), rect.record);
}

/// eta_{i,j}: reversal applied to the letters i..j, re-indexed to 1..j-i+1.
inline Tableau eta(const Tableau& t, int i, int j) {
  if (i < 1 || j <= i || j > t.max_letter()) {
    throw TableauError("eta needs 1 <= i < j <= n");
  }
  IntervalSplit split = restrict_interval(t, i, j);
  Tableau band = shift_letters(split.band, -(i - 1), j - i + 1);
  split.band = shift_letters(reversal(band), i - 1, t.max_letter());
  return reassemble(split);
}

/// Brute-force dual equivalence: every sequence of inner slides, applied to
/// both tableaux in lockstep, yields equal shapes at every step.
inline bool dual_equivalent(const Tableau& a, const Tableau& b, int max_cells = 6) {
  if (a.shape() != b.shape()) throw TableauError("dual equivalence needs equal shapes");
  if (a.size() > max_cells) {
    throw CapacityError("dual equivalence brute force is capped at " + std::to_string(max_cells) +
                        " cells");
  }
  std::set<std::pair<std::string, std::string>> visited;
  auto state_key = [](const Tableau& t) { return t.shape().str() + "|" + t.key(); };
  auto rec = [&](auto&& self, const Tableau& x, const Tableau& y) -> bool {
    if (!visited.insert({state_key(x), state_key(y)}).second) return true;
    for (Cell corner : removable_corners(x.shape().inner())) {
      Tableau x2 = inner_slide(x, corner);
      Tableau y2 = inner_slide(y, corner);
      if (x2.shape() != y2.shape()) return false;
      if (!self(self, x2, y2)) return false;
    }
    return true;
  };
  return rec(rec, a, b);
}

}  // namespace shtab

#pragma once

// Shifted tableau switching.
//
// A perforated (a,b)-pair is a filling of a double border strip by letters
// a, a' (the A part) and b, b' (the B part). One step picks the rightmost
// unprimed a-box lying north or west of a b-box (failing that, the
// bottommost such a'-box) and rewrites its neighbourhood by one of the
// seven shifted switches:
//
//   one adjacent b-box                   two adjacent b-boxes
//   S1  a b   -> b a                     S5  a b'  -> b' a
//                                            b         b
//   S2  a     -> b                       S6  a b   -> b b
//       b        a                           b         a
//   S3  a b'  -> b b     (a diagonal)    S7  a a b -> b a' b   (first a diagonal)
//         b        a                           b         a
//   S4  a a   -> b a'    (first a diagonal)
//         b        a
//
// where an unmarked letter in a rule's left side keeps its own prime when
// it moves. S3, S4 and S7 are the diagonal variants of S1, S2 and S6 that
// would otherwise put two boxes of one letter on the main diagonal.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shtab/tableau.hpp"

namespace shtab {

enum class SwitchRule { S1 = 1, S2, S3, S4, S5, S6, S7 };

inline std::string rule_name(SwitchRule r) { return "S" + std::to_string(static_cast<int>(r)); }

/// One frame of a switching trace: a label ("start", "S1", ..., "theta2"),
/// the whole filling at that moment, and the cells to highlight.
struct TraceFrame {
  std::string label;
  Tableau filling;
  std::vector<Cell> marked;
};
using SwitchTrace = std::vector<TraceFrame>;

namespace detail {

struct Slot {
  int group = -1;  // -1: not a cell of the board
  int letter = 0;
  bool primed = false;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Band {
  int group;
  int letter;
};

// Dense board of tagged entries. Groups tell apart letters that coincide
// in value but belong to different tableaux (S and T in a full switch, or
// active and already-moved letters in evacuation).
class ColoredBoard {
 public:
  ColoredBoard() = default;
  ColoredBoard(int rows, int cols)
      : rows_(rows), cols_(cols), slots_(static_cast<std::size_t>((rows + 2) * (cols + 2))) {}

  bool valid(Cell c) const { return c.row >= 1 && c.row <= rows_ && c.col >= 1 && c.col <= cols_; }

  const Slot& at(Cell c) const {
    static const Slot none;
    return valid(c) ? slots_[idx(c)] : none;
  }
  Slot& at(Cell c) { return slots_[idx(c)]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool is(Cell c, Band b) const {
    const Slot& s = at(c);
    return s.group == b.group && s.letter == b.letter;
  }

  template <typename F>
  void for_each_cell(F&& f) const {
    for (int r = 1; r <= rows_; ++r) {
      for (int c = r; c <= cols_; ++c) {
        if (slots_[idx({r, c})].group >= 0) f(Cell{r, c});
      }
    }
  }

 private:
  std::size_t idx(Cell c) const { return static_cast<std::size_t>(c.row * (cols_ + 2) + c.col); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Slot> slots_;
};

inline ColoredBoard board_for(const SkewShape& shape) {
  return ColoredBoard(shape.rows(), shape.outer().first());
}

inline void load(ColoredBoard& board, const Tableau& t, int group) {
  for (Cell c : t.shape().cells()) {
    Entry e = t.at(c);
    board.at(c) = Slot{group, e.value(), e.is_primed()};
  }
}

inline std::optional<Cell> select_box(const ColoredBoard& board, Band a, Band b) {
  std::optional<Cell> best_plain;
  std::optional<Cell> best_primed;
  board.for_each_cell([&](Cell c) {
    if (!board.is(c, a)) return;
    if (!board.is({c.row, c.col + 1}, b) && !board.is({c.row + 1, c.col}, b)) return;
    if (!board.at(c).primed) {
      if (!best_plain || c.col > best_plain->col) best_plain = c;
    } else {
      if (!best_primed || c.row > best_primed->row) best_primed = c;
    }
  });
  return best_plain ? best_plain : best_primed;
}

inline SwitchRule apply_switch(ColoredBoard& board, Cell x, Band a, Band b) {
  const int r = x.row;
  const int c = x.col;
  const Cell east{r, c + 1};
  const Cell south{r + 1, c};
  const Cell south_east{r + 1, c + 1};
  const Cell west{r, c - 1};
  const bool eb = board.is(east, b);
  const bool sb = board.is(south, b);
  const bool west_is_diagonal_a = c == r + 1 && board.is(west, a);

  if (eb && sb) {
    if (board.at(east).primed) {
      std::swap(board.at(x), board.at(east));
      return SwitchRule::S5;
    }
    if (west_is_diagonal_a) {
      Slot w = board.at(west);
      board.at(west) = board.at(south);
      board.at(x).primed = true;
      board.at(south) = w;
      return SwitchRule::S7;
    }
    std::swap(board.at(x), board.at(south));
    return SwitchRule::S6;
  }
  if (eb) {
    if (x.diagonal() && board.at(east).primed && board.is(south_east, b)) {
      Slot moving = board.at(x);
      board.at(x) = board.at(south_east);
      board.at(east).primed = false;
      board.at(south_east) = moving;
      return SwitchRule::S3;
    }
    std::swap(board.at(x), board.at(east));
    return SwitchRule::S1;
  }
  if (sb) {
    if (west_is_diagonal_a) {
      Slot w = board.at(west);
      board.at(west) = board.at(south);
      board.at(x).primed = true;
      board.at(south) = w;
      return SwitchRule::S4;
    }
    std::swap(board.at(x), board.at(south));
    return SwitchRule::S2;
  }
  throw IntegrityError("selected a-box has no adjacent b-box");
}

using StepHook = std::function<void(SwitchRule, Cell, const ColoredBoard&)>;

// Runs the switching process on the pair (a, b) until fully switched.
inline int switch_bands(ColoredBoard& board, Band a, Band b, const StepHook& hook = nullptr) {
  int steps = 0;
  const int limit = 4 * (board.rows() + 1) * (board.cols() + 1) * (board.cols() + 1);
  while (auto x = select_box(board, a, b)) {
    SwitchRule rule = apply_switch(board, *x, a, b);
    if (hook) hook(rule, *x, board);
    if (++steps > limit) throw IntegrityError("switching process does not terminate");
  }
  return steps;
}

// Filling of all cells of `shape` from the board, with the given groups'
// letters; cells of other groups are left empty.
inline Tableau snapshot(const ColoredBoard& board, const SkewShape& shape, int n) {
  Tableau t(shape, n);
  for (Cell c : shape.cells()) {
    const Slot& s = board.at(c);
    t.set(c, Entry::make(s.letter, s.primed));
  }
  return t;
}

inline std::vector<Cell> cells_where(const ColoredBoard& board,
                                     const std::function<bool(const Slot&)>& pred) {
  std::vector<Cell> out;
  board.for_each_cell([&](Cell c) {
    if (pred(board.at(c))) out.push_back(c);
  });
  return out;
}

// The cells of `group` together with `base` must form a strict partition;
// returns it.
inline StrictPartition grown_shape(const ColoredBoard& board, const StrictPartition& base,
                                   int group) {
  std::vector<int> parts;
  for (int r = 1; r <= board.rows(); ++r) {
    int len = base.part(r);
    for (int c = r + len; c <= board.cols() && board.at({r, c}).group == group; ++c) ++len;
    parts.push_back(len);
  }
  return StrictPartition(parts);
}

inline Tableau extract(const ColoredBoard& board, const SkewShape& shape, int n) {
  Tableau t(shape, n);
  for (Cell c : shape.cells()) {
    const Slot& s = board.at(c);
    t.set(c, Entry::make(s.letter, s.primed));
  }
  return t;
}

// Evacuation by switching, restricted to letters lo..hi: each letter k in
// turn is switched through the letters above it and parked, then the parked
// letters are renamed k -> lo + hi - k.
inline Tableau evacuate_by_switching(const Tableau& t, int lo, int hi) {
  if (lo < 1 || hi < lo || hi > t.max_letter()) throw TableauError("invalid letter interval");
  ColoredBoard board = board_for(t.shape());
  load(board, t, 0);
  for (int k = lo; k < hi; ++k) {
    for (int j = k + 1; j <= hi; ++j) switch_bands(board, {0, k}, {0, j});
    board.for_each_cell([&](Cell c) {
      if (board.is(c, {0, k})) board.at(c).group = 1;
    });
  }
  Tableau out(t.shape(), t.max_letter());
  for (Cell c : t.shape().cells()) {
    const Slot& s = board.at(c);
    int letter = (s.letter >= lo && s.letter <= hi) ? lo + hi - s.letter : s.letter;
    out.set(c, Entry::make(letter, s.primed));
  }
  return canonicalize(std::move(out));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Perforated pairs

/// A perforated (a,b)-pair: the A filling uses only a, a'; the B filling
/// only b, b'; B extends A.
class PerforatedPair {
 public:
  PerforatedPair(const Tableau& a, const Tableau& b) : region_(b.shape().outer(), a.shape().inner()) {
    if (b.shape().inner() != a.shape().outer()) throw TableauError("B does not extend A");
    a_letter_ = a.largest_value();
    b_letter_ = b.largest_value();
    for (auto* part : {&a, &b}) {
      for (Cell c : part->shape().cells()) {
        int v = part->at(c).value();
        if (v != part->largest_value()) throw TableauError("perforated tableau uses two letters");
      }
    }
    board_ = detail::board_for(region_);
    detail::load(board_, a, kA);
    detail::load(board_, b, kB);
    n_ = std::max(a.max_letter(), b.max_letter());
  }

  const SkewShape& region() const { return region_; }

  std::optional<Cell> select_switch_box() const {
    return detail::select_box(board_, band_a(), band_b());
  }
  bool fully_switched() const { return !select_switch_box().has_value(); }

  /// One switch; throws IntegrityError when the pair is already fully switched.
  SwitchRule step() {
    auto x = select_switch_box();
    if (!x) throw IntegrityError("pair is fully switched");
    return detail::apply_switch(board_, *x, band_a(), band_b());
  }

  /// Switches until fully switched; returns the rules applied.
  std::vector<SwitchRule> run() {
    std::vector<SwitchRule> rules;
    detail::switch_bands(board_, band_a(), band_b(),
                         [&](SwitchRule r, Cell, const detail::ColoredBoard&) { rules.push_back(r); });
    return rules;
  }

  /// Whole filling of the region (A and B letters together).
  Tableau filling() const { return detail::snapshot(board_, region_, n_); }
  std::vector<Cell> a_cells() const { return cells_of(kA); }
  std::vector<Cell> b_cells() const { return cells_of(kB); }

  /// B part as a skew tableau; meaningful once fully switched.
  Tableau inner_part() const {
    StrictPartition mid = detail::grown_shape(board_, region_.inner(), kB);
    return detail::extract(board_, SkewShape(mid, region_.inner()), n_);
  }
  /// A part as a skew tableau; meaningful once fully switched.
  Tableau outer_part() const {
    StrictPartition mid = detail::grown_shape(board_, region_.inner(), kB);
    return detail::extract(board_, SkewShape(region_.outer(), mid), n_);
  }

  /// Perforated-pair conditions that fail, as readable strings (empty if valid).
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    for (int g : {kA, kB}) {
      auto cells = cells_of(g);
      const char* name = g == kA ? "A" : "B";
      int diagonal = 0;
      for (Cell x : cells) {
        const detail::Slot& s = board_.at(x);
        if (x.diagonal()) ++diagonal;
        for (Cell y : cells) {
          if (x == y) continue;
          const detail::Slot& t = board_.at(y);
          if (!s.primed && !t.primed && x.col == y.col) out.push_back(std::string(name) + ": two unprimed in a column");
          if (s.primed && t.primed && x.row == y.row) out.push_back(std::string(name) + ": two primed in a row");
          if (!s.primed && t.primed && y.row >= x.row && y.col >= x.col) {
            out.push_back(std::string(name) + ": primed box south-east of an unprimed box");
          }
        }
      }
      if (diagonal > 1) out.push_back(std::string(name) + ": two boxes on the main diagonal");
    }
    for (Cell x : region_.cells()) {
      if (region_.contains({x.row + 1, x.col + 1}) && region_.contains({x.row + 2, x.col + 2})) {
        out.push_back("region is not a double border strip");
      }
    }
    return out;
  }

 private:
  static constexpr int kA = 0;
  static constexpr int kB = 1;
  detail::Band band_a() const { return {kA, a_letter_}; }
  detail::Band band_b() const { return {kB, b_letter_}; }
  std::vector<Cell> cells_of(int g) const {
    return detail::cells_where(board_, [g](const detail::Slot& s) { return s.group == g; });
  }

  SkewShape region_;
  detail::ColoredBoard board_;
  int a_letter_ = 0;
  int b_letter_ = 0;
  int n_ = 0;
};

// ---------------------------------------------------------------------------
// Tableau switching

struct SwitchResult {
  Tableau inner;  ///< the letters of T, moved inward
  Tableau outer;  ///< the letters of S, moved outward
};

/// Switches S through T (T extends S): the pairs (S^a, T^b) are switched
/// for a from the largest letter of S down to 1 and, for each a, b from 1 up
/// to the largest letter of T. Returns (^S T, S_T).
inline SwitchResult full_switch(const Tableau& s, const Tableau& t, SwitchTrace* trace = nullptr) {
  if (t.shape().inner() != s.shape().outer()) throw TableauError("T does not extend S");
  SkewShape region(t.shape().outer(), s.shape().inner());
  detail::ColoredBoard board = detail::board_for(region);
  detail::load(board, s, 0);
  detail::load(board, t, 1);
  const int n = std::max(s.max_letter(), t.max_letter());
  auto frame = [&](std::string label) {
    trace->push_back({std::move(label), detail::snapshot(board, region, n),
                      detail::cells_where(board, [](const detail::Slot& x) { return x.group == 0; })});
  };
  if (trace) frame("start");
  detail::StepHook hook;
  if (trace) hook = [&](SwitchRule r, Cell, const detail::ColoredBoard&) { frame(rule_name(r)); };
  for (int a = s.largest_value(); a >= 1; --a) {
    for (int b = 1; b <= t.largest_value(); ++b) detail::switch_bands(board, {0, a}, {1, b}, hook);
  }
  StrictPartition mid = detail::grown_shape(board, region.inner(), 1);
  return {canonicalize(detail::extract(board, SkewShape(mid, region.inner()), t.max_letter())),
          canonicalize(detail::extract(board, SkewShape(region.outer(), mid), s.max_letter()))};
}

/// Switching of a single perforated pair given as two one-letter tableaux.
inline SwitchResult switch_pair(const Tableau& a, const Tableau& b) {
  PerforatedPair pair(a, b);
  pair.run();
  return {pair.inner_part(), pair.outer_part()};
}

/// Shifted evacuation of a straight tableau by switching.
inline Tableau evac_switch(const Tableau& t) {
  if (!t.straight()) throw TableauError("evacuation needs a straight shape");
  if (t.max_letter() < 1 || t.size() == 0) return t;
  return detail::evacuate_by_switching(t, 1, t.max_letter());
}

/// evac_k: evacuation of the letters 1..k of a straight tableau.
inline Tableau evac_k_switch(const Tableau& t, int k) {
  if (!t.straight()) throw TableauError("evacuation needs a straight shape");
  if (k < 1 || k > t.max_letter()) throw TableauError("evac_k needs 1 <= k <= n");
  return detail::evacuate_by_switching(t, 1, k);
}

/// The switching evacuation run on a skew tableau.
inline Tableau evac_skew(const Tableau& t) {
  if (t.max_letter() < 1) return t;
  return detail::evacuate_by_switching(t, 1, t.max_letter());
}

inline Tableau evac_k_skew(const Tableau& t, int k) {
  if (k < 1 || k > t.max_letter()) throw TableauError("evac_k needs 1 <= k <= n");
  return detail::evacuate_by_switching(t, 1, k);
}

/// Switching evacuation of the letters i..j, others untouched.
inline Tableau evac_interval_skew(const Tableau& t, int i, int j) {
  if (i < 1 || j < i || j > t.max_letter()) throw TableauError("invalid letter interval");
  return detail::evacuate_by_switching(t, i, j);
}

}  // namespace shtab

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "shtab/entry.hpp"
#include "shtab/errors.hpp"
#include "shtab/shape.hpp"

namespace shtab {

/// A filling of a skew shifted shape by letters of [n]'.
///
/// This is a plain value: it does not enforce the tableau rules, so the
/// switching and sliding algorithms can hold intermediate fillings in it.
/// Use make_tableau / validate for checked construction.
class Tableau {
 public:
  Tableau() = default;

  Tableau(SkewShape shape, int n) : shape_(std::move(shape)), n_(n) {
    rows_.resize(static_cast<std::size_t>(shape_.rows()));
    for (int r = 1; r <= shape_.rows(); ++r) {
      rows_[static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(shape_.row_size(r)));
    }
  }

  /// rows[r-1] lists the entries of the skew cells of row r, left to right.
  static Tableau from_rows(const SkewShape& shape, const std::vector<std::vector<Entry>>& rows,
                           int n) {
    if (static_cast<int>(rows.size()) != shape.rows()) {
      throw TableauError("row count does not match shape");
    }
    Tableau t(shape, n);
    for (int r = 1; r <= shape.rows(); ++r) {
      const auto& row = rows[static_cast<std::size_t>(r - 1)];
      if (static_cast<int>(row.size()) != shape.row_size(r)) {
        throw TableauError("row " + std::to_string(r) + " length does not match shape");
      }
      t.rows_[static_cast<std::size_t>(r - 1)] = row;
    }
    return t;
  }

  const SkewShape& shape() const { return shape_; }
  int max_letter() const { return n_; }
  void set_max_letter(int n) { n_ = n; }
  int size() const { return shape_.size(); }
  bool straight() const { return shape_.straight(); }

  bool contains(Cell c) const { return shape_.contains(c); }

  Entry at(Cell c) const {
    return rows_[static_cast<std::size_t>(c.row - 1)]
                [static_cast<std::size_t>(c.col - shape_.row_begin(c.row))];
  }
  void set(Cell c, Entry e) {
    rows_[static_cast<std::size_t>(c.row - 1)]
         [static_cast<std::size_t>(c.col - shape_.row_begin(c.row))] = e;
  }
  /// Entry at c, or the empty entry when c is not a cell of the shape.
  Entry get(Cell c) const { return contains(c) ? at(c) : Entry{}; }

  const std::vector<std::vector<Entry>>& rows() const { return rows_; }

  /// Largest unprimed value present (0 for the empty tableau).
  int largest_value() const {
    int m = 0;
    for (auto& row : rows_) {
      for (Entry e : row) m = std::max(m, e.value());
    }
    return m;
  }

  /// Compact identity key: one byte per cell in row-major order.
  std::string key() const {
    std::string k;
    k.reserve(static_cast<std::size_t>(size()));
    for (auto& row : rows_) {
      for (Entry e : row) k.push_back(static_cast<char>(e.code()));
    }
    return k;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<Entry>> rows_;
  int n_ = 0;
};

// ---------------------------------------------------------------------------
// Reading word, weight

inline std::vector<Entry> reading_word(const Tableau& t) {
  std::vector<Entry> w;
  w.reserve(static_cast<std::size_t>(t.size()));
  for (Cell c : t.shape().reading_cells()) w.push_back(t.at(c));
  return w;
}

inline std::string word_string(const std::vector<Entry>& w) {
  std::string s;
  for (Entry e : w) s += e.str();
  return s;
}

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> counts) : counts_(std::move(counts)) {}

  const std::vector<int>& counts() const { return counts_; }
  int total() const {
    int s = 0;
    for (int c : counts_) s += c;
    return s;
  }
  Weight reversed() const { return Weight({counts_.rbegin(), counts_.rend()}); }
  /// Action of the simple transposition (i, i+1).
  Weight swapped(int i) const {
    Weight w = *this;
    std::swap(w.counts_[static_cast<std::size_t>(i - 1)], w.counts_[static_cast<std::size_t>(i)]);
    return w;
  }
  /// Reverses the positions i..j (1-based, inclusive).
  Weight reversed_between(int i, int j) const {
    Weight w = *this;
    std::reverse(w.counts_.begin() + (i - 1), w.counts_.begin() + j);
    return w;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < counts_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(counts_[k]);
    }
    return s + ")";
  }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<int> counts_;
};

/// Counts of each unprimed value 1..n (n = the tableau's alphabet bound,
/// widened if an entry exceeds it).
inline Weight weight(const Tableau& t) {
  int n = std::max(t.max_letter(), t.largest_value());
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (auto& row : t.rows()) {
    for (Entry e : row) {
      if (!e.empty()) ++counts[static_cast<std::size_t>(e.value() - 1)];
    }
  }
  return Weight(std::move(counts));
}

// ---------------------------------------------------------------------------
// Validity and canonical form

struct Violation {
  Cell cell;
  std::string rule;
};

/// First violation of the semistandard rules, in row-major order of the
/// offending cell. Canonical form is not checked here.
inline std::optional<Violation> semistandard_violation(const Tableau& t) {
  const SkewShape& sh = t.shape();
  for (Cell c : sh.cells()) {
    Entry e = t.at(c);
    if (e.empty()) return Violation{c, "empty cell"};
    if (e.value() > t.max_letter()) return Violation{c, "letter exceeds alphabet bound"};
    Cell left{c.row, c.col - 1};
    if (sh.contains(left)) {
      Entry l = t.at(left);
      if (!l.empty()) {
        if (l > e) return Violation{c, "row not weakly increasing"};
        if (l == e && e.is_primed()) return Violation{c, "repeated primed letter in row"};
      }
    }
    Cell up{c.row - 1, c.col};
    if (sh.contains(up)) {
      Entry u = t.at(up);
      if (!u.empty()) {
        if (u > e) return Violation{c, "column not weakly increasing"};
        if (u == e && !e.is_primed()) return Violation{c, "repeated unprimed letter in column"};
      }
    }
  }
  return std::nullopt;
}

/// Cell holding the first occurrence of value k in reading order, if any.
inline std::optional<Cell> first_occurrence(const Tableau& t, int k) {
  for (Cell c : t.shape().reading_cells()) {
    if (t.at(c).value() == k) return c;
  }
  return std::nullopt;
}

inline std::optional<Violation> canonical_violation(const Tableau& t) {
  std::vector<bool> seen(static_cast<std::size_t>(t.largest_value() + 1), false);
  for (Cell c : t.shape().reading_cells()) {
    Entry e = t.at(c);
    if (e.empty()) continue;
    auto k = static_cast<std::size_t>(e.value());
    if (!seen[k]) {
      seen[k] = true;
      if (e.is_primed()) return Violation{c, "not canonical: first occurrence is primed"};
    }
  }
  return std::nullopt;
}

inline std::optional<Violation> find_violation(const Tableau& t) {
  if (auto v = semistandard_violation(t)) return v;
  return canonical_violation(t);
}

inline bool is_semistandard(const Tableau& t) { return !semistandard_violation(t).has_value(); }
inline bool is_canonical(const Tableau& t) { return !canonical_violation(t).has_value(); }
inline bool is_valid(const Tableau& t) { return !find_violation(t).has_value(); }

inline std::string describe(const Violation& v) {
  return v.rule + " at cell (" + std::to_string(v.cell.row) + "," + std::to_string(v.cell.col) +
         ")";
}

inline void validate(const Tableau& t) {
  if (auto v = find_violation(t)) throw TableauError(describe(*v));
}

/// Unprimes the first occurrence of every letter in the reading word.
inline Tableau canonicalize(Tableau t) {
  std::vector<bool> seen(static_cast<std::size_t>(t.largest_value() + 1), false);
  for (Cell c : t.shape().reading_cells()) {
    Entry e = t.at(c);
    if (e.empty()) continue;
    auto k = static_cast<std::size_t>(e.value());
    if (!seen[k]) {
      seen[k] = true;
      if (e.is_primed()) t.set(c, e.toggled());
    }
  }
  return t;
}

/// Checked construction: throws TableauError on any rule violation.
inline Tableau make_tableau(const SkewShape& shape, const std::vector<std::vector<Entry>>& rows,
                            int n) {
  Tableau t = Tableau::from_rows(shape, rows, n);
  validate(t);
  return t;
}

// ---------------------------------------------------------------------------
// Standardization

struct Standardization {
  Tableau standard;             ///< entries 1..N, all unprimed
  std::vector<Entry> alphabet;  ///< alphabet[label-1] is the original entry
  int n = 0;                    ///< alphabet bound of the original tableau
};

/// Within each letter k, the primed cells are numbered top to bottom, then
/// the unprimed cells left to right.
inline Standardization standardize(const Tableau& t) {
  std::vector<std::pair<std::pair<int, int>, Cell>> order;  // ((code, tiebreak), cell)
  for (Cell c : t.shape().cells()) {
    Entry e = t.at(c);
    int tie = e.is_primed() ? c.row : c.col;
    order.push_back({{e.code(), tie}, c});
  }
  std::sort(order.begin(), order.end());
  Standardization s;
  s.n = t.max_letter();
  s.standard = Tableau(t.shape(), static_cast<int>(order.size()));
  int label = 0;
  for (auto& [k, c] : order) {
    s.standard.set(c, Entry::plain(++label));
    s.alphabet.push_back(t.at(c));
  }
  return s;
}

/// Replaces each label by its alphabet entry. The result is not
/// canonicalized.
inline Tableau destandardize(const Tableau& standard, const std::vector<Entry>& alphabet, int n) {
  Tableau t(standard.shape(), n);
  for (Cell c : standard.shape().cells()) {
    int label = standard.at(c).value();
    t.set(c, alphabet.at(static_cast<std::size_t>(label - 1)));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Letter bands

/// The strict partition formed by the inner shape together with every cell
/// holding a value <= k.
inline StrictPartition shape_upto(const Tableau& t, int k) {
  const SkewShape& sh = t.shape();
  std::vector<int> parts;
  for (int r = 1; r <= sh.rows(); ++r) {
    int len = sh.inner().part(r);
    for (int c = sh.row_begin(r); c < sh.row_end(r); ++c) {
      if (t.at({r, c}).value() <= k) ++len;
    }
    parts.push_back(len);
  }
  return StrictPartition(std::move(parts));
}

/// Sub-filling of t on the skew shape outer/inner (both nested in t's shape).
inline Tableau sub_tableau(const Tableau& t, const StrictPartition& outer,
                           const StrictPartition& inner) {
  Tableau s(SkewShape(outer, inner), t.max_letter());
  for (Cell c : s.shape().cells()) s.set(c, t.at(c));
  return s;
}

struct IntervalSplit {
  Tableau prefix;  ///< letters 1..i-1
  Tableau band;    ///< letters i..j
  Tableau suffix;  ///< letters j+1..n
};

inline IntervalSplit restrict_interval(const Tableau& t, int i, int j) {
  if (i < 1 || j < i) throw TableauError("invalid letter interval");
  StrictPartition lo = shape_upto(t, i - 1);
  StrictPartition hi = shape_upto(t, j);
  return {sub_tableau(t, lo, t.shape().inner()), sub_tableau(t, hi, lo),
          sub_tableau(t, t.shape().outer(), hi)};
}

/// Glues the three pieces of restrict_interval back together.
inline Tableau reassemble(const IntervalSplit& s) {
  if (s.prefix.shape().outer() != s.band.shape().inner() ||
      s.band.shape().outer() != s.suffix.shape().inner()) {
    throw TableauError("interval pieces do not fit together");
  }
  int n = std::max({s.prefix.max_letter(), s.band.max_letter(), s.suffix.max_letter()});
  Tableau t(SkewShape(s.suffix.shape().outer(), s.prefix.shape().inner()), n);
  for (const Tableau* piece : {&s.prefix, &s.band, &s.suffix}) {
    for (Cell c : piece->shape().cells()) t.set(c, piece->at(c));
  }
  return t;
}

/// Adds delta to every value (primes kept) and sets the alphabet bound.
inline Tableau shift_letters(Tableau t, int delta, int n) {
  for (Cell c : t.shape().cells()) {
    Entry e = t.at(c);
    t.set(c, e.with_value(e.value() + delta));
  }
  t.set_max_letter(n);
  return t;
}

}  // namespace shtab

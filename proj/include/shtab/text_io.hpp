#pragma once

// Text and JSON forms of tableaux.
//
// Text: one line per row (or rows separated by '/'), tokens separated by
// spaces. Row r begins with r-1 '.' tokens for the shift, then one '.' per
// inner cell, then the entries ("2" or "2'").
//
// JSON: {"outer": [...], "inner": [...], "rows": [["1","2'"], ...], "n": 4}
// where rows[r] holds only the skew cells of row r+1.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "shtab/tableau.hpp"

namespace shtab {

namespace detail {

inline std::vector<std::string> split_rows(const std::string& text) {
  std::vector<std::string> rows;
  std::string cur;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t\r") != std::string::npos) rows.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '\n' || ch == '/') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return rows;
}

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Parses the text form without checking the tableau rules. Shape errors and
/// malformed tokens still throw TableauError.
inline Tableau parse_filling(const std::string& text, std::optional<int> n = std::nullopt) {
  auto lines = detail::split_rows(text);
  std::vector<int> outer;
  std::vector<int> inner;
  std::vector<std::vector<Entry>> rows;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    int r = static_cast<int>(k) + 1;
    auto toks = detail::split_tokens(lines[k]);
    auto where = "row " + std::to_string(r) + ": ";
    if (static_cast<int>(toks.size()) < r) throw TableauError(where + "row is empty");
    for (int s = 0; s < r - 1; ++s) {
      if (toks[static_cast<std::size_t>(s)] != ".") {
        throw TableauError(where + "expected " + std::to_string(r - 1) + " leading shift dots");
      }
    }
    int dots = 0;
    std::vector<Entry> row;
    for (std::size_t s = static_cast<std::size_t>(r - 1); s < toks.size(); ++s) {
      if (toks[s] == ".") {
        if (!row.empty()) throw TableauError(where + "inner cell after a filled cell");
        ++dots;
        continue;
      }
      try {
        row.push_back(Entry::parse(toks[s]));
      } catch (const std::invalid_argument& e) {
        throw TableauError(where + e.what() + " '" + toks[s] + "'");
      }
    }
    outer.push_back(static_cast<int>(toks.size()) - (r - 1));
    inner.push_back(dots);
    rows.push_back(std::move(row));
  }
  SkewShape shape{StrictPartition(outer), StrictPartition(inner)};
  Tableau t = Tableau::from_rows(shape, rows, 0);
  t.set_max_letter(n.value_or(std::max(1, t.largest_value())));
  return t;
}

/// Parses and validates (semistandard + canonical form).
inline Tableau parse_tableau(const std::string& text, std::optional<int> n = std::nullopt) {
  Tableau t = parse_filling(text, n);
  validate(t);
  return t;
}

inline std::string render(const Tableau& t, const std::string& row_sep = "\n") {
  std::string out;
  const SkewShape& sh = t.shape();
  for (int r = 1; r <= sh.rows(); ++r) {
    if (r > 1) out += row_sep;
    std::string line;
    for (int c = 1; c < sh.row_end(r); ++c) {
      if (!line.empty()) line += ' ';
      line += (c < sh.row_begin(r)) ? "." : t.at({r, c}).str();
    }
    out += line;
  }
  return out;
}

/// Single-line form with rows separated by " / ".
inline std::string render_compact(const Tableau& t) {
  std::string s = render(t, " / ");
  return s.empty() ? "()" : s;
}

inline nlohmann::ordered_json to_json(const Tableau& t) {
  nlohmann::ordered_json j;
  j["outer"] = t.shape().outer().parts();
  j["inner"] = t.shape().inner().parts();
  auto rows = nlohmann::ordered_json::array();
  for (auto& row : t.rows()) {
    auto jr = nlohmann::ordered_json::array();
    for (Entry e : row) jr.push_back(e.str());
    rows.push_back(jr);
  }
  j["rows"] = rows;
  j["n"] = t.max_letter();
  return j;
}

inline Tableau tableau_from_json(const nlohmann::ordered_json& j) {
  try {
    SkewShape shape(StrictPartition(j.at("outer").get<std::vector<int>>()),
                    StrictPartition(j.value("inner", std::vector<int>{})));
    std::vector<std::vector<Entry>> rows;
    for (auto& jr : j.at("rows")) {
      std::vector<Entry> row;
      for (auto& tok : jr) row.push_back(Entry::parse(tok.get<std::string>()));
      rows.push_back(std::move(row));
    }
    Tableau t = Tableau::from_rows(shape, rows, 0);
    t.set_max_letter(j.value("n", std::max(1, t.largest_value())));
    validate(t);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw TableauError(std::string("malformed tableau json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw TableauError(e.what());
  }
}

}  // namespace shtab

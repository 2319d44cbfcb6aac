#pragma once

#include <string>

#include "shtab/switching.hpp"

namespace shtab {

namespace detail {

inline void check_generator_index(const Tableau& t, int i, const char* what) {
  if (i < 1 || i > t.max_letter() - 1) {
    throw TableauError(std::string(what) + " index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(t.max_letter() - 1));
  }
}

}  // namespace detail

/// theta_i on letters: swaps i and i+1, keeping primes.
inline Entry theta(Entry e, int i) {
  if (e.value() == i) return e.with_value(i + 1);
  if (e.value() == i + 1) return e.with_value(i);
  return e;
}

/// Shifted Bender-Knuth move t_i: switch the bands (T^i, T^{i+1}), then
/// swap the letters i and i+1.
inline Tableau bk(const Tableau& t, int i, SwitchTrace* trace = nullptr) {
  detail::check_generator_index(t, i, "t");
  detail::ColoredBoard board = detail::board_for(t.shape());
  detail::load(board, t, 0);
  auto frame = [&](std::string label) {
    trace->push_back({std::move(label), detail::snapshot(board, t.shape(), t.max_letter()),
                      detail::cells_where(board, [i](const detail::Slot& s) { return s.letter == i; })});
  };
  detail::StepHook hook;
  if (trace) {
    frame("start");
    hook = [&](SwitchRule r, Cell, const detail::ColoredBoard&) { frame(rule_name(r)); };
  }
  detail::switch_bands(board, {0, i}, {0, i + 1}, hook);
  Tableau out = detail::snapshot(board, t.shape(), t.max_letter());
  for (Cell c : out.shape().cells()) out.set(c, theta(out.at(c), i));
  out = canonicalize(std::move(out));
  if (trace) trace->push_back({"theta" + std::to_string(i), out, {}});
  return out;
}

/// p_i = t_i t_{i-1} ... t_1 (t_1 acts first).
inline Tableau promotion(const Tableau& t, int i) {
  detail::check_generator_index(t, i, "p");
  Tableau out = t;
  for (int k = 1; k <= i; ++k) out = bk(out, k);
  return out;
}

/// q_i = t_1 (t_2 t_1) ... (t_i ... t_1), i.e. p_1 p_2 ... p_i with p_i
/// acting first.
inline Tableau q(const Tableau& t, int i) {
  detail::check_generator_index(t, i, "q");
  Tableau out = t;
  for (int k = i; k >= 1; --k) out = promotion(out, k);
  return out;
}

/// q_{i,j} = q_{j-1} q_{j-i} q_{j-1} for i < j.
inline Tableau q_interval(const Tableau& t, int i, int j) {
  if (i < 1 || j <= i || j > t.max_letter()) throw TableauError("q_{i,j} needs 1 <= i < j <= n");
  return q(q(q(t, j - 1), j - i), j - 1);
}

}  // namespace shtab

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shtab {

/// A letter of the primed alphabet 1' < 1 < 2' < 2 < ... , or the empty entry.
///
/// Stored as a single code: k' -> 2k-1, k -> 2k, empty -> 0, so the natural
/// integer order on codes is the primed total order.
class Entry {
 public:
  constexpr Entry() noexcept = default;

  static constexpr Entry plain(int k) { return Entry(2 * k); }
  static constexpr Entry primed(int k) { return Entry(2 * k - 1); }
  static constexpr Entry make(int k, bool is_primed) {
    return is_primed ? primed(k) : plain(k);
  }
  static constexpr Entry from_code(int code) { return Entry(code); }

  constexpr bool empty() const noexcept { return code_ == 0; }
  constexpr int code() const noexcept { return code_; }
  /// The unprimed value k of k or k'.
  constexpr int value() const noexcept { return (code_ + 1) / 2; }
  constexpr bool is_primed() const noexcept { return (code_ & 1) != 0; }

  constexpr Entry toggled() const { return make(value(), !is_primed()); }
  constexpr Entry with_value(int k) const { return make(k, is_primed()); }
  constexpr Entry with_prime(bool p) const { return make(value(), p); }

  friend constexpr auto operator<=>(Entry, Entry) = default;

  std::string str() const {
    if (empty()) return ".";
    std::string s = std::to_string(value());
    if (is_primed()) s += '\'';
    return s;
  }

  /// Parses "3" or "3'". Throws std::invalid_argument on anything else.
  static Entry parse(std::string_view tok) {
    bool p = false;
    if (!tok.empty() && tok.back() == '\'') {
      p = true;
      tok.remove_suffix(1);
    }
    if (tok.empty() || tok.size() > 6) {
      throw std::invalid_argument("malformed cell token");
    }
    int k = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("malformed cell token");
      k = 10 * k + (ch - '0');
    }
    if (k < 1) throw std::invalid_argument("malformed cell token: letters start at 1");
    return make(k, p);
  }

 private:
  constexpr explicit Entry(int code) : code_(code) {}
  int code_ = 0;
};

}  // namespace shtab

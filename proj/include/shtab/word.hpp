#pragma once

// Generator words and relation schemata.
//
// A word is a whitespace-separated product of generators, evaluated
// rightmost-first:  "t1 t2 t1",  "(t1 t2)^6",  "q:2,4 eta:1,3",  "e".
//
// Generators:
//   t<i>  p<i>  q<i>    Bender-Knuth move, promotion, q_i
//   q:<i>,<j>           q_{i,j}
//   eta:<i>,<j>         eta_{i,j} (jeu de taquin reversal of the band i..j)
//   sigma<i>            eta_{i,i+1}
//   evac  evac<k>       switching evacuation of a straight tableau (evac_k)
//   evac~ evac~<k>      the same run on any shape; evac~:<i>,<j> on a band
//   e                   identity
//
// A single index may be written directly after the name (t2) or after a
// colon (t:2). In a schema, any index may be a braced expression over
// variables: "t{i} t{j} = t{j} t{i} : |i-j| > 1". The variable n is the
// alphabet bound; every other variable ranges over 1..n.
//
// Schema:  LHS = RHS [: constraint]     equality of the two actions
//          LHS ~= RHS [: constraint]    equality up to Knuth equivalence
// The constraint separator is a colon preceded by whitespace. Constraints
// combine comparisons (chains allowed: i+1 < j < k <= n) with "," "and"
// "&&" "or", and use + - * and |x|.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shtab/errors.hpp"

namespace shtab {

/// Thrown for malformed words, schemata and index expressions.
class SyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Binding = std::map<std::string, int>;

// ---------------------------------------------------------------------------
// Index expressions

class Expr {
 public:
  enum class Op { num, var, neg, abs, add, sub, mul, lt, le, gt, ge, eq, ne, land, lor };

  static Expr parse(const std::string& text);

  int eval(const Binding& b) const {
    switch (op_) {
      case Op::num: return value_;
      case Op::var: {
        auto it = b.find(name_);
        if (it == b.end()) throw SyntaxError("unbound variable '" + name_ + "'");
        return it->second;
      }
      case Op::neg: return -arg(0).eval(b);
      case Op::abs: return std::abs(arg(0).eval(b));
      case Op::land: return arg(0).eval(b) && arg(1).eval(b);
      case Op::lor: return arg(0).eval(b) || arg(1).eval(b);
      default: break;
    }
    int x = arg(0).eval(b);
    int y = arg(1).eval(b);
    switch (op_) {
      case Op::add: return x + y;
      case Op::sub: return x - y;
      case Op::mul: return x * y;
      case Op::lt: return x < y;
      case Op::le: return x <= y;
      case Op::gt: return x > y;
      case Op::ge: return x >= y;
      case Op::eq: return x == y;
      case Op::ne: return x != y;
      default: return 0;
    }
  }

  void collect_vars(std::set<std::string>& out) const {
    if (op_ == Op::var) out.insert(name_);
    for (auto& a : args_) a->collect_vars(out);
  }

  static Expr number(int v) {
    Expr e;
    e.op_ = Op::num;
    e.value_ = v;
    return e;
  }
  static Expr variable(std::string name) {
    Expr e;
    e.op_ = Op::var;
    e.name_ = std::move(name);
    return e;
  }
  static Expr node(Op op, Expr a) {
    Expr e;
    e.op_ = op;
    e.args_.push_back(std::make_shared<Expr>(std::move(a)));
    return e;
  }
  static Expr node(Op op, Expr a, Expr b) {
    Expr e = node(op, std::move(a));
    e.args_.push_back(std::make_shared<Expr>(std::move(b)));
    return e;
  }

 private:
  const Expr& arg(std::size_t k) const { return *args_[k]; }

  Op op_ = Op::num;
  int value_ = 0;
  std::string name_;
  std::vector<std::shared_ptr<const Expr>> args_;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  Expr parse_all() {
    Expr e = parse_or();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("in expression '" + s_ + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) != 0) return false;
    // "and"/"or" must be whole words
    if (std::isalpha(static_cast<unsigned char>(tok[0])) && pos_ + tok.size() < s_.size() &&
        std::isalnum(static_cast<unsigned char>(s_[pos_ + tok.size()]))) {
      return false;
    }
    pos_ += tok.size();
    return true;
  }

  Expr parse_or() {
    Expr e = parse_and();
    while (accept("or")) e = Expr::node(Expr::Op::lor, e, parse_and());
    return e;
  }

  Expr parse_and() {
    Expr e = parse_compare();
    while (accept("&&") || accept("and") || accept(",")) e = Expr::node(Expr::Op::land, e, parse_compare());
    return e;
  }

  std::optional<Expr::Op> compare_op() {
    static const std::pair<const char*, Expr::Op> ops[] = {
        {"<=", Expr::Op::le}, {">=", Expr::Op::ge}, {"==", Expr::Op::eq}, {"!=", Expr::Op::ne},
        {"<", Expr::Op::lt},  {">", Expr::Op::gt},  {"=", Expr::Op::eq}};
    for (auto& [tok, op] : ops) {
      if (accept(tok)) return op;
    }
    return std::nullopt;
  }

  // a < b <= c  means  a < b and b <= c
  Expr parse_compare() {
    Expr left = parse_sum();
    std::optional<Expr> chain;
    while (auto op = compare_op()) {
      Expr right = parse_sum();
      Expr link = Expr::node(*op, left, right);
      chain = chain ? Expr::node(Expr::Op::land, *chain, link) : link;
      left = right;
    }
    return chain ? *chain : left;
  }

  Expr parse_sum() {
    Expr e = parse_product();
    while (true) {
      if (accept("+")) {
        e = Expr::node(Expr::Op::add, e, parse_product());
      } else if (accept("-")) {
        e = Expr::node(Expr::Op::sub, e, parse_product());
      } else {
        return e;
      }
    }
  }

  Expr parse_product() {
    Expr e = parse_unary();
    while (accept("*")) e = Expr::node(Expr::Op::mul, e, parse_unary());
    return e;
  }

  Expr parse_unary() {
    if (accept("-")) return Expr::node(Expr::Op::neg, parse_unary());
    return parse_primary();
  }

  Expr parse_primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Expr e = parse_or();
      if (!accept(")")) fail("missing ')'");
      return e;
    }
    if (ch == '|') {
      ++pos_;
      Expr e = parse_sum();
      if (!accept("|")) fail("missing closing '|'");
      return Expr::node(Expr::Op::abs, e);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_++] - '0');
        if (v > 1000000) fail("number too large");
      }
      return Expr::number(v);
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
      if (name == "and" || name == "or") fail("misplaced '" + name + "'");
      return Expr::variable(name);
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr Expr::parse(const std::string& text) { return detail::ExprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Generators

enum class GenKind { identity, t, p, q, q_interval, eta, sigma, evac, evac_skew };

struct Generator {
  GenKind kind = GenKind::identity;
  std::vector<int> idx;

  std::string str() const {
    auto one = [&](const char* name) { return name + std::to_string(idx[0]); };
    auto two = [&](const char* name) {
      return std::string(name) + ":" + std::to_string(idx[0]) + "," + std::to_string(idx[1]);
    };
    switch (kind) {
      case GenKind::identity: return "e";
      case GenKind::t: return one("t");
      case GenKind::p: return one("p");
      case GenKind::q: return one("q");
      case GenKind::q_interval: return two("q");
      case GenKind::eta: return two("eta");
      case GenKind::sigma: return one("sigma");
      case GenKind::evac: return idx.empty() ? "evac" : one("evac");
      case GenKind::evac_skew:
        if (idx.empty()) return "evac~";
        return idx.size() == 1 ? one("evac~") : two("evac~");
    }
    return "?";
  }

  /// Why the indices are out of range for alphabet bound n, if they are.
  std::optional<std::string> range_error(int n) const {
    auto bad = [&](const std::string& need) {
      return std::optional<std::string>(str() + " needs " + need + " (n = " + std::to_string(n) + ")");
    };
    switch (kind) {
      case GenKind::identity: return std::nullopt;
      case GenKind::t:
      case GenKind::p:
      case GenKind::q:
      case GenKind::sigma:
        if (idx[0] < 1 || idx[0] > n - 1) return bad("1 <= i <= n-1");
        return std::nullopt;
      case GenKind::q_interval:
      case GenKind::eta:
        if (idx[0] < 1 || idx[0] >= idx[1] || idx[1] > n) return bad("1 <= i < j <= n");
        return std::nullopt;
      case GenKind::evac:
        if (!idx.empty() && (idx[0] < 1 || idx[0] > n)) return bad("1 <= k <= n");
        return std::nullopt;
      case GenKind::evac_skew:
        if (idx.size() == 1 && (idx[0] < 1 || idx[0] > n)) return bad("1 <= k <= n");
        if (idx.size() == 2 && (idx[0] < 1 || idx[0] > idx[1] || idx[1] > n)) return bad("1 <= i <= j <= n");
        return std::nullopt;
    }
    return std::nullopt;
  }

  friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;  ///< leftmost symbol first; acts last

inline std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (auto& g : w) {
    if (!s.empty()) s += ' ';
    s += g.str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Word templates

namespace detail {

struct GenTemplate {
  std::string name;
  std::vector<Expr> idx;
};

struct WordItem;
using WordTemplate = std::vector<WordItem>;

struct WordItem {
  std::optional<GenTemplate> gen;  // a generator, or
  WordTemplate group;              // a parenthesised group
  int power = 1;
};

inline bool known_generator(const std::string& name, std::size_t nidx) {
  if (name == "e") return nidx == 0;
  if (name == "t" || name == "p" || name == "sigma") return nidx == 1;
  if (name == "q") return nidx == 1 || nidx == 2;
  if (name == "eta") return nidx == 2;
  if (name == "evac") return nidx <= 1;
  if (name == "evac~") return nidx <= 2;
  return false;
}

class WordParser {
 public:
  explicit WordParser(const std::string& s) : s_(s) {}

  WordTemplate parse_all() {
    WordTemplate w = parse_seq();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("in word '" + s_ + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  WordTemplate parse_seq() {
    WordTemplate out;
    while (true) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') return out;
      WordItem item;
      if (s_[pos_] == '(') {
        ++pos_;
        item.group = parse_seq();
        if (!at(')')) fail("missing ')'");
        ++pos_;
      } else {
        item.gen = parse_gen();
      }
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("'^' needs a number");
        item.power = std::stoi(s_.substr(start, pos_ - start));
        if (item.power > 10000) fail("power too large");
      }
      out.push_back(std::move(item));
    }
  }

  Expr parse_braced() {
    std::size_t close = s_.find('}', pos_);
    if (close == std::string::npos) fail("missing '}'");
    Expr e = Expr::parse(s_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    return e;
  }

  Expr parse_index() {
    if (pos_ < s_.size() && s_[pos_] == '{') return parse_braced();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an index");
    return Expr::number(std::stoi(s_.substr(start, pos_ - start)));
  }

  GenTemplate parse_gen() {
    GenTemplate g;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) g.name += s_[pos_++];
    if (pos_ < s_.size() && s_[pos_] == '~') g.name += s_[pos_++];
    if (g.name.empty()) fail("expected a generator");
    if (pos_ < s_.size() && s_[pos_] == ':') {
      ++pos_;
      g.idx.push_back(parse_index());
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        g.idx.push_back(parse_index());
      }
    } else if (pos_ < s_.size() &&
               (s_[pos_] == '{' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
      g.idx.push_back(parse_index());
    }
    if (!known_generator(g.name, g.idx.size())) {
      fail("unknown generator '" + g.name + "' with " + std::to_string(g.idx.size()) + " indices");
    }
    return g;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline Generator instantiate(const GenTemplate& g, const Binding& b) {
  std::vector<int> idx;
  for (auto& e : g.idx) idx.push_back(e.eval(b));
  GenKind kind = GenKind::identity;
  if (g.name == "t") kind = GenKind::t;
  else if (g.name == "p") kind = GenKind::p;
  else if (g.name == "q") kind = idx.size() == 1 ? GenKind::q : GenKind::q_interval;
  else if (g.name == "eta") kind = GenKind::eta;
  else if (g.name == "sigma") kind = GenKind::sigma;
  else if (g.name == "evac") kind = GenKind::evac;
  else if (g.name == "evac~") kind = GenKind::evac_skew;
  return {kind, std::move(idx)};
}

inline void expand(const WordTemplate& w, const Binding& b, Word& out) {
  for (auto& item : w) {
    for (int k = 0; k < item.power; ++k) {
      if (item.gen) {
        Generator g = instantiate(*item.gen, b);
        if (g.kind != GenKind::identity) out.push_back(std::move(g));
      } else {
        expand(item.group, b, out);
      }
    }
  }
}

inline void collect_vars(const WordTemplate& w, std::set<std::string>& out) {
  for (auto& item : w) {
    if (item.gen) {
      for (auto& e : item.gen->idx) e.collect_vars(out);
    } else {
      collect_vars(item.group, out);
    }
  }
}

}  // namespace detail

/// Parses a word with literal indices.
inline Word parse_word(const std::string& text) {
  Word out;
  detail::expand(detail::WordParser(text).parse_all(), {}, out);
  return out;
}

/// Parses a single generator ("t2", "q:1,3").
inline Generator parse_generator(const std::string& text) {
  Word w = parse_word(text);
  if (w.size() > 1) throw SyntaxError("expected one generator, got '" + text + "'");
  return w.empty() ? Generator{} : w[0];
}

// ---------------------------------------------------------------------------
// Relation schemata

enum class Comparison { equal, knuth };

class RelationSchema {
 public:
  static RelationSchema parse(const std::string& text) {
    RelationSchema s;
    s.text_ = text;
    std::string body = text;
    for (std::size_t k = 1; k < text.size(); ++k) {
      if (text[k] == ':' && std::isspace(static_cast<unsigned char>(text[k - 1]))) {
        body = text.substr(0, k);
        std::string cond = text.substr(k + 1);
        if (cond.find_first_not_of(" \t") == std::string::npos) throw SyntaxError("empty constraint");
        s.constraint_ = Expr::parse(cond);
        break;
      }
    }
    std::size_t eq = body.find("~=");
    std::size_t len = 2;
    if (eq != std::string::npos) {
      s.comparison_ = Comparison::knuth;
    } else {
      eq = body.find('=');
      len = 1;
      if (eq == std::string::npos) throw SyntaxError("schema '" + text + "' has no '='");
    }
    s.lhs_ = detail::WordParser(body.substr(0, eq)).parse_all();
    s.rhs_ = detail::WordParser(body.substr(eq + len)).parse_all();
    std::set<std::string> vars;
    detail::collect_vars(s.lhs_, vars);
    detail::collect_vars(s.rhs_, vars);
    if (s.constraint_) s.constraint_->collect_vars(vars);
    vars.erase("n");
    s.vars_.assign(vars.begin(), vars.end());
    return s;
  }

  const std::string& text() const { return text_; }
  const std::vector<std::string>& variables() const { return vars_; }
  Comparison comparison() const { return comparison_; }

  bool admits(const Binding& b) const { return !constraint_ || constraint_->eval(b) != 0; }

  Word lhs(const Binding& b) const {
    Word w;
    detail::expand(lhs_, b, w);
    return w;
  }
  Word rhs(const Binding& b) const {
    Word w;
    detail::expand(rhs_, b, w);
    return w;
  }

  /// Every binding of the variables to 1..n (plus n itself) that satisfies
  /// the constraint and puts every generator index in range, in
  /// lexicographic order of the sorted variable names.
  std::vector<Binding> instances(int n) const {
    std::vector<Binding> out;
    Binding b{{"n", n}};
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == vars_.size()) {
        if (!admits(b)) return;
        for (auto* w : {&lhs_, &rhs_}) {
          Word word;
          detail::expand(*w, b, word);
          for (auto& g : word) {
            if (g.range_error(n)) return;
          }
        }
        out.push_back(b);
        return;
      }
      for (int v = 1; v <= n; ++v) {
        b[vars_[k]] = v;
        self(self, k + 1);
      }
      b.erase(vars_[k]);
    };
    rec(rec, 0);
    return out;
  }

 private:
  std::string text_;
  detail::WordTemplate lhs_;
  detail::WordTemplate rhs_;
  std::optional<Expr> constraint_;
  Comparison comparison_ = Comparison::equal;
  std::vector<std::string> vars_;
};

inline std::string binding_str(const Binding& b) {
  std::string s;
  for (auto& [k, v] : b) {
    if (k == "n") continue;
    if (!s.empty()) s += ", ";
    s += k + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace shtab

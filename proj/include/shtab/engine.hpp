#pragma once

// Action of generator words on tableau families, relation checking,
// counterexample search, orbits and dual equivalence classes.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "shtab/bender_knuth.hpp"
#include "shtab/enumeration.hpp"
#include "shtab/jdt.hpp"
#include "shtab/parallel.hpp"
#include "shtab/switching.hpp"
#include "shtab/word.hpp"

namespace shtab {

// ---------------------------------------------------------------------------
// Evaluation on a single tableau

inline void check_range(const Generator& g, int n) {
  if (auto err = g.range_error(n)) throw TableauError(*err);
}

inline Tableau apply_generator(const Generator& g, const Tableau& t) {
  check_range(g, t.max_letter());
  const auto& x = g.idx;
  switch (g.kind) {
    case GenKind::identity: return t;
    case GenKind::t: return bk(t, x[0]);
    case GenKind::p: return promotion(t, x[0]);
    case GenKind::q: return q(t, x[0]);
    case GenKind::q_interval: return q_interval(t, x[0], x[1]);
    case GenKind::eta: return eta(t, x[0], x[1]);
    case GenKind::sigma: return eta(t, x[0], x[0] + 1);
    case GenKind::evac: return x.empty() ? evac_switch(t) : evac_k_switch(t, x[0]);
    case GenKind::evac_skew:
      if (x.empty()) return evac_skew(t);
      if (x.size() == 1) return evac_k_skew(t, x[0]);
      return evac_interval_skew(t, x[0], x[1]);
  }
  return t;
}

/// Applies the word rightmost symbol first.
inline Tableau eval_word(const Word& w, const Tableau& t) {
  for (auto& g : w) check_range(g, t.max_letter());
  Tableau out = t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_generator(*it, out);
  return out;
}

inline std::string knuth_key(const Tableau& t) {
  Tableau r = rectify(t).tableau;
  return r.shape().str() + "|" + r.key();
}

// ---------------------------------------------------------------------------
// Permutation tables over a family

using ActionTable = std::vector<std::uint32_t>;

/// Each generator becomes the permutation of family indices it induces.
/// Tables are computed on first use and cached. t, p, q and q_{i,j} are
/// composed from the t tables, exactly as they are defined.
class FamilyAction {
 public:
  explicit FamilyAction(const TableauFamily& family, unsigned jobs = default_jobs())
      : family_(family), jobs_(jobs) {}

  const TableauFamily& family() const { return family_; }
  std::size_t size() const { return family_.size(); }

  const ActionTable& table(const Generator& g) {
    std::string key = g.str();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    check_range(g, family_.max_letter());
    ActionTable tab = build(g);
    return cache_.emplace(key, std::move(tab)).first->second;
  }

  ActionTable identity() const {
    ActionTable id(size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<std::uint32_t>(k);
    return id;
  }

  /// Table of the word: out[k] = index of w(family[k]).
  ActionTable word_table(const Word& w) {
    ActionTable out = identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = then(out, table(*it));
    return out;
  }

  /// Rectification key of every member, for comparisons up to Knuth equivalence.
  const std::vector<std::string>& knuth_keys() {
    if (keys_.empty() && size() > 0) {
      keys_.resize(size());
      parallel_for(size(), jobs_, [&](std::size_t k) { keys_[k] = knuth_key(family_[k]); });
    }
    return keys_;
  }

 private:
  // a followed by b
  static ActionTable then(const ActionTable& a, const ActionTable& b) {
    ActionTable out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = b[a[k]];
    return out;
  }

  ActionTable compose_t(const std::vector<int>& ts) {
    // ts lists t indices in the order they act
    ActionTable out = identity();
    for (int i : ts) out = then(out, table({GenKind::t, {i}}));
    return out;
  }

  static std::vector<int> p_order(int i) {
    std::vector<int> ts;
    for (int k = 1; k <= i; ++k) ts.push_back(k);
    return ts;
  }
  static std::vector<int> q_order(int i) {
    std::vector<int> ts;
    for (int k = i; k >= 1; --k) {
      auto p = p_order(k);
      ts.insert(ts.end(), p.begin(), p.end());
    }
    return ts;
  }

  ActionTable build(const Generator& g) {
    const auto& x = g.idx;
    switch (g.kind) {
      case GenKind::identity: return identity();
      case GenKind::p: return compose_t(p_order(x[0]));
      case GenKind::q: return compose_t(q_order(x[0]));
      case GenKind::q_interval: {
        const ActionTable& outer = table({GenKind::q, {x[1] - 1}});
        const ActionTable& inner = table({GenKind::q, {x[1] - x[0]}});
        return then(then(outer, inner), outer);
      }
      default: break;
    }
    ActionTable out(size());
    parallel_for(size(), jobs_, [&](std::size_t k) {
      Tableau image = apply_generator(g, family_[k]);
      auto idx = family_.index_of(image);
      if (!idx) {
        throw IntegrityError(g.str() + " maps " + family_[k].key() + " outside the family");
      }
      out[k] = static_cast<std::uint32_t>(*idx);
    });
    return out;
  }

  const TableauFamily& family_;
  unsigned jobs_;
  std::map<std::string, ActionTable> cache_;
  std::vector<std::string> keys_;
};

// ---------------------------------------------------------------------------
// Verdicts

struct Counterexample {
  std::string relation;  ///< schema text
  Binding binding;
  Word lhs_word;
  Word rhs_word;
  Comparison comparison = Comparison::equal;
  std::size_t member = 0;  ///< index in the family
  Tableau tableau;
  Tableau lhs;
  Tableau rhs;
};

struct Verdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t instances_checked = 0;  ///< (binding, member) pairs compared
  std::uint64_t bindings = 0;           ///< index instantiations used
  std::uint64_t mismatches = 0;         ///< counted in exhaustive mode
};

struct VerifyOptions {
  unsigned jobs = default_jobs();
  bool exhaustive = false;  ///< keep counting after the first counterexample
};

/// Checks the schema on every member for every admissible binding, bindings
/// in lexicographic order and members in family order; the first mismatch
/// found in that order is the counterexample.
inline Verdict verify_relation(const RelationSchema& schema, FamilyAction& action,
                               const VerifyOptions& opts = {}) {
  Verdict v;
  const TableauFamily& fam = action.family();
  for (const Binding& b : schema.instances(fam.max_letter())) {
    ++v.bindings;
    Word lw = schema.lhs(b);
    Word rw = schema.rhs(b);
    ActionTable lt = action.word_table(lw);
    ActionTable rt = action.word_table(rw);
    const std::vector<std::string>* keys = nullptr;
    if (schema.comparison() == Comparison::knuth) keys = &action.knuth_keys();
    for (std::size_t k = 0; k < fam.size(); ++k) {
      ++v.instances_checked;
      bool same = keys ? (*keys)[lt[k]] == (*keys)[rt[k]] : lt[k] == rt[k];
      if (same) continue;
      ++v.mismatches;
      if (v.holds) {
        v.holds = false;
        v.counterexample = Counterexample{schema.text(), b, lw, rw, schema.comparison(), k,
                                          fam[k], fam[lt[k]], fam[rt[k]]};
      }
      if (!opts.exhaustive) return v;
    }
  }
  return v;
}

inline Verdict verify_relation(const RelationSchema& schema, const TableauFamily& family,
                               const VerifyOptions& opts = {}) {
  FamilyAction action(family, opts.jobs);
  return verify_relation(schema, action, opts);
}

/// Re-evaluates a counterexample without the tables; true if it is still a
/// mismatch with the recorded results.
inline bool replays(const Counterexample& c) {
  Tableau l = eval_word(c.lhs_word, c.tableau);
  Tableau r = eval_word(c.rhs_word, c.tableau);
  if (!(l == c.lhs) || !(r == c.rhs)) return false;
  return c.comparison == Comparison::knuth ? knuth_key(l) != knuth_key(r) : !(l == r);
}

// ---------------------------------------------------------------------------
// Shape universes and search

enum class ShapeClass { straight, skew, all };

inline std::string shape_class_name(ShapeClass c) {
  switch (c) {
    case ShapeClass::straight: return "straight";
    case ShapeClass::skew: return "skew";
    case ShapeClass::all: return "all";
  }
  return "?";
}

inline ShapeClass parse_shape_class(const std::string& s) {
  if (s == "straight") return ShapeClass::straight;
  if (s == "skew") return ShapeClass::skew;
  if (s == "all") return ShapeClass::all;
  throw TableauError("shape class must be straight, skew or all, got '" + s + "'");
}

/// Nonempty shapes of a class with outer first part <= largest and at most
/// max_cells cells, in shape order (cells, outer, inner).
struct ShapeUniverse {
  ShapeClass cls = ShapeClass::all;
  int largest = 4;
  int max_cells = 5;

  std::vector<SkewShape> shapes() const {
    std::vector<SkewShape> out;
    if (cls != ShapeClass::skew) {
      for (auto& s : straight_shapes(largest, max_cells)) {
        if (s.size() > 0) out.push_back(s);
      }
    }
    if (cls != ShapeClass::straight) {
      auto skew = proper_skew_shapes(largest, max_cells);
      out.insert(out.end(), skew.begin(), skew.end());
    }
    std::sort(out.begin(), out.end(), shape_less);
    return out;
  }

  std::string str() const {
    return shape_class_name(cls) + " shapes, first part <= " + std::to_string(largest) + ", <= " +
           std::to_string(max_cells) + " cells";
  }
};

struct SearchBudget {
  std::uint64_t max_instances = 0;  ///< 0: unlimited
  std::size_t max_family = 0;       ///< 0: unlimited
};

struct SearchResult {
  Verdict verdict;
  std::optional<SkewShape> shape;  ///< family of the counterexample
  std::size_t shapes_checked = 0;
  std::size_t families_skipped = 0;  ///< empty families
  bool budget_exhausted = false;
  std::string budget_note;
};

/// Walks the universe in shape order and stops at the first counterexample,
/// which is therefore minimal by (cells, shape, binding, family index).
inline SearchResult search_counterexample(const RelationSchema& schema, const ShapeUniverse& universe,
                                          int n, const SearchBudget& budget = {},
                                          const VerifyOptions& opts = {}) {
  SearchResult res;
  for (const SkewShape& shape : universe.shapes()) {
    TableauFamily fam = enumerate(shape, n);
    if (fam.empty()) {
      ++res.families_skipped;
      continue;
    }
    if (budget.max_family && fam.size() > budget.max_family) {
      res.budget_exhausted = true;
      res.budget_note = "family " + shape.str() + " has " + std::to_string(fam.size()) +
                        " members, over the budget of " + std::to_string(budget.max_family);
      return res;
    }
    VerifyOptions o = opts;
    o.exhaustive = false;
    Verdict v = verify_relation(schema, fam, o);
    ++res.shapes_checked;
    res.verdict.instances_checked += v.instances_checked;
    res.verdict.bindings += v.bindings;
    if (!v.holds) {
      res.verdict.holds = false;
      res.verdict.mismatches = 1;
      res.verdict.counterexample = std::move(v.counterexample);
      res.shape = shape;
      return res;
    }
    if (budget.max_instances && res.verdict.instances_checked > budget.max_instances) {
      res.budget_exhausted = true;
      res.budget_note = "instance budget of " + std::to_string(budget.max_instances) +
                        " spent after " + shape.str();
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Cactus group realizations

enum class CactusRoute { eta, q, evac };

inline std::string route_name(CactusRoute r) {
  switch (r) {
    case CactusRoute::eta: return "eta";
    case CactusRoute::q: return "q";
    case CactusRoute::evac: return "evac";
  }
  return "?";
}

/// Image of s_{a,b} under the route, with a and b index expressions.
inline std::string cactus_image(CactusRoute r, const std::string& a, const std::string& b) {
  switch (r) {
    case CactusRoute::eta: return "eta:{" + a + "},{" + b + "}";
    case CactusRoute::q: return "q:{" + a + "},{" + b + "}";
    case CactusRoute::evac:
      return "evac{" + b + "} evac{" + b + "-(" + a + ")+1} evac{" + b + "}";
  }
  return "";
}

/// The cactus relations for the route's images of s_{i,j}, followed by
/// s_{i,j} = s_{1,j} s_{1,j-i+1} s_{1,j}.
inline std::vector<RelationSchema> cactus_relations(CactusRoute r) {
  auto s = [r](const char* a, const char* b) { return cactus_image(r, a, b); };
  std::vector<std::string> texts = {
      "(" + s("i", "j") + ")^2 = e : i < j",
      s("i", "j") + " " + s("k", "l") + " = " + s("k", "l") + " " + s("i", "j") + " : i < j < k < l",
      s("i", "j") + " " + s("k", "l") + " = " + s("i+j-l", "i+j-k") + " " + s("i", "j") +
          " : i <= k < l <= j",
      s("i", "j") + " = " + s("1", "j") + " " + s("1", "j-i+1") + " " + s("1", "j") + " : i < j",
  };
  std::vector<RelationSchema> out;
  for (auto& t : texts) out.push_back(RelationSchema::parse(t));
  return out;
}

/// Checks every cactus relation on the family; the first failing relation
/// supplies the counterexample.
inline Verdict verify_cactus_action(CactusRoute route, const TableauFamily& family,
                                    const VerifyOptions& opts = {}) {
  if (route != CactusRoute::eta && !family.shape().straight()) {
    throw TableauError("the " + route_name(route) + " route acts on straight shapes only");
  }
  FamilyAction action(family, opts.jobs);
  Verdict total;
  for (auto& schema : cactus_relations(route)) {
    Verdict v = verify_relation(schema, action, opts);
    total.instances_checked += v.instances_checked;
    total.bindings += v.bindings;
    total.mismatches += v.mismatches;
    if (!v.holds && total.holds) {
      total.holds = false;
      total.counterexample = std::move(v.counterexample);
      if (!opts.exhaustive) return total;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Orbits

struct OrbitEdge {
  std::size_t from;
  std::size_t to;
  std::string label;
};

struct OrbitGraph {
  std::vector<Tableau> vertices;  ///< breadth-first order from the seed
  std::vector<OrbitEdge> edges;
};

/// Closure of the seed under the generators. Vertices are numbered in
/// breadth-first order, generators tried in the given order.
inline OrbitGraph orbit_graph(const Tableau& seed, const std::vector<Generator>& gens,
                              std::size_t max_vertices = 100000) {
  for (auto& g : gens) check_range(g, seed.max_letter());
  OrbitGraph graph;
  std::unordered_map<std::string, std::size_t> index;
  auto add = [&](const Tableau& t) {
    auto [it, fresh] = index.emplace(t.key(), graph.vertices.size());
    if (fresh) {
      if (graph.vertices.size() >= max_vertices) {
        throw CapacityError("orbit exceeds " + std::to_string(max_vertices) + " vertices");
      }
      graph.vertices.push_back(t);
    }
    return it->second;
  };
  add(seed);
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    for (auto& g : gens) {
      Tableau image = apply_generator(g, graph.vertices[k]);
      std::size_t to = add(image);
      graph.edges.push_back({k, to, g.str()});
    }
  }
  return graph;
}

// ---------------------------------------------------------------------------
// Dual equivalence classes

struct DualClass {
  std::vector<std::size_t> members;  ///< family indices, increasing
  StrictPartition rectified_shape;
};

/// Partition of a family into dual equivalence classes, ordered by their
/// smallest member.
inline std::vector<DualClass> components_by_dual_equivalence(const TableauFamily& family,
                                                             int max_cells = 6) {
  if (family.shape().size() > max_cells) {
    throw CapacityError("dual equivalence classes are computed for at most " +
                        std::to_string(max_cells) + " cells");
  }
  std::vector<DualClass> classes;
  for (std::size_t k = 0; k < family.size(); ++k) {
    StrictPartition rs = rectify(family[k]).tableau.shape().outer();
    bool placed = false;
    for (auto& c : classes) {
      if (c.rectified_shape != rs) continue;
      if (dual_equivalent(family[c.members.front()], family[k], max_cells)) {
        c.members.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({{k}, rs});
  }
  return classes;
}

}  // namespace shtab

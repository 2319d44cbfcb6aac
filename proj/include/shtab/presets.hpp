#pragma once

// Named relation suites. Each relation carries the shapes it is checked on
// and whether it is expected to hold there; a relation expected to fail
// passes when a counterexample turns up.

#include <optional>
#include <string>
#include <vector>

#include "shtab/engine.hpp"

namespace shtab {

struct PresetRelation {
  std::string schema;
  ShapeUniverse universe;
  bool expect_holds = true;
  int min_n = 1;  ///< skipped for smaller alphabets
};

struct Preset {
  std::string name;
  std::string summary;
  int min_n = 2;
  std::vector<PresetRelation> relations;
};

/// Straight shapes inside the staircase of size n.
inline ShapeUniverse staircase_universe(int n) {
  return {ShapeClass::straight, n, n * (n + 1) / 2};
}

/// Skew shapes with at most 5 cells and first part at most 5.
inline ShapeUniverse small_skew_universe() { return {ShapeClass::skew, 5, 5}; }

inline std::vector<std::string> preset_names() {
  return {"sbk-core", "cactus-q", "cactus-eta", "evac-agreement", "non-relations"};
}

inline std::optional<Preset> find_preset(const std::string& name, int n) {
  const ShapeUniverse straight = staircase_universe(n);
  const ShapeUniverse skew = small_skew_universe();
  auto both = [&](const std::string& s) {
    return std::vector<PresetRelation>{{s, straight, true}, {s, skew, true}};
  };
  auto add = [](std::vector<PresetRelation>& to, std::vector<PresetRelation> from) {
    to.insert(to.end(), from.begin(), from.end());
  };

  Preset p;
  p.name = name;
  if (name == "sbk-core") {
    p.summary = "t_i involutions and commutations, (t_i q_{j,k})^2 = 1 on straight shapes, t_i in terms of q_i";
    add(p.relations, both("t{i} t{i} = e"));
    add(p.relations, both("t{i} t{j} = t{j} t{i} : |i-j| > 1"));
    p.relations.push_back({"(t{i} q:{j},{k})^2 = e : i+1 < j < k", straight, true});
    add(p.relations, both("t1 = q1"));
    add(p.relations, both("t2 = q1 q2 q1"));
    add(p.relations, both("t{i} = q{i-1} q{i} q{i-1} q{i-2} : i > 2"));
  } else if (name == "cactus-q" || name == "cactus-eta") {
    CactusRoute route = name == "cactus-q" ? CactusRoute::q : CactusRoute::eta;
    p.summary = name == "cactus-q" ? "cactus relations for q_{i,j} on straight shapes"
                                   : "cactus relations for eta_{i,j} on straight and skew shapes";
    for (auto& r : cactus_relations(route)) {
      p.relations.push_back({r.text(), straight, true});
      if (route == CactusRoute::eta) p.relations.push_back({r.text(), skew, true});
    }
  } else if (name == "evac-agreement") {
    p.summary = "evacuation by switching, by jeu de taquin and by q_i; promotion products";
    p.relations.push_back({"evac = eta:1,{n}", straight, true});
    p.relations.push_back({"evac = q{n-1}", straight, true});
    p.relations.push_back({"evac{k} = eta:1,{k} : k >= 2", straight, true});
    p.relations.push_back({"evac{k} = q{k-1} : k >= 2", straight, true});
    p.relations.push_back({"q:{i},{j} = eta:{i},{j} : i < j", straight, true});
    p.relations.push_back({"t1 = sigma1", straight, true});
    add(p.relations, both("eta:{i},{j} = eta:1,{j} eta:1,{j-i+1} eta:1,{j} : i < j"));
    for (int i = 1; i < n; ++i) {
      std::string prod;
      for (int k = 1; k <= i; ++k) prod += (k > 1 ? " p" : "p") + std::to_string(k);
      p.relations.push_back({"evac" + std::to_string(i + 1) + " = " + prod, straight, true});
      p.relations.push_back({"evac~" + std::to_string(i + 1) + " = " + prod, skew, true});
    }
  } else if (name == "non-relations") {
    p.summary = "relations that fail somewhere: (t1 t2)^6, braid relation for sigma, evac~, (t_i q_{j,k})^2 on skew shapes";
    p.min_n = 3;
    p.relations.push_back({"(t1 t2)^6 = e", {ShapeClass::straight, 9, 9}, false});
    p.relations.push_back({"(sigma1 sigma2)^3 = e", skew, false});
    p.relations.push_back({"evac~ ~= eta:1,{n}", skew, false});
    p.relations.push_back({"evac~:{i},{j} = q:{i},{j} : i < j", skew, false});
    p.relations.push_back({"evac~:{i},{j} = evac~{j} evac~{j-i+1} evac~{j} : i < j", skew, false});
    p.relations.push_back({"(t{i} q:{j},{k})^2 = e : i+1 < j < k", skew, false, 4});
  } else {
    return std::nullopt;
  }
  return p;
}

struct PresetOutcome {
  PresetRelation relation;
  SearchResult result;
  bool as_expected = false;
  bool skipped = false;
};

inline std::vector<PresetOutcome> run_preset(const Preset& p, int n, const VerifyOptions& opts = {}) {
  if (n < p.min_n) {
    throw TableauError("preset " + p.name + " needs n >= " + std::to_string(p.min_n));
  }
  std::vector<PresetOutcome> out;
  for (auto& r : p.relations) {
    if (n < r.min_n) {
      out.push_back({r, {}, true, true});
      continue;
    }
    SearchResult res = search_counterexample(RelationSchema::parse(r.schema), r.universe, n, {}, opts);
    bool ok = res.verdict.holds == r.expect_holds;
    out.push_back({r, std::move(res), ok});
  }
  return out;
}

}  // namespace shtab

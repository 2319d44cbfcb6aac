// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance            run everything
//   acceptance --only 3   run one criterion
//
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "shtab/shtab.hpp"

using namespace shtab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

std::vector<TableauFamily> families(const std::vector<SkewShape>& shapes, int n) {
  std::vector<TableauFamily> out;
  for (auto& sh : shapes) {
    TableauFamily f = enumerate(sh, n);
    if (!f.empty()) out.push_back(std::move(f));
  }
  return out;
}

// Straight shapes inside (4,3,2,1), n = 4.
std::vector<TableauFamily> straight4() { return families(oracle::staircase_shapes(4), 4); }

// Proper skew shapes with at most 5 cells and first part at most 5.
std::vector<TableauFamily> skew5(int n) { return families(oracle::shapes_up_to(5, 5, false, true), n); }

std::size_t members(const std::vector<TableauFamily>& fams) {
  std::size_t s = 0;
  for (auto& f : fams) s += f.size();
  return s;
}

std::string marked(const TraceFrame& f) {
  std::string out;
  const SkewShape& sh = f.filling.shape();
  for (int r = 1; r <= sh.rows(); ++r) {
    if (r > 1) out += " / ";
    for (int c = 1; c < sh.row_end(r); ++c) {
      if (c > 1) out += ' ';
      if (c < sh.row_begin(r)) {
        out += '.';
        continue;
      }
      bool m = std::find(f.marked.begin(), f.marked.end(), Cell{r, c}) != f.marked.end();
      out += m ? "[" + f.filling.at({r, c}).str() + "]" : f.filling.at({r, c}).str();
    }
  }
  return out;
}

std::vector<std::string> chain(const SwitchTrace& trace) {
  std::vector<std::string> out;
  for (auto& f : trace) out.push_back(f.label + ": " + marked(f));
  return out;
}

std::string describe(const Counterexample& c, const SkewShape& shape) {
  std::string b = binding_str(c.binding);
  return shape.str() + (b.empty() ? "" : " " + b) + " T = " + render_compact(c.tableau) +
         " gives " + render_compact(c.lhs) + " vs " + render_compact(c.rhs);
}

// Runs a schema over families; returns mismatch count and records the first.
struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::string> first;
};

Tally run_schema(const std::string& text, const std::vector<TableauFamily>& fams, unsigned jobs = 1) {
  RelationSchema schema = RelationSchema::parse(text);
  Tally t;
  for (auto& f : fams) {
    Verdict v = verify_relation(schema, f, {jobs, true});
    t.checks += v.instances_checked;
    t.mismatches += v.mismatches;
    if (v.counterexample && !t.first) {
      t.first = describe(*v.counterexample, f.shape());
      if (!replays(*v.counterexample)) t.first = *t.first + " (DOES NOT REPLAY)";
    }
  }
  return t;
}

void report_schema(Outcome& o, const std::string& text, const std::string& where, const Tally& t) {
  o.check(t.mismatches == 0, text + "  [" + where + "]  " + std::to_string(t.checks) + " checks, " +
                                 std::to_string(t.mismatches) + " mismatches");
  if (t.first) o.note("       first counterexample: " + *t.first);
}

// ---------------------------------------------------------------------------

Outcome golden_examples() {
  Outcome o;
  auto t0 = Clock::now();

  // The skew example as printed breaks the row rule in row 2, so it is read
  // as a raw filling.
  Tableau raw = parse_filling(". . . 1 1 2'\n. . 2 2'\n. . 3");
  o.check(word_string(reading_word(raw)) == "322'112'", "reading word of (6,3,1)/(3,1) example: " +
                                                            word_string(reading_word(raw)));
  o.check(weight(raw) == Weight({2, 3, 1}), "its weight: " + weight(raw).str());

  Tableau s = parse_tableau("1 1 1\n. 2");
  Tableau t = parse_filling(". . . 1\n. . 1", 1);
  SwitchTrace trace;
  SwitchResult sw = full_switch(s, t, &trace);
  std::vector<std::string> expect_sw{
      "start: [1] [1] [1] 1 / . [2] 1", "S1: [1] [1] [1] 1 / . 1 [2]", "S1: [1] [1] 1 [1] / . 1 [2]",
      "S7: 1 [1'] 1 [1] / . [1] [2]",   "S1: 1 1 [1'] [1] / . [1] [2]",
  };
  o.check(chain(trace) == expect_sw, "switching trace S1, S1, S7, S1 with every intermediate pair");
  o.check(render_compact(sw.inner) == "1 1" && render_compact(sw.outer) == ". . 1' 1 / . 1 2",
          "switched pair: " + render_compact(sw.inner) + " | " + render_compact(sw.outer));

  Tableau ex = parse_tableau("1 1 2' 2\n. 2 3'\n. . 3");
  SwitchTrace c1;
  Tableau t1 = bk(ex, 1, &c1);
  o.check(chain(c1) == std::vector<std::string>{"start: [1] [1] 2' 2 / . 2 3' / . . 3",
                                                "S5: [1] 2' [1] 2 / . 2 3' / . . 3",
                                                "S1: [1] 2' 2 [1] / . 2 3' / . . 3",
                                                "S3: 2 2 2 [1] / . [1] 3' / . . 3",
                                                "theta1: 1 1 1 2 / . 2 3' / . . 3"},
          "t1 chain S5, S1, S3, theta1");
  o.check(render_compact(t1) == "1 1 1 2 / . 2 3' / . . 3", "t1(T) = " + render_compact(t1));
  SwitchTrace c2;
  Tableau t2 = bk(ex, 2, &c2);
  o.check(chain(c2) == std::vector<std::string>{"start: 1 1 [2'] [2] / . [2] 3' / . . 3",
                                                "S3: 1 1 [2'] [2] / . 3 3 / . . [2]",
                                                "S2: 1 1 3 [2] / . 3 [2'] / . . [2]",
                                                "theta2: 1 1 2 3 / . 2 3' / . . 3"},
          "t2 chain S3, S2, theta2");
  o.check(render_compact(t2) == "1 1 2 3 / . 2 3' / . . 3", "t2(T) = " + render_compact(t2));

  Tableau rt = parse_tableau("1 1 2' 2 3\n. 2 3' 3\n. . 3");
  Tableau x = eval_word(parse_word("(t1 t2)^6"), rt);
  o.check(x == parse_tableau("1 1 2' 3' 3\n. 2 2 3\n. . 3") && x != rt,
          "(t1 t2)^6 of the 9-cell tableau = " + render_compact(x));

  double secs = seconds_since(t0);
  o.check(secs < 1.0, "elapsed " + fmt_seconds(secs) + " (limit 1 s)");
  return o;
}

Outcome sbk_suite() {
  Outcome o;
  auto t0 = Clock::now();
  auto straight = straight4();
  auto skew = skew5(4);
  o.note("straight: " + std::to_string(members(straight)) + " tableaux in " + std::to_string(straight.size()) +
         " families; skew: " + std::to_string(members(skew)) + " tableaux in " + std::to_string(skew.size()) +
         " families");
  for (const char* rel : {"t{i} t{i} = e", "t{i} t{j} = t{j} t{i} : |i-j| > 1",
                          "(t{i} q:{j},{k})^2 = e : i+1 < j < k", "t1 = q1", "t2 = q1 q2 q1",
                          "t{i} = q{i-1} q{i} q{i-1} q{i-2} : i > 2"}) {
    report_schema(o, rel, "straight, n=4", run_schema(rel, straight));
    report_schema(o, rel, "skew <= 5 cells, n=4", run_schema(rel, skew));
  }
  double secs = seconds_since(t0);
  o.check(secs < 300.0, "elapsed " + fmt_seconds(secs) + " single-threaded (limit 5 min)");
  if (!o.pass) {
    o.note("note: the skew failures of (t_i q_{j,k})^2 are genuine. An independent model of the ordinary");
    o.note("      Bender-Knuth moves on standard skew tableaux breaks the same relation on skew shapes;");
    o.note("      it holds on every straight family. See README, Known deviations.");
  }
  return o;
}

Outcome three_routes() {
  Outcome o;
  std::uint64_t checked = 0;
  std::uint64_t bad_evac = 0;
  std::uint64_t bad_k = 0;
  std::optional<std::string> first;
  for (auto& fam : straight4()) {
    for (auto& t : fam) {
      ++checked;
      Tableau a = evac_switch(t);
      Tableau b = rectify(complement(t, 4)).tableau;
      Tableau c = q(t, 3);
      if (!(a == b && b == c)) {
        ++bad_evac;
        if (!first) first = render_compact(t);
      }
      if (evac_k_switch(t, 1) != t) ++bad_k;
      for (int k = 2; k <= 4; ++k) {
        Tableau e = evac_k_switch(t, k);
        if (!(e == eta(t, 1, k) && e == q(t, k - 1))) {
          ++bad_k;
          if (!first) first = render_compact(t) + " k=" + std::to_string(k);
        }
      }
    }
  }
  o.check(bad_evac == 0, "evac_switch = rect(c_4(T)) = q3 on " + std::to_string(checked) + " straight tableaux, " +
                             std::to_string(bad_evac) + " mismatches");
  o.check(bad_k == 0, "evac_k_switch = eta_{1,k} = q_{k-1} for k = 1..4, " + std::to_string(bad_k) + " mismatches");
  if (first) o.note("       first mismatch: " + *first);
  return o;
}

Outcome cactus_suites() {
  Outcome o;
  auto straight = straight4();
  auto rels_eta = cactus_relations(CactusRoute::eta);
  auto rels_q = cactus_relations(CactusRoute::q);
  for (int n = 2; n <= 4; ++n) {
    auto skew = skew5(n);
    for (std::size_t k = 0; k < 3; ++k) {
      report_schema(o, "(a) " + rels_eta[k].text(), "skew <= 5 cells, n=" + std::to_string(n),
                    run_schema(rels_eta[k].text(), skew, default_jobs()));
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    report_schema(o, "(b) " + rels_q[k].text(), "straight, n=4", run_schema(rels_q[k].text(), straight));
  }
  report_schema(o, "(c) " + rels_q[3].text(), "straight, n=4", run_schema(rels_q[3].text(), straight));
  report_schema(o, "(c) " + rels_eta[3].text(), "straight, n=4", run_schema(rels_eta[3].text(), straight));
  const std::string cor = "eta:{i},{j} = eta:1,{j} eta:1,{j-i+1} eta:1,{j} : i < j";
  for (int n = 2; n <= 4; ++n) {
    report_schema(o, "(c,d) " + cor, "skew <= 5 cells, n=" + std::to_string(n), run_schema(cor, skew5(n), default_jobs()));
  }
  report_schema(o, "(d) " + cor, "straight, n=4", run_schema(cor, straight));
  return o;
}

Outcome promotion_products() {
  Outcome o;
  auto straight = straight4();
  std::vector<TableauFamily> fig;
  fig.push_back(enumerate(SkewShape{StrictPartition({3, 1}), StrictPartition({1})}, 4));
  for (int i = 1; i <= 3; ++i) {
    std::string prod;
    for (int k = 1; k <= i; ++k) prod += (k > 1 ? " p" : "p") + std::to_string(k);
    std::string rel = "evac" + std::to_string(i + 1) + " = " + prod;
    report_schema(o, rel, "straight, n=4", run_schema(rel, straight));
    std::string skew_rel = "evac~" + std::to_string(i + 1) + " = " + prod;
    report_schema(o, skew_rel, "(3,1)/(1), n=4", run_schema(skew_rel, fig));
  }
  return o;
}

Outcome involutions() {
  Outcome o;
  std::vector<TableauFamily> all = straight4();
  for (auto& f : skew5(4)) all.push_back(std::move(f));
  std::uint64_t n_all = members(all);

  std::uint64_t pairs = 0;
  std::uint64_t bad_pair = 0;
  std::uint64_t splits = 0;
  std::uint64_t bad_full = 0;
  for (auto& fam : all) {
    for (auto& u : fam) {
      for (int i = 1; i < 4; ++i) {
        IntervalSplit lo = restrict_interval(u, i, i);
        IntervalSplit hi = restrict_interval(u, i + 1, i + 1);
        if (lo.band.size() > 0 && hi.band.size() > 0) {
          ++pairs;
          SwitchResult r = switch_pair(lo.band, hi.band);
          SwitchResult back = switch_pair(r.inner, r.outer);
          if (back.inner != lo.band || back.outer != hi.band) ++bad_pair;
        }
        IntervalSplit cut = restrict_interval(u, 1, i);
        if (cut.band.size() > 0 && cut.suffix.size() > 0) {
          ++splits;
          Tableau a = cut.band;
          a.set_max_letter(i);
          Tableau b = canonicalize(shift_letters(cut.suffix, -i, 4 - i));
          SwitchResult r = full_switch(a, b);
          SwitchResult back = full_switch(r.inner, r.outer);
          if (back.inner != a || back.outer != b) ++bad_full;
        }
      }
    }
  }
  o.check(bad_pair == 0, "switch_pair twice is the identity on " + std::to_string(pairs) + " perforated pairs, " +
                             std::to_string(bad_pair) + " failures");
  o.check(bad_full == 0, "full_switch twice is the identity on " + std::to_string(splits) + " tableau pairs, " +
                             std::to_string(bad_full) + " failures");

  auto squares = [&](const std::string& name, const std::function<std::vector<Tableau>(const Tableau&)>& images,
                     const std::function<std::vector<Tableau>(const Tableau&)>& back) {
    std::uint64_t bad = 0;
    std::optional<std::string> first;
    for (auto& fam : all) {
      for (auto& t : fam) {
        auto im = images(t);
        auto again = back(t);
        for (std::size_t k = 0; k < im.size(); ++k) {
          if (again[k] != t) {
            ++bad;
            if (!first) first = render_compact(t);
          }
        }
      }
    }
    o.check(bad == 0, name + " squares to the identity on " + std::to_string(n_all) + " tableaux, " +
                          std::to_string(bad) + " failures");
    if (first) o.note("       first failure: " + *first);
  };
  squares(
      "reversal", [](const Tableau& t) { return std::vector<Tableau>{reversal(t)}; },
      [](const Tableau& t) { return std::vector<Tableau>{reversal(reversal(t))}; });
  auto each_interval = [](const Tableau& t, const std::function<Tableau(const Tableau&, int, int)>& f) {
    std::vector<Tableau> out;
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) out.push_back(f(t, i, j));
    }
    return out;
  };
  squares(
      "eta_{i,j}", [&](const Tableau& t) { return each_interval(t, [](const Tableau& x, int i, int j) { return eta(x, i, j); }); },
      [&](const Tableau& t) {
        return each_interval(t, [](const Tableau& x, int i, int j) { return eta(eta(x, i, j), i, j); });
      });
  squares(
      "evac~", [](const Tableau& t) { return std::vector<Tableau>{evac_skew(t)}; },
      [](const Tableau& t) { return std::vector<Tableau>{evac_skew(evac_skew(t))}; });
  auto each_i = [](const Tableau& t, const std::function<Tableau(const Tableau&, int)>& f) {
    std::vector<Tableau> out;
    for (int i = 1; i < 4; ++i) out.push_back(f(t, i));
    return out;
  };
  squares(
      "t_i", [&](const Tableau& t) { return each_i(t, [](const Tableau& x, int i) { return bk(x, i); }); },
      [&](const Tableau& t) { return each_i(t, [](const Tableau& x, int i) { return bk(bk(x, i), i); }); });
  squares(
      "q_i", [&](const Tableau& t) { return each_i(t, [](const Tableau& x, int i) { return q(x, i); }); },
      [&](const Tableau& t) { return each_i(t, [](const Tableau& x, int i) { return q(q(x, i), i); }); });
  return o;
}

Outcome witnesses() {
  Outcome o;
  const SearchBudget budget{20'000'000, 500'000};
  struct Target {
    std::string schema;
    ShapeUniverse universe;
  };
  std::vector<Target> targets{
      {"(t1 t2)^6 = e", {ShapeClass::all, 9, 9}},
      {"(sigma1 sigma2)^3 = e", {ShapeClass::all, 9, 9}},
      {"evac~ ~= eta:1,{n}", {ShapeClass::skew, 9, 9}},
      {"evac~:{i},{j} = q:{i},{j} : i < j", {ShapeClass::skew, 9, 9}},
  };
  for (auto& tg : targets) {
    auto schema = RelationSchema::parse(tg.schema);
    SearchResult r = search_counterexample(schema, tg.universe, 3, budget);
    if (!r.verdict.counterexample) {
      o.check(false, tg.schema + ": no witness (" + (r.budget_exhausted ? r.budget_note : "search exhausted") + ")");
      continue;
    }
    const Counterexample& c = *r.verdict.counterexample;
    SearchResult again = search_counterexample(schema, tg.universe, 3, budget, {1, false});
    bool same = again.verdict.counterexample && again.verdict.counterexample->tableau == c.tableau &&
                again.verdict.counterexample->binding == c.binding;
    o.check(replays(c) && same, tg.schema + " fails: " + describe(c, *r.shape) +
                                    (same ? ", replays, same witness on a single-threaded rerun" : ", NOT deterministic"));
    if (tg.schema.rfind("(t1 t2)^6", 0) == 0) {
      o.check(c.tableau.size() <= 9, "witness has " + std::to_string(c.tableau.size()) +
                                         " cells, at most the 9 of the printed example");
    }
    if (tg.schema.rfind("evac~ ~=", 0) == 0) {
      Tableau ev = evac_skew(c.tableau);
      Tableau cn = complement(c.tableau, 3);
      o.check(!knuth_equivalent(ev, cn), "evac~(T) = " + render_compact(ev) + " is not Knuth equivalent to c_3(T) = " +
                                             render_compact(cn));
    }
  }
  return o;
}

Outcome structural() {
  Outcome o;
  std::vector<TableauFamily> all = straight4();
  for (int n = 1; n <= 4; ++n) {
    for (auto& f : skew5(n)) all.push_back(std::move(f));
  }
  std::uint64_t total = 0;
  std::uint64_t bad_c = 0;
  std::uint64_t bad_eta = 0;
  std::uint64_t bad_rect = 0;
  for (auto& fam : all) {
    int n = fam.max_letter();
    for (auto& t : fam) {
      ++total;
      std::vector<int> w = oracle::letter_counts(t, n);
      std::vector<int> rev(w.rbegin(), w.rend());
      if (oracle::letter_counts(complement(t, n), n) != rev) ++bad_c;
      if (n >= 2 && oracle::letter_counts(eta(t, 1, n), n) != rev) ++bad_eta;
      if (rectify(t, CornerStrategy::topmost).tableau != rectify(t, CornerStrategy::bottommost).tableau) ++bad_rect;
    }
  }
  o.check(bad_c == 0, "wt(c_n(T)) = wt(T)^rev on " + std::to_string(total) + " tableaux, " + std::to_string(bad_c) +
                          " failures");
  o.check(bad_eta == 0, "wt(eta(T)) = wt(T)^rev, " + std::to_string(bad_eta) + " failures");
  o.check(bad_rect == 0, "rectification agrees under topmost and bottommost corner order, " +
                             std::to_string(bad_rect) + " failures");
  TableauFamily fig = enumerate(SkewShape{StrictPartition({3, 1}), StrictPartition({1})}, 4);
  auto classes = components_by_dual_equivalence(fig);
  std::string sizes;
  for (auto& c : classes) sizes += (sizes.empty() ? "" : ", ") + std::to_string(c.members.size());
  o.check(classes.size() == 2, "ShST((3,1)/(1),4) splits into " + std::to_string(classes.size()) +
                                   " dual equivalence classes (sizes " + sizes + ")");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t shapes = 0;
  std::uint64_t tableaux = 0;
  std::uint64_t bad = 0;
  std::optional<std::string> first;
  for (auto& sh : oracle::shapes_up_to(8, 8, true, true)) {
    ++shapes;
    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> got;
      TableauFamily fam = enumerate(sh, n);
      for (auto& t : fam) got.insert(oracle::row_major_key(t));
      auto expect = oracle::brute_force_family(sh, n);
      tableaux += expect.size();
      if (got != expect || got.size() != fam.size()) {
        ++bad;
        if (!first) first = sh.str() + " n=" + std::to_string(n);
      }
    }
  }
  o.check(bad == 0, "enumerate = brute-force filter on " + std::to_string(shapes) +
                        " shapes (<= 8 cells, first part <= 8), n = 1..4: " + std::to_string(tableaux) +
                        " tableaux, " + std::to_string(bad) + " differing families");
  if (first) o.note("       first difference: " + *first);
  o.note("elapsed " + fmt_seconds(seconds_since(t0)));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if (a == "--only" && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "golden examples", golden_examples},
      {2, "SBK relation suite", sbk_suite},
      {3, "evacuation three-route agreement", three_routes},
      {4, "cactus action suites", cactus_suites},
      {5, "evac~_{i+1} = p1...pi", promotion_products},
      {6, "involution suites", involutions},
      {7, "non-relation witnesses", witnesses},
      {8, "structural checks", structural},
      {9, "enumeration oracle equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (auto& c : criteria) {
    if (only && c.id != only) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    for (auto& line : o.notes) std::cout << "    " << line << "\n";
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " ("
              << fmt_seconds(seconds_since(t0)) << ")\n"
              << std::flush;
    if (!o.pass) ++failed;
  }
  return failed;
}

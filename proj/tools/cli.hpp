#pragma once

// Command-line front end. run() is the whole program; main() only forwards
// argv, so tests drive the CLI in-process.
//
// Exit codes: 0 success (relation holds), 1 counterexample found,
// 2 usage or input error, 3 undecided (budget or capacity limit),
// 4 internal integrity failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shtab/shtab.hpp"

namespace shtab::cli {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kUndecided = 3, kInternal = 4 };

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw TableauError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Text or JSON tableau; an explicit n overrides the file's bound.
inline Tableau load_tableau(const std::string& path, std::optional<int> n) {
  std::string text = read_input(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    ordered_json j;
    try {
      j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw TableauError(path + ": " + e.what());
    }
    Tableau t = tableau_from_json(j);
    if (n) {
      t.set_max_letter(*n);
      validate(t);
    }
    return t;
  }
  try {
    return parse_tableau(text, n);
  } catch (const TableauError& e) {
    throw TableauError(path + ": " + e.what());
  }
}

/// Compact rows with the given cells bracketed.
inline std::string render_marked(const Tableau& t, const std::vector<Cell>& marked) {
  std::string out;
  const SkewShape& sh = t.shape();
  for (int r = 1; r <= sh.rows(); ++r) {
    if (r > 1) out += " / ";
    for (int c = 1; c < sh.row_end(r); ++c) {
      if (c > 1) out += ' ';
      if (c < sh.row_begin(r)) {
        out += '.';
        continue;
      }
      bool m = std::find(marked.begin(), marked.end(), Cell{r, c}) != marked.end();
      out += m ? "[" + t.at({r, c}).str() + "]" : t.at({r, c}).str();
    }
  }
  return out.empty() ? "()" : out;
}

inline void indent(std::ostream& out, const std::string& block, const std::string& pad = "  ") {
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) out << pad << line << "\n";
}

inline ordered_json trace_json(const SwitchTrace& trace) {
  auto arr = ordered_json::array();
  for (auto& f : trace) {
    ordered_json j;
    j["label"] = f.label;
    j["filling"] = render_compact(f.filling);
    auto cells = ordered_json::array();
    for (Cell c : f.marked) cells.push_back({c.row, c.col});
    j["marked"] = cells;
    arr.push_back(j);
  }
  return arr;
}

inline ordered_json counterexample_json(const Counterexample& c, const std::optional<SkewShape>& shape) {
  ordered_json j;
  j["relation"] = c.relation;
  ordered_json b = ordered_json::object();
  for (auto& [k, v] : c.binding) {
    if (k != "n") b[k] = v;
  }
  j["binding"] = b;
  j["lhs_word"] = word_str(c.lhs_word);
  j["rhs_word"] = word_str(c.rhs_word);
  j["comparison"] = c.comparison == Comparison::knuth ? "knuth" : "equal";
  if (shape) j["shape"] = shape->str();
  j["member"] = c.member;
  j["tableau"] = to_json(c.tableau);
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  j["replays"] = replays(c);
  return j;
}

inline void print_counterexample(std::ostream& out, const Counterexample& c,
                                 const std::optional<SkewShape>& shape) {
  std::string where = shape ? shape->str() : c.tableau.shape().str();
  std::string b = binding_str(c.binding);
  out << "  counterexample in " << where << (b.empty() ? "" : " at " + b) << ", member "
      << c.member << "\n";
  out << "    T   = " << render_compact(c.tableau) << "\n";
  out << "    lhs = " << render_compact(c.lhs) << "   (" << word_str(c.lhs_word) << ")\n";
  out << "    rhs = " << render_compact(c.rhs) << "   (" << word_str(c.rhs_word) << ")\n";
  if (c.comparison == Comparison::knuth) out << "    (rectifications differ)\n";
}

inline SkewShape make_shape(const std::vector<int>& outer, const std::vector<int>& mu) {
  return SkewShape(StrictPartition(outer), StrictPartition(mu));
}

// Splits "t1,q:1,3,t2" or "t1 q:1,3 t2" into generators.
inline std::vector<Generator> parse_generator_list(const std::string& text) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) toks.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  std::vector<std::string> merged;
  for (auto& t : toks) {
    bool index_only = std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (index_only && !merged.empty() && merged.back().find(':') != std::string::npos) {
      merged.back() += "," + t;
    } else {
      merged.push_back(t);
    }
  }
  std::vector<Generator> gens;
  for (auto& t : merged) gens.push_back(parse_generator(t));
  if (gens.empty()) throw SyntaxError("no generators given");
  return gens;
}

}  // namespace detail

/// Runs the program on the given arguments (argv[0] included).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shifted tableau switching, Bender-Knuth moves and cactus group relations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Words act rightmost generator first: \"t1 t2\" applies t2, then t1.\n"
      "Generators: t<i> p<i> q<i> q:<i>,<j> eta:<i>,<j> sigma<i> evac[<k>] evac~[<k>] evac~:<i>,<j> e\n"
      "Schema: LHS = RHS [: constraint], or LHS ~= RHS for equality up to Knuth equivalence,\n"
      "e.g. \"t{i} t{j} = t{j} t{i} : |i-j| > 1\".\n"
      "Exit codes: 0 holds/success, 1 counterexample, 2 usage or input error, 3 undecided.");

  std::string format = "text";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", timing, "Add elapsed time to JSON reports");

  // enum
  auto* en = app.add_subcommand("enum", "List ShST(outer/mu, n)");
  std::vector<int> outer;
  std::vector<int> mu;
  int n = 0;
  bool count_only = false;
  en->add_option("--outer", outer, "Outer strict partition, e.g. 3,1")->delimiter(',')->required();
  en->add_option("--mu", mu, "Inner strict partition")->delimiter(',');
  en->add_option("--n", n, "Alphabet bound")->required()->check(CLI::PositiveNumber);
  en->add_flag("--count-only", count_only, "Print only the number of tableaux");

  // apply
  auto* ap = app.add_subcommand("apply", "Apply a generator word to a tableau");
  std::string op;
  std::string in_path;
  std::optional<int> n_override;
  bool trace = false;
  ap->add_option("--op", op, "Word, e.g. \"t1 t2\" or \"eta:1,3\"")->required();
  ap->add_option("--in", in_path, "Tableau file ('-' for stdin)")->required();
  ap->add_option("--n", n_override, "Alphabet bound (default: largest letter)");
  ap->add_flag("--trace", trace, "Show the switching steps of each t_i");

  // switch
  auto* sw = app.add_subcommand("switch", "Switch S through T");
  std::string s_path;
  std::string t_path;
  sw->add_option("--s", s_path, "Tableau S")->required();
  sw->add_option("--t", t_path, "Tableau T, extending S")->required();
  sw->add_flag("--trace", trace, "Show every switch with its rule");

  // rectify
  auto* rc = app.add_subcommand("rectify", "Rectify by jeu de taquin");
  std::string strategy = "topmost";
  bool emit_record = false;
  rc->add_option("--in", in_path, "Tableau file")->required();
  rc->add_option("--n", n_override, "Alphabet bound");
  rc->add_option("--strategy", strategy, "Inner corner choice")->check(CLI::IsMember({"topmost", "bottommost"}));
  rc->add_flag("--emit-record", emit_record, "Print the slide record");

  // verify / search share these
  std::string schema_text;
  std::string preset_name;
  std::string shapes = "all";
  int max_cells = 5;
  std::optional<int> largest;
  unsigned jobs = default_jobs();
  bool exhaustive = false;

  auto* vf = app.add_subcommand("verify", "Check a relation schema or a preset suite");
  auto* schema_opt = vf->add_option("--schema", schema_text, "Relation schema");
  auto* preset_opt = vf->add_option("--preset", preset_name, "Preset suite")->check(CLI::IsMember(preset_names()));
  schema_opt->excludes(preset_opt);
  auto* outer_opt = vf->add_option("--outer", outer, "Check only this outer shape")->delimiter(',');
  vf->add_option("--mu", mu, "Inner shape, with --outer")->delimiter(',')->needs(outer_opt);
  vf->add_option("--n", n, "Alphabet bound")->required()->check(CLI::PositiveNumber);
  vf->add_option("--shapes", shapes, "Shape class without --outer")->check(CLI::IsMember({"straight", "skew", "all"}));
  vf->add_option("--max-cells", max_cells, "Largest shape size without --outer");
  vf->add_option("--largest", largest, "Largest first part without --outer (default: --max-cells)");
  vf->add_option("--jobs", jobs, "Worker threads (default: SHTAB_JOBS or all cores)")->check(CLI::PositiveNumber);
  vf->add_flag("--exhaustive", exhaustive, "Count every mismatch (single family only)");

  auto* se = app.add_subcommand("search", "Search shapes in order for a counterexample");
  std::uint64_t max_instances = 0;
  std::size_t max_family = 0;
  se->add_option("--schema", schema_text, "Relation schema")->required();
  se->add_option("--n", n, "Alphabet bound")->required()->check(CLI::PositiveNumber);
  se->add_option("--shapes", shapes, "Shape class")->check(CLI::IsMember({"straight", "skew", "all"}));
  se->add_option("--max-cells", max_cells, "Largest shape size");
  se->add_option("--largest", largest, "Largest first part (default: --max-cells)");
  se->add_option("--max-instances", max_instances, "Stop after this many checks (0: no limit)");
  se->add_option("--max-family", max_family, "Stop at a family larger than this (0: no limit)");
  se->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* ob = app.add_subcommand("orbit", "Orbit of a tableau under generators");
  std::string gens_text;
  std::string dot_path;
  std::size_t max_size = 100000;
  ob->add_option("--gens", gens_text, "Generators, e.g. t1,t2")->required();
  ob->add_option("--in", in_path, "Tableau file")->required();
  ob->add_option("--n", n_override, "Alphabet bound");
  ob->add_option("--dot", dot_path, "Write Graphviz output here ('-' for stdout)");
  ob->add_option("--max-size", max_size, "Largest orbit accepted");

  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const bool json = format == "json";
  const auto started = std::chrono::steady_clock::now();
  ordered_json report;
  auto finish = [&](int code) {
    if (json) {
      report["exit_code"] = code;
      if (timing) {
        report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      }
      out << report.dump(2) << "\n";
    }
    return code;
  };
  auto universe = [&]() {
    return ShapeUniverse{parse_shape_class(shapes), largest.value_or(max_cells), max_cells};
  };

  try {
    // ---------------------------------------------------------------- enum
    if (en->parsed()) {
      SkewShape shape = detail::make_shape(outer, mu);
      report["command"] = "enum";
      report["parameters"] = {{"shape", shape.str()}, {"n", n}};
      if (count_only) {
        auto c = count(shape, n);
        if (json) report["count"] = c;
        else out << c << "\n";
        return finish(kOk);
      }
      TableauFamily fam = enumerate(shape, n);
      if (json) {
        report["count"] = fam.size();
        auto members = ordered_json::array();
        for (auto& t : fam) members.push_back(to_json(t));
        report["members"] = members;
      } else {
        for (auto& t : fam) out << render_compact(t) << "\n";
      }
      return finish(kOk);
    }

    // --------------------------------------------------------------- apply
    if (ap->parsed()) {
      Tableau t = detail::load_tableau(in_path, n_override);
      Word w = parse_word(op);
      for (auto& g : w) check_range(g, t.max_letter());
      report["command"] = "apply";
      report["parameters"] = {{"op", word_str(w)}, {"n", t.max_letter()}};
      report["input"] = to_json(t);
      auto steps = ordered_json::array();
      Tableau cur = t;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        SwitchTrace tr;
        Tableau next = (trace && it->kind == GenKind::t) ? bk(cur, it->idx[0], &tr) : apply_generator(*it, cur);
        if (trace) {
          if (json) {
            steps.push_back({{"generator", it->str()}, {"trace", detail::trace_json(tr)}, {"result", to_json(next)}});
          } else {
            out << "== " << it->str() << "\n";
            for (auto& f : tr) out << "  " << f.label << ": " << detail::render_marked(f.filling, f.marked) << "\n";
            if (tr.empty()) out << "  result: " << render_compact(next) << "\n";
          }
        }
        cur = std::move(next);
      }
      if (json) {
        if (trace) report["steps"] = steps;
        report["result"] = to_json(cur);
      } else {
        out << render(cur) << "\n";
      }
      return finish(kOk);
    }

    // -------------------------------------------------------------- switch
    if (sw->parsed()) {
      Tableau s = detail::load_tableau(s_path, std::nullopt);
      Tableau t = detail::load_tableau(t_path, std::nullopt);
      SwitchTrace tr;
      SwitchResult r = full_switch(s, t, trace ? &tr : nullptr);
      report["command"] = "switch";
      report["parameters"] = {{"s", to_json(s)}, {"t", to_json(t)}};
      if (json) {
        if (trace) report["trace"] = detail::trace_json(tr);
        report["inner"] = to_json(r.inner);
        report["outer"] = to_json(r.outer);
      } else {
        for (auto& f : tr) out << f.label << ": " << detail::render_marked(f.filling, f.marked) << "\n";
        out << "inner (T moved in):\n";
        detail::indent(out, render(r.inner));
        out << "outer (S moved out):\n";
        detail::indent(out, render(r.outer));
      }
      return finish(kOk);
    }

    // ------------------------------------------------------------- rectify
    if (rc->parsed()) {
      Tableau t = detail::load_tableau(in_path, n_override);
      auto strat = strategy == "topmost" ? CornerStrategy::topmost : CornerStrategy::bottommost;
      Rectification r = rectify(t, strat);
      report["command"] = "rectify";
      report["parameters"] = {{"strategy", strategy}};
      if (json) {
        report["result"] = to_json(r.tableau);
        if (emit_record) {
          auto rec = ordered_json::array();
          for (std::size_t k = 0; k < r.record.size(); ++k) {
            rec.push_back({{"corner", {r.record.corners[k].row, r.record.corners[k].col}},
                           {"vacated", {r.record.vacated[k].row, r.record.vacated[k].col}}});
          }
          report["record"] = rec;
        }
      } else {
        out << render(r.tableau) << "\n";
        if (emit_record) {
          for (std::size_t k = 0; k < r.record.size(); ++k) {
            out << "slide (" << r.record.corners[k].row << "," << r.record.corners[k].col << ") vacates ("
                << r.record.vacated[k].row << "," << r.record.vacated[k].col << ")\n";
          }
        }
      }
      return finish(kOk);
    }

    VerifyOptions vopts{jobs, exhaustive};

    // -------------------------------------------------------------- verify
    if (vf->parsed()) {
      report["command"] = "verify";
      if (preset_opt->count() > 0) {
        auto preset = find_preset(preset_name, n);
        report["parameters"] = {{"preset", preset_name}, {"n", n}};
        auto results = ordered_json::array();
        bool all_ok = true;
        if (!json) out << "preset " << preset->name << " (n = " << n << "): " << preset->summary << "\n";
        for (auto& o : run_preset(*preset, n, vopts)) {
          all_ok = all_ok && o.as_expected;
          std::string status = o.skipped ? "skipped" : (o.result.verdict.holds ? "holds" : "fails");
          if (json) {
            ordered_json j{{"relation", o.relation.schema},
                           {"shapes", o.relation.universe.str()},
                           {"expected", o.relation.expect_holds ? "holds" : "fails"},
                           {"status", status},
                           {"as_expected", o.as_expected},
                           {"instances_checked", o.result.verdict.instances_checked}};
            if (o.result.verdict.counterexample) {
              j["counterexample"] = detail::counterexample_json(*o.result.verdict.counterexample, o.result.shape);
            }
            results.push_back(j);
          } else {
            out << (o.as_expected ? "ok    " : "WRONG ") << status << "  " << o.relation.schema << "  ["
                << o.relation.universe.str() << "]";
            if (!o.skipped) out << "  " << o.result.verdict.instances_checked << " checks";
            out << "\n";
            if (o.result.verdict.counterexample) {
              detail::print_counterexample(out, *o.result.verdict.counterexample, o.result.shape);
            }
          }
        }
        report["results"] = results;
        return finish(all_ok ? kOk : kCounterexample);
      }
      if (schema_opt->count() == 0) throw CLI::RequiredError("--schema or --preset");
      RelationSchema schema = RelationSchema::parse(schema_text);
      Verdict v;
      std::optional<SkewShape> where;
      std::string scope;
      if (outer_opt->count() > 0) {
        SkewShape shape = detail::make_shape(outer, mu);
        TableauFamily fam = enumerate(shape, n);
        v = verify_relation(schema, fam, vopts);
        where = shape;
        scope = "ShST(" + shape.str() + ", " + std::to_string(n) + "), " + std::to_string(fam.size()) + " tableaux";
      } else {
        ShapeUniverse u = universe();
        SearchResult sr = search_counterexample(schema, u, n, {}, vopts);
        v = sr.verdict;
        where = sr.shape;
        scope = u.str() + ", " + std::to_string(sr.shapes_checked) + " families";
      }
      report["parameters"] = {{"schema", schema.text()}, {"n", n}, {"scope", scope}};
      report["holds"] = v.holds;
      report["instances_checked"] = v.instances_checked;
      report["bindings"] = v.bindings;
      if (exhaustive) report["mismatches"] = v.mismatches;
      if (v.counterexample) report["counterexample"] = detail::counterexample_json(*v.counterexample, where);
      if (!json) {
        out << (v.holds ? "holds  " : "FAILS  ") << schema.text() << "\n";
        out << "  " << scope << ", " << v.bindings << " index choices, " << v.instances_checked << " checks";
        if (exhaustive) out << ", " << v.mismatches << " mismatches";
        out << "\n";
        if (v.counterexample) detail::print_counterexample(out, *v.counterexample, where);
      }
      return finish(v.holds ? kOk : kCounterexample);
    }

    // -------------------------------------------------------------- search
    if (se->parsed()) {
      RelationSchema schema = RelationSchema::parse(schema_text);
      ShapeUniverse u = universe();
      SearchResult sr = search_counterexample(schema, u, n, {max_instances, max_family}, vopts);
      report["command"] = "search";
      report["parameters"] = {{"schema", schema.text()}, {"n", n}, {"shapes", u.str()}};
      report["shapes_checked"] = sr.shapes_checked;
      report["instances_checked"] = sr.verdict.instances_checked;
      std::string status = sr.verdict.counterexample ? "counterexample"
                           : sr.budget_exhausted   ? "budget exhausted"
                                                   : "exhausted, holds";
      report["status"] = status;
      if (sr.budget_exhausted) report["budget"] = sr.budget_note;
      if (sr.verdict.counterexample) report["counterexample"] = detail::counterexample_json(*sr.verdict.counterexample, sr.shape);
      if (!json) {
        out << status << "  " << schema.text() << "\n";
        out << "  " << u.str() << ", " << sr.shapes_checked << " families, " << sr.verdict.instances_checked
            << " checks\n";
        if (sr.budget_exhausted) out << "  " << sr.budget_note << "\n";
        if (sr.verdict.counterexample) detail::print_counterexample(out, *sr.verdict.counterexample, sr.shape);
      }
      int code = sr.verdict.counterexample ? kCounterexample : sr.budget_exhausted ? kUndecided : kOk;
      return finish(code);
    }

    // --------------------------------------------------------------- orbit
    if (ob->parsed()) {
      Tableau t = detail::load_tableau(in_path, n_override);
      auto gens = detail::parse_generator_list(gens_text);
      OrbitGraph g = orbit_graph(t, gens, max_size);
      report["command"] = "orbit";
      ordered_json gnames = ordered_json::array();
      for (auto& x : gens) gnames.push_back(x.str());
      report["parameters"] = {{"gens", gnames}, {"seed", to_json(t)}};
      if (!dot_path.empty()) {
        if (dot_path == "-") {
          write_dot(out, g);
        } else {
          std::ofstream f(dot_path);
          if (!f) throw TableauError("cannot write '" + dot_path + "'");
          write_dot(f, g);
        }
      }
      if (json) {
        auto vs = ordered_json::array();
        for (auto& v : g.vertices) vs.push_back(render_compact(v));
        auto es = ordered_json::array();
        for (auto& e : g.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
        report["vertices"] = vs;
        report["edges"] = es;
      } else if (dot_path != "-") {
        out << "orbit of size " << g.vertices.size() << " under " << gens_text << "\n";
        for (std::size_t k = 0; k < g.vertices.size(); ++k) out << "v" << k << ": " << render_compact(g.vertices[k]) << "\n";
        for (auto& e : g.edges) out << "v" << e.from << " -" << e.label << "-> v" << e.to << "\n";
      }
      return finish(kOk);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kUndecided;
  } catch (const IntegrityError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace shtab::cli

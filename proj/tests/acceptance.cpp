// Acceptance checks. Prints one PASS/FAIL line per criterion, with the
// failing details indented below it.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "brute_unify.hpp"
#include "lpterm/analyzer.hpp"
#include "lpterm/oracle.hpp"
#include "lpterm/symbol_string.hpp"
#include "support.hpp"

using namespace lpterm;
using namespace lpterm::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }
};

Config config(int algorithm, bool heuristic1 = true) {
  Config cfg;
  cfg.algorithm = algorithm;
  cfg.heuristic1 = heuristic1;
  return cfg;
}

struct GoldenRow {
  std::string program;
  std::string query;
  int algorithm;
  bool heuristic1;
  Verdict expected;
};

std::vector<GoldenRow> golden_rows() {
  using V = Verdict;
  std::vector<GoldenRow> rows = {
      {"p0.pl", "p(@I)", 1, true, V::MostLikelyTerminating},
      {"p0.pl", "p(@I)", 2, true, V::Terminating},
      {"p1.pl", "p(@I)", 1, true, V::MostLikelyNonTerminating},
      {"p1.pl", "p(@I)", 2, true, V::MostLikelyNonTerminating},
      {"p2.pl", "p(@I)", 1, true, V::Terminating},
      {"p2.pl", "p(@I)", 2, true, V::Terminating},
      {"p2.pl", "q", 1, true, V::MostLikelyNonTerminating},
      {"p2.pl", "q", 2, true, V::NonTerminating},
      {"p3.pl", "append(@I,V2,V3)", 1, true, V::MostLikelyTerminating},
      {"p3.pl", "append(@I,V2,V3)", 2, true, V::Terminating},
      {"p3.pl", "append(V1,@I,V3)", 1, true, V::MostLikelyNonTerminating},
      {"p3.pl", "append(V1,@I,V3)", 2, true, V::NonTerminating},
      {"p3.pl", "append(V1,V2,@I)", 2, true, V::Terminating},
      {"p5.pl", "p(@I,0)", 2, true, V::MostLikelyNonTerminating},
      {"p5.pl", read_fixture("p5_s101.query"), 2, true, V::MostLikelyTerminating},
      {"p5.pl", "q", 2, true, V::NonTerminating},
      {"p5.pl", "p(@I,0)", 2, false, V::MostLikelyTerminating},
  };
  const std::vector<std::pair<std::string, V>> p4 = {
      {"add(@I,V2,V3)", V::MostLikelyTerminating},
      {"add(V1,@I,V3)", V::MostLikelyNonTerminating},
      {"add(@I1,@I2,V3)", V::MostLikelyTerminating},
      {"add(V1,V2,@I)", V::MostLikelyTerminating},
      {"add(@I1,V2,@I3)", V::MostLikelyTerminating},
      {"add(V1,@I2,@I3)", V::MostLikelyTerminating},
      {"add(@I1,@I2,@I3)", V::MostLikelyTerminating},
      {"mult(@I,V2,V3)", V::MostLikelyNonTerminating},
      {"mult(V1,@I,V3)", V::MostLikelyNonTerminating},
      {"mult(@I1,@I2,V3)", V::MostLikelyTerminating},
      {"mult(V1,V2,@I)", V::MostLikelyNonTerminating},
      {"mult(@I1,V2,@I3)", V::MostLikelyNonTerminating},
      {"mult(V1,@I2,@I3)", V::MostLikelyNonTerminating},
      {"mult(@I1,@I2,@I3)", V::MostLikelyTerminating},
  };
  for (int alg : {1, 2}) {
    for (const auto& [q, v] : p4) rows.push_back({"p4.pl", q, alg, true, v});
  }
  return rows;
}

std::string describe(const GoldenRow& row) {
  std::string q = row.query;
  if (q.size() > 40) q = q.substr(0, 37) + "...";
  while (!q.empty() && (q.back() == '\n' || q.back() == ' ')) q.pop_back();
  return row.program + " " + q + " alg" + std::to_string(row.algorithm) +
         (row.heuristic1 ? "" : " no-h1");
}

struct GoldenResult {
  GoldenRow row;
  Program program;
  Query query;
  AnalysisReport report;
};

std::vector<GoldenResult> run_golden() {
  std::vector<GoldenResult> out;
  for (const GoldenRow& row : golden_rows()) {
    Program p = fixture(row.program);
    Query q = query(row.query);
    Config cfg = config(row.algorithm, row.heuristic1);
    cfg.keep_tree = true;
    AnalysisReport r = analyze(p, q, cfg);
    out.push_back({row, std::move(p), std::move(q), std::move(r)});
  }
  return out;
}

Outcome golden_table(const std::vector<GoldenResult>& results) {
  Outcome o;
  for (const GoldenResult& g : results) {
    const AnalysisReport& r = g.report;
    std::string got = r.verdict ? std::string(verdict_token(*r.verdict))
                                : "error: " + r.error_message;
    o.require(r.verdict == g.row.expected,
              describe(g.row) + ": expected " +
                  std::string(verdict_token(g.row.expected)) + ", got " + got);
    if (g.row.program == "p5.pl" && g.row.query == "p(@I,0)" && g.row.heuristic1 &&
        r.tree) {
      // The first cut must wait for the second argument to reach depth 100.
      std::optional<std::size_t> depth;
      for (const Node& n : r.tree->nodes) {
        if (n.cuts.empty()) continue;
        depth = nesting_depth(n.selected().atom.args[1]);
        break;
      }
      o.require(depth && *depth >= 100,
                describe(g.row) + ": first cut at second-argument depth " +
                    (depth ? std::to_string(*depth) : std::string("none")));
    }
  }
  return o;
}

Outcome instance_replay() {
  Outcome o;
  Program p = fixture("p0.pl");
  Config cfg = config(1);
  cfg.keep_tree = true;
  AnalysisReport r = analyze(p, query("p(@I)"), cfg);
  if (!r.tree) {
    o.require(false, "no tree retained");
    return o;
  }
  std::optional<NodeId> looping;
  for (const Node& n : r.tree->nodes) {
    if (!n.cuts.empty()) looping = n.id;
  }
  if (!looping) {
    o.require(false, "no looping derivation in the tree of p(@I)");
    return o;
  }
  Derivation d = derivation_to(*r.tree, *looping);
  o.require(d.inputs.size() == 1, "root should have one input variable");
  if (d.inputs.empty()) return o;
  const VarId input = *d.inputs.begin();
  const std::size_t c_p1 = p.clauses_for({"p", 1})[0];
  const std::size_t c_p2 = p.clauses_for({"p", 1})[1];

  Term t = Term::constant("a");
  for (std::size_t k = 0; k < 3; ++k) {
    InstantiatedDerivation inst = instantiate_derivation(p, d, {{input, t}});
    std::vector<DerivationStep> expected(k, {EdgeKind::Resolution, c_p2});
    o.require(inst.steps == expected,
              "I := " + to_string(t) + ": " + std::to_string(inst.steps.size()) +
                  " steps, expected " + std::to_string(k) + " through C_p2");
    const std::vector<Literal>& last = inst.goals.back();
    o.require(last.size() == 1 && to_string(last.front()) == "p(a)",
              "I := " + to_string(t) + ": instance ends at " + to_string(last));
    // The instance, followed by the unit clause, is a derivation of the
    // ground query found by plain evaluation.
    std::vector<DerivationStep> full = expected;
    full.push_back({EdgeKind::Resolution, c_p1});
    bool seen = false;
    SearchOptions opts;
    opts.on_leaf = [&](const std::vector<DerivationStep>& steps) {
      seen = seen || steps == full;
    };
    Query ground{inst.root, ModePattern{{false}}};
    bounded_search(p, ground, opts);
    o.require(seen, "I := " + to_string(t) + ": derivation not found by the oracle");
    t = Term::compound("f", {t});
  }
  return o;
}

Outcome oracle_consistency(const std::vector<GoldenResult>& results) {
  Outcome o;
  std::size_t checked = 0;
  for (const GoldenResult& g : results) {
    if (!g.report.verdict) continue;
    const Verdict v = *g.report.verdict;
    if (v != Verdict::Terminating && v != Verdict::NonTerminating) continue;
    ++checked;
    SearchOptions opts;
    opts.max_len = 500;
    // One capped derivation is enough evidence for a NON_TERMINATING verdict.
    opts.stop_at_cap = v == Verdict::NonTerminating;
    const auto start = std::chrono::steady_clock::now();
    BoundedForestSummary s = forest_probe(g.program, g.query, 3, opts);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (ms > 1000) o.notes.push_back(describe(g.row) + ": probe took " + std::to_string(ms) + " ms");
    if (v == Verdict::Terminating) {
      o.require(!s.reached_cap && s.errors.empty(),
                describe(g.row) + ": TERMINATING but the probe hit the cap");
    } else {
      o.require(s.reached_cap,
                describe(g.row) + ": NON_TERMINATING but no probed instance hit the cap");
    }
  }
  o.notes.push_back(std::to_string(checked) + " exact verdicts probed");
  return o;
}

std::vector<Program> random_corpus() {
  std::vector<Program> out;
  for (std::uint32_t seed = 1; seed <= 200; ++seed) {
    out.push_back(ProgramGenerator(seed).program());
  }
  return out;
}

Outcome completeness(const std::vector<Program>& corpus) {
  Outcome o;
  std::size_t queries = 0, floundered = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const AnalysisReport& r : analyze_all(corpus[i], Config{}, false)) {
      ++queries;
      if (r.floundered) ++floundered;
      o.require(r.error != EngineError::Kind::ResourceExceeded,
                "program " + std::to_string(i + 1) + " " + to_string(r.query) +
                    ": resource limit exceeded");
    }
  }
  o.notes.push_back(std::to_string(queries) + " queries, " +
                    std::to_string(floundered) + " floundered");
  return o;
}

std::uint64_t mask_of(const Query& q) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < q.pattern.input.size(); ++i) {
    if (q.pattern.input[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

bool is_prefix_mask(std::uint64_t m) { return (m & (m + 1)) == 0; }

Outcome monotonicity(const std::vector<Program>& corpus) {
  Outcome o;
  std::vector<std::pair<std::string, Program>> programs;
  for (const char* f : {"p0.pl", "p1.pl", "p2.pl", "p3.pl", "p4.pl", "p5.pl"}) {
    programs.emplace_back(f, fixture(f));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    programs.emplace_back("random " + std::to_string(i + 1), corpus[i]);
  }
  std::size_t prefix_pairs = 0, subset_pairs = 0, subset_violations = 0;
  for (const auto& [name, p] : programs) {
    std::map<PredicateKey, std::map<std::uint64_t, Verdict>> verdicts;
    for (const Query& q : enumerate_moded_queries(p)) {
      AnalysisReport r = analyze(p, q, config(1));
      if (r.verdict) verdicts[q.atom.key()][mask_of(q)] = *r.verdict;
    }
    for (const auto& [key, by_mask] : verdicts) {
      for (const auto& [a, va] : by_mask) {
        for (const auto& [b, vb] : by_mask) {
          if (a == b || (a & b) != a) continue;
          const bool ok = vb >= va;
          if (is_prefix_mask(a) && is_prefix_mask(b)) {
            ++prefix_pairs;
            o.require(ok, name + " " + key.name + ": mask " + std::to_string(a) +
                              " " + std::string(verdict_token(va)) + " > mask " +
                              std::to_string(b) + " " +
                              std::string(verdict_token(vb)));
          } else {
            ++subset_pairs;
            if (!ok) ++subset_violations;
          }
        }
      }
    }
  }
  o.notes.push_back(std::to_string(prefix_pairs) + " prefix pairs checked; " +
                    std::to_string(subset_violations) + " of " +
                    std::to_string(subset_pairs) +
                    " other subset pairs decrease (reported only)");
  return o;
}

Outcome unit_laws() {
  Outcome o;
  // The three symbol strings from the definition.
  const Term x = Term::variable(VarId{1}, "X");
  const Term y = Term::variable(VarId{2}, "Y");
  const Term a = Term::constant("a");
  o.require(to_string(symbol_string(a)) == "a", "symbol string of a");
  const Term t2 = Term::compound(
      "f", {x, Term::compound("g", {x, Term::compound("f", {a, y})})});
  o.require(to_string(symbol_string(t2)) == "f X g X f a X", "symbol string of f(X,g(X,f(a,Y)))");
  o.require(symbol_string(Term::list({x, a})).size() == 5 &&
                to_string(symbol_string(Term::list({x, a}))) == "[|] X [|] a []",
            "symbol string of [X,a]");
  o.require(loops_into(Atom{"p", {x}}, Atom{"p", {Term::compound("f", {x})}}),
            "p(X) loops into p(f(X))");
  o.require(!loops_into(Atom{"p", {Term::compound("f", {x})}}, Atom{"p", {x}}),
            "p(f(X)) does not loop into p(X)");

  // mgu soundness and generality against exhaustive search.
  AtomPairGenerator gen(2024);
  const std::vector<Term> domain = brute_domain();
  std::size_t unifiable = 0;
  for (int i = 0; i < 1000; ++i) {
    auto [l, r] = gen.next();
    auto u = mgu(l, r, {});
    auto found = brute_unifiers(l, r, domain);
    if (u) {
      ++unifiable;
      o.require(apply(u->subst, l) == apply(u->subst, r),
                "mgu does not unify " + to_string(l) + " and " + to_string(r));
    }
    if (!found.empty()) {
      o.require(u.has_value(), "mgu missed a unifier of " + to_string(l) + " and " +
                                   to_string(r));
      if (u) {
        for (const auto& theta : found) {
          if (!subsumes(u->subst, theta)) {
            o.require(false, "mgu of " + to_string(l) + " and " + to_string(r) +
                                 " is not most general");
            break;
          }
        }
      }
    }
  }
  o.notes.push_back(std::to_string(unifiable) + " of 1000 pairs unifiable");

  // Ancestor lists across the negation arc of P1.
  Program p1 = fixture("p1.pl");
  Config cfg = config(2);
  cfg.keep_tree = true;
  AnalysisReport r1 = analyze(p1, query("p(@I)"), cfg);
  bool found_link = false;
  if (r1.tree) {
    for (const Node& n : r1.tree->nodes) {
      if (n.goal.empty() || n.selected().negative) continue;
      const std::string sel = to_string(n.selected().atom);
      if (sel.rfind("p(f(", 0) != 0) continue;
      for (const AncestorEntry& e : n.ancestors.front()) {
        if (e.node == 0) found_link = true;
      }
      break;
    }
  }
  o.require(found_link, "P1: p(I) is not an ancestor of p(f(I))");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<GoldenResult> golden;
  std::vector<Program> corpus;
  const std::vector<Criterion> criteria = {
      {1, "golden verdict table", [&] {
         golden = run_golden();
         return golden_table(golden);
       }},
      {2, "moded-instance replay", instance_replay},
      {3, "oracle consistency", [&] { return oracle_consistency(golden); }},
      {4, "loop-check completeness proxy", [&] {
         corpus = random_corpus();
         return completeness(corpus);
       }},
      {5, "mode monotonicity", [&] { return monotonicity(corpus); }},
      {6, "unit laws", unit_laws},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": "
              << c.title << " (" << ms << " ms)\n";
    for (const std::string& n : o.notes) std::cout << "      " << n << "\n";
    for (const std::string& d : o.details) std::cout << "      " << d << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size()
            << " criteria passed\n";
  return failed ? 1 : 0;
}

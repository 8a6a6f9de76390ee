#include <gtest/gtest.h>

#include <algorithm>

#include "lpterm/analyzer.hpp"
#include "lpterm/oracle.hpp"
#include "support.hpp"

using namespace lpterm;
using lpterm::testing::fixture;
using lpterm::testing::query;

namespace {

std::vector<std::string> printed(const std::vector<Term>& ts) {
  std::vector<std::string> out;
  for (const Term& t : ts) out.push_back(to_string(t));
  return out;
}

Term a() { return Term::constant("a"); }
Term f(Term t) { return Term::compound("f", {std::move(t)}); }

}  // namespace

TEST(Herbrand, UnaryChain) {
  Program p = fixture("p0.pl");
  EXPECT_EQ(printed(herbrand_terms(p, 0)), (std::vector<std::string>{"a"}));
  EXPECT_EQ(herbrand_terms(p, 2), (std::vector<Term>{a(), f(a()), f(f(a()))}));
}

TEST(Herbrand, Lists) {
  Program p = fixture("p3.pl");
  std::vector<Term> t1 = herbrand_terms(p, 1);
  const Term nil = Term::constant(std::string(kEmptyList));
  ASSERT_EQ(t1.size(), 2u);
  EXPECT_EQ(t1[0], nil);
  EXPECT_EQ(t1[1], Term::list({nil}));
}

TEST(Herbrand, GrowsMonotonically) {
  Program p = program_from("p(g(X, Y)) :- p(X). p(b). p(c).");
  std::size_t prev = 0;
  for (std::size_t d = 0; d <= 2; ++d) {
    std::vector<Term> ts = herbrand_terms(p, d);
    EXPECT_GT(ts.size(), prev);
    for (const Term& t : ts) EXPECT_LE(nesting_depth(t), d);
    if (d > 0) {
      std::vector<Term> smaller = herbrand_terms(p, d - 1);
      for (const Term& t : smaller) {
        EXPECT_NE(std::find(ts.begin(), ts.end(), t), ts.end());
      }
    }
    prev = ts.size();
  }
  // 2 constants, 4 pairs, then 6*6 - 4 pairs reaching depth 2.
  EXPECT_EQ(herbrand_terms(p, 2).size(), 2u + 4u + 32u);
}

TEST(Herbrand, SyntheticConstant) {
  Program p = program_from("p(f(X)) :- p(X).");
  std::vector<Term> ts = herbrand_terms(p, 1);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(nesting_depth(ts[1]), 1u);
}

TEST(GroundInstances, LastPositionFastest) {
  std::vector<Term> terms{a(), f(a())};
  auto qs = ground_instances(query("p(@I1,V2,@I3)"), terms);
  ASSERT_EQ(qs.size(), 4u);
  EXPECT_EQ(to_string(qs[0]), "p(a,V2,a)");
  EXPECT_EQ(to_string(qs[1]), "p(a,V2,f(a))");
  EXPECT_EQ(to_string(qs[2]), "p(f(a),V2,a)");
  for (const Query& q : qs) EXPECT_FALSE(q.pattern.is_moded());
}

TEST(GroundInstances, ConcreteQueryIsItsOwnInstance) {
  auto qs = ground_instances(query("p(X1)"), {a()});
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(to_string(qs[0]), "p(X1)");
}

TEST(BoundedSearch, FiniteChain) {
  SearchResult r = bounded_search(fixture("p0.pl"), query("p(f(f(a)))"), 50);
  EXPECT_EQ(r.longest, 3u);
  EXPECT_FALSE(r.reached_cap);
  EXPECT_FALSE(r.exhausted);
}

TEST(BoundedSearch, InfiniteNegationChain) {
  SearchResult r = bounded_search(fixture("p1.pl"), query("p(a)"), 50);
  EXPECT_TRUE(r.reached_cap);
  EXPECT_EQ(r.longest, 50u);
}

TEST(BoundedSearch, AppendGroundListsFinite) {
  SearchResult r = bounded_search(fixture("p3.pl"), query("append([],[],X)"), 50);
  EXPECT_FALSE(r.reached_cap);
  EXPECT_EQ(r.longest, 1u);
}

TEST(BoundedSearch, SubsidiaryStopsAtFirstSuccess) {
  // q :- q. is never tried under \+ q.
  SearchResult r = bounded_search(fixture("p2.pl"), query("p(a)"), 50);
  EXPECT_FALSE(r.reached_cap);
}

TEST(BoundedSearch, RejectsModedQueries) {
  EXPECT_THROW(bounded_search(fixture("p0.pl"), query("p(@I)"), 10), std::invalid_argument);
}

TEST(BoundedSearch, Flounders) {
  EXPECT_THROW(bounded_search(fixture("p1.pl"), query("p(X1)"), 10), EngineError);
}

TEST(BoundedSearch, LeafCallbackSeesEveryLeaf) {
  SearchOptions opts;
  opts.max_len = 10;
  std::vector<std::vector<DerivationStep>> leaves;
  opts.on_leaf = [&](const std::vector<DerivationStep>& s) { leaves.push_back(s); };
  bounded_search(fixture("p0.pl"), query("p(f(a))"), opts);
  // Clauses whose heads do not unify create no node, so p(f(a)) has one leaf.
  ASSERT_EQ(leaves.size(), 1u);
  EXPECT_EQ(leaves[0], (std::vector<DerivationStep>{{EdgeKind::Resolution, 1},
                                                    {EdgeKind::Resolution, 0}}));
  leaves.clear();
  bounded_search(fixture("p0.pl"), query("p(b)"), opts);
  ASSERT_EQ(leaves.size(), 1u);
  EXPECT_TRUE(leaves[0].empty());
}

TEST(BoundedSearch, StopAtCap) {
  SearchOptions opts;
  opts.max_len = 20;
  opts.stop_at_cap = true;
  std::size_t leaves = 0;
  opts.on_leaf = [&](const std::vector<DerivationStep>&) { ++leaves; };
  SearchResult r = bounded_search(fixture("p4.pl"), query("mult(X1,X2,X3)"), opts);
  EXPECT_TRUE(r.reached_cap);
  EXPECT_LE(leaves, 25u);
}

TEST(ForestProbe, P0AllFinite) {
  BoundedForestSummary s = forest_probe(fixture("p0.pl"), query("p(@I)"), 4, 100);
  EXPECT_EQ(s.instances, 5u);
  EXPECT_TRUE(s.all_finite);
  EXPECT_EQ(s.longest, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(ForestProbe, P1EveryInstanceReachesTheCap) {
  BoundedForestSummary s = forest_probe(fixture("p1.pl"), query("p(@I)"), 3, 40);
  EXPECT_EQ(s.instances, 4u);
  EXPECT_TRUE(s.reached_cap);
  for (std::size_t l : s.longest) EXPECT_EQ(l, 40u);
}

TEST(ForestProbe, RecordsErrors) {
  BoundedForestSummary s = forest_probe(fixture("p1.pl"), query("p(X1)"), 1, 10);
  EXPECT_EQ(s.instances, 1u);
  EXPECT_FALSE(s.all_finite);
  ASSERT_EQ(s.errors.size(), 1u);
}

TEST(Replay, DerivationFromTreeInstantiates) {
  Config cfg;
  cfg.algorithm = 1;
  cfg.keep_tree = true;
  AnalysisReport r = analyze(fixture("p0.pl"), query("p(@I)"), cfg);
  ASSERT_TRUE(r.tree);
  // N5 is the success leaf below N4.
  Derivation d = derivation_to(*r.tree, 5);
  ASSERT_EQ(d.steps.size(), 3u);
  EXPECT_EQ(d.steps[0], (DerivationStep{EdgeKind::Resolution, 1}));
  EXPECT_EQ(d.steps[2], (DerivationStep{EdgeKind::Resolution, 0}));
  ASSERT_EQ(d.inputs.size(), 1u);
  const VarId input = *d.inputs.begin();

  InstantiatedDerivation ok =
      instantiate_derivation(fixture("p0.pl"), d, {{input, f(f(a()))}});
  EXPECT_FALSE(ok.mismatch);
  ASSERT_EQ(ok.goals.size(), 4u);
  EXPECT_TRUE(ok.goals.back().empty());
  EXPECT_EQ(to_string(ok.root), "p(f(f(a)))");

  InstantiatedDerivation short_one =
      instantiate_derivation(fixture("p0.pl"), d, {{input, f(a())}});
  EXPECT_EQ(short_one.mismatch, 1u);
  EXPECT_EQ(short_one.steps.size(), 1u);
}

TEST(Replay, NeedsEveryInput) {
  Derivation d;
  d.root = query("p(@I)").atom;
  d.inputs = {VarId{1}};
  EXPECT_THROW(instantiate_derivation(fixture("p0.pl"), d, {}), std::invalid_argument);
}

TEST(Replay, NegationSteps) {
  Config cfg;
  cfg.keep_tree = true;
  AnalysisReport r = analyze(fixture("p1.pl"), query("p(@I)"), cfg);
  ASSERT_TRUE(r.tree);
  Derivation d = derivation_to(*r.tree, r.tree->nodes.size() - 1);
  ASSERT_GE(d.steps.size(), 2u);
  EXPECT_EQ(d.steps[1].kind, EdgeKind::NegationArc);
  InstantiatedDerivation g = instantiate_derivation(fixture("p1.pl"), d, {{*d.inputs.begin(), a()}});
  EXPECT_FALSE(g.mismatch);
  EXPECT_EQ(to_string(g.goals[2]), "p(f(a))");
}

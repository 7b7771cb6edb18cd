#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "xhtpy/constructions.hpp"
#include "xhtpy/verify.hpp"
#include "xhtpy/weq.hpp"

using namespace xhtpy;

namespace {

const WSemantics kInduced{CopyMode::Induced, ImageMode::ImageSubgraph};

Implication result_of(const ChainReport& r, std::string_view statement) {
  for (const auto& a : r.axioms)
    if (a.statement == statement) return a.result;
  ADD_FAILURE() << "no implication " << statement;
  return Implication::Unknown;
}

// Checks the per-verdict properties and returns the verdict.
Verdict checked_in_w(const GraphMap& f, const WSemantics& s = {}) {
  WMembershipVerdict v = in_W(f, s);
  if (v.verdict == Verdict::Out) {
    EXPECT_TRUE(v.witness.has_value());
    EXPECT_TRUE(reverify_witness(v));
    EXPECT_TRUE(oracle::w_witness_valid(v));
  }
  if (v.verdict == Verdict::In && s.image == ImageMode::ImageSubgraph)
    EXPECT_TRUE(is_isomorphic(v.domain_stiff, v.codomain_stiff));
  return v.verdict;
}

}  // namespace

TEST(InW, FigureOne) {
  const Figure1 fig = build_figure1();
  EXPECT_EQ(checked_in_w(fig.f), Verdict::In);
  EXPECT_EQ(checked_in_w(compose(fig.g, fig.f)), Verdict::In);

  WMembershipVerdict g = in_W(fig.g);
  EXPECT_EQ(g.verdict, Verdict::Out);
  EXPECT_EQ(g.failure, WFailure::NotInjective);
  ASSERT_TRUE(g.witness);
  EXPECT_TRUE(reverify_witness(g));
  // Under induced copies no failing copy exists.
  EXPECT_EQ(in_W(fig.g, kInduced).verdict, Verdict::In);
}

TEST(InW, FigureThree) {
  const Figure3 fig = build_figure3();
  WMembershipVerdict f = in_W(fig.f);
  EXPECT_EQ(f.verdict, Verdict::Out);
  EXPECT_EQ(f.failure, WFailure::ImageNotStiff);
  EXPECT_EQ(f.domain_stiff.order(), 1u);
  EXPECT_EQ(f.codomain_stiff.order(), 3u);
  EXPECT_EQ(checked_in_w(compose(fig.g, fig.f)), Verdict::In);
  EXPECT_EQ(checked_in_w(compose(fig.h, fig.g)), Verdict::In);
  EXPECT_EQ(checked_in_w(GraphMap::identity(fig.d)), Verdict::In);
}

TEST(InW, ReportsBudget) {
  Budget tiny;
  tiny.search_nodes = 3;
  EXPECT_THROW(in_W(build_figure1().g, {}, tiny), BudgetExceeded);
  EXPECT_EQ(in_W_times(build_figure1().g, tiny).verdict, Verdict::Unknown);
}

TEST(InWTimes, Examples) {
  const Figure3 fig = build_figure3();
  EXPECT_EQ(in_W_times(GraphMap::identity(fig.c)).verdict, Verdict::In);
  EXPECT_EQ(in_W_times(apply_fold(fig.c, "1", "4").fold).verdict, Verdict::In);
  EXPECT_EQ(in_W_times(fig.f).verdict, Verdict::Out);
  gen::Rng rng(1);
  WxVerdict r = in_W_times(gen::random_relabel(rng, fig.d));
  EXPECT_EQ(r.verdict, Verdict::In);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(verify_equivalence(*r.certificate).ok);
}

TEST(InW, ContainsEquivalences) {
  gen::Rng rng(101);
  int sampled = 0;
  while (sampled < 100) {
    Graph g = gen::random_graph(rng, 1, 4, 0.3, 0.4);
    GraphMap f = gen::random_equivalence(rng, g, 3, 6);
    if (in_W_times(f).verdict != Verdict::In) {
      ADD_FAILURE() << "generator produced a non-equivalence";
      continue;
    }
    ++sampled;
    EXPECT_EQ(checked_in_w(f), Verdict::In);
  }
}

TEST(InW, SampledMapProperties) {
  gen::Rng rng(103);
  int sampled = 0;
  while (sampled < 150) {
    Graph a = gen::random_graph(rng, 1, 5, 0.3, 0.4);
    Graph b = gen::random_graph(rng, 1, 5, 0.3, 0.4);
    auto f = gen::random_map(rng, a, b);
    if (!f) continue;
    ++sampled;
    const Verdict sub = checked_in_w(*f);
    const Verdict ind = checked_in_w(*f, kInduced);
    checked_in_w(*f, {CopyMode::Subgraph, ImageMode::InducedOnImage});
    if (sub == Verdict::In) EXPECT_EQ(ind, Verdict::In);
  }
}

TEST(TwoOfThree, FigureOneViolates) {
  const Figure1 fig = build_figure1();
  ChainReport r = check_two_of_three(fig.f, fig.g, MapClass::W);
  EXPECT_EQ(r.member("f").verdict, Verdict::In);
  EXPECT_EQ(r.member("gf").verdict, Verdict::In);
  EXPECT_EQ(r.member("g").verdict, Verdict::Out);
  EXPECT_EQ(result_of(r, "f, gf => g"), Implication::Violated);
  EXPECT_EQ(result_of(r, "f, g => gf"), Implication::Vacuous);
  EXPECT_TRUE(r.violated());
}

TEST(TwoOfThree, FoldsAndIdentities) {
  const Graph i2 = interval(2);
  FoldResult first = apply_fold(i2, "2", "1");
  FoldResult second = apply_fold(first.graph, "1", "0");
  ChainReport r = check_two_of_three(first.fold, second.fold, MapClass::WTimes);
  EXPECT_FALSE(r.violated());
  for (const auto& m : r.memberships) EXPECT_EQ(m.verdict, Verdict::In);

  GraphMap id = GraphMap::identity(i2);
  ChainReport ids = check_two_of_three(id, id, MapClass::W);
  for (const auto& a : ids.axioms) EXPECT_EQ(a.result, Implication::Holds);
  EXPECT_THROW(check_two_of_three(first.fold, first.fold, MapClass::W), Error);
}

TEST(TwoOfSix, FigureThreeViolates) {
  const Figure3 fig = build_figure3();
  ChainReport r = check_two_of_six(fig.f, fig.g, fig.h, MapClass::W);
  EXPECT_EQ(r.member("gf").verdict, Verdict::In);
  EXPECT_EQ(r.member("hg").verdict, Verdict::In);
  EXPECT_EQ(r.member("f").verdict, Verdict::Out);
  EXPECT_TRUE(r.violated());
  ASSERT_TRUE(r.member("f").w);
  EXPECT_TRUE(reverify_witness(*r.member("f").w));
}

TEST(TwoOfSix, ThreeFoldsAndIdentities) {
  const Graph i3 = interval(3);
  FoldResult a = apply_fold(i3, "3", "2");
  FoldResult b = apply_fold(a.graph, "2", "1");
  FoldResult c = apply_fold(b.graph, "1", "0");
  ChainReport r = check_two_of_six(a.fold, b.fold, c.fold, MapClass::WTimes);
  EXPECT_EQ(r.memberships.size(), 6u);
  for (const auto& m : r.memberships) EXPECT_EQ(m.verdict, Verdict::In);
  EXPECT_FALSE(r.violated());

  GraphMap id = GraphMap::identity(i3);
  EXPECT_FALSE(check_two_of_six(id, id, id, MapClass::W).violated());
}

TEST(TwoOfSix, HoldsForEquivalenceChains) {
  gen::Rng rng(107);
  for (int i = 0; i < 15; ++i) {
    Graph g = gen::random_graph(rng, 1, 3, 0.3, 0.5);
    GraphMap f = gen::random_equivalence(rng, g, 2, 4);
    GraphMap h1 = gen::random_equivalence(rng, f.codomain(), 2, 4);
    GraphMap h2 = gen::random_equivalence(rng, h1.codomain(), 2, 4);
    EXPECT_FALSE(check_two_of_six(f, h1, h2, MapClass::WTimes).violated());
  }
}

TEST(Closure, Examples) {
  const Graph i2 = interval(2);
  FoldResult first = apply_fold(i2, "2", "1");
  FoldResult second = apply_fold(first.graph, "1", "0");
  ChainReport folds = composition_closure_check(first.fold, second.fold);
  EXPECT_EQ(folds.member("gf").verdict, Verdict::In);
  EXPECT_EQ(folds.axioms.front().result, Implication::Holds);

  // Fold then unfold on four vertices.
  const Graph g4 = make_graph({"0", "1", "2", "3"}, {{"0", "0"}, {"0", "1"}, {"1", "1"}, {"1", "2"}, {"2", "3"}, {"3", "3"}});
  ASSERT_FALSE(foldable_pairs(g4).empty());
  const auto [v, w] = foldable_pairs(g4).front();
  FoldResult fold = apply_fold(g4, v, w);
  GraphMap unfold = GraphMap::inclusion(fold.graph, g4);
  ASSERT_TRUE(is_unfold(unfold));
  ChainReport mixed = composition_closure_check(fold.fold, unfold);
  EXPECT_EQ(mixed.member("gf").verdict, Verdict::In);
  EXPECT_FALSE(mixed.violated());

  GraphMap id = GraphMap::identity(g4);
  EXPECT_EQ(composition_closure_check(id, id).axioms.front().result, Implication::Holds);
}

TEST(RightCancellation, Examples) {
  const Figure3 fig = build_figure3();
  ChainReport r = right_cancellation_check(fig.f, fig.g);
  EXPECT_EQ(r.member("g").verdict, Verdict::Out);
  EXPECT_EQ(r.axioms.front().result, Implication::Vacuous);

  const Graph i2 = interval(2);
  FoldResult first = apply_fold(i2, "2", "1");
  FoldResult second = apply_fold(first.graph, "1", "0");
  EXPECT_EQ(right_cancellation_check(first.fold, second.fold).axioms.front().result,
            Implication::Holds);

  const Figure1 fig1 = build_figure1();
  ChainReport id = right_cancellation_check(fig1.f, GraphMap::identity(fig1.b));
  EXPECT_EQ(id.axioms.front().result, Implication::Holds);
}

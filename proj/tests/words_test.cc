#include "assoclab/words.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "assoclab/associativity.h"
#include "assoclab/finite_groupoid.h"
#include "assoclab/sphere_groupoids.h"

namespace assoclab {
namespace {

using Step = RewriteStep<ElementId>;

class IntervalWords : public ::testing::Test {
 protected:
  Word<ElementId> W(std::initializer_list<int> values) const {
    Word<ElementId> w;
    for (int v : values) w.push_back(grp_.ElementByName(std::to_string(v)));
    return w;
  }
  int Sum(const Word<ElementId>& w) const {
    int s = 0;
    for (ElementId e : w) s += std::stoi(grp_.ElementName(e));
    return s;
  }

  const FiniteLocalGroupoid grp_ = IntegerInterval(4);
  const Factorizer<ElementId> factor_ = TableFactorizer(grp_);
};

TEST_F(IntervalWords, ContractionWithUnit) {
  const auto w = W({3, 0});
  const auto out = Apply(grp_, std::span<const ElementId>(w), Step::Contract(0));
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(*out, W({3}));
  EXPECT_FALSE(Apply(grp_, std::span<const ElementId>(w), Step::Contract(1)).has_value());
  const auto big = W({3, 2});
  EXPECT_FALSE(Apply(grp_, std::span<const ElementId>(big), Step::Contract(0)).has_value());
}

TEST_F(IntervalWords, ExpandThenContractRestores) {
  const auto w = W({1, 3, -2});
  const auto expanded = Apply(grp_, std::span<const ElementId>(w), Step::Expand(1, W({4})[0], W({-1})[0]));
  ASSERT_TRUE(expanded.has_value());
  EXPECT_EQ(*expanded, W({1, 4, -1, -2}));
  const auto back = Apply(grp_, std::span<const ElementId>(*expanded), Step::Contract(1));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, w);
  EXPECT_FALSE(Apply(grp_, std::span<const ElementId>(w), Step::Expand(1, W({4})[0], W({4})[0])).has_value());
}

TEST(Words, ContractionPreservesEnds) {
  FiniteLocalGroupoid::Builder b;
  b.AddObject("x").AddObject("y").AddObject("z");
  b.AddElement("1x", "x", "x").AddElement("1y", "y", "y").AddElement("1z", "z", "z");
  b.AddElement("f", "x", "y").AddElement("g", "y", "z").AddElement("gf", "x", "z");
  for (const char* o : {"x", "y", "z"}) b.SetUnit(o, std::string("1") + o);
  b.SetMul("g", "f", "gf");
  const auto grp = b.Build();
  const Word<ElementId> w = {grp.ElementByName("g"), grp.ElementByName("f")};
  ASSERT_TRUE(IsWellFormed(grp, std::span<const ElementId>(w)));
  const Word<ElementId> bad = {grp.ElementByName("f"), grp.ElementByName("g")};
  EXPECT_FALSE(IsWellFormed(grp, std::span<const ElementId>(bad)));
  const auto out = Apply(grp, std::span<const ElementId>(w), Step::Contract(0));
  ASSERT_TRUE(out.has_value());
  EXPECT_EQ(grp.Source(out->back()), grp.Source(w.back()));
  EXPECT_EQ(grp.Target(out->front()), grp.Target(w.front()));
}

TEST_F(IntervalWords, SearchFindsSumEquivalence) {
  const auto w1 = W({2, 2, -1}), w2 = W({3});
  const auto r = EquivalenceSearch(grp_, w1, w2, factor_, SearchLimits{});
  ASSERT_EQ(r.status, SearchResult<ElementId>::Status::kEquivalent);
  const auto end = Replay(grp_, w1, std::span<const Step>(r.path));
  ASSERT_TRUE(end.has_value());
  EXPECT_EQ(*end, w2);
}

TEST_F(IntervalWords, DifferentSumsStayUnknown) {
  for (std::size_t depth : {2, 4, 6, 8}) {
    const auto r = EquivalenceSearch(grp_, W({4, 4}), W({1}), factor_, SearchLimits{6, depth, 2'000'000});
    EXPECT_EQ(r.status, SearchResult<ElementId>::Status::kUnknown) << depth;
    EXPECT_TRUE(r.path.empty());
  }
}

TEST_F(IntervalWords, Reflexive) {
  const auto w = W({4, -3, 1});
  const auto r = EquivalenceSearch(grp_, w, w, factor_, SearchLimits{});
  EXPECT_EQ(r.status, SearchResult<ElementId>::Status::kEquivalent);
  EXPECT_TRUE(r.path.empty());
}

TEST_F(IntervalWords, SearchAgreesWithSumsOnRandomPairs) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> letter(-4, 4), len(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    Word<ElementId> w1, w2;
    for (int i = len(rng); i > 0; --i) w1.push_back(W({letter(rng)})[0]);
    for (int i = len(rng); i > 0; --i) w2.push_back(W({letter(rng)})[0]);
    const bool same = Sum(w1) == Sum(w2) && std::abs(Sum(w1)) <= 4;
    const auto r = EquivalenceSearch(grp_, w1, w2, factor_, SearchLimits{});
    if (Sum(w1) != Sum(w2)) {
      EXPECT_EQ(r.status, SearchResult<ElementId>::Status::kUnknown);
    } else if (same) {
      ASSERT_EQ(r.status, SearchResult<ElementId>::Status::kEquivalent);
      EXPECT_EQ(Replay(grp_, w1, std::span<const Step>(r.path)), w2);
    }
  }
}

TEST_F(IntervalWords, MonotoneCertificateThroughAnExpansion) {
  const auto g = W({2});
  const auto cert = IsExpandThenContract(grp_, g, g, factor_, SearchLimits{});
  ASSERT_TRUE(cert.has_value());
  // Explicit certificate (g) -> (a, a^-1 g) -> (g).
  const auto up = Apply(grp_, std::span<const ElementId>(g), Step::Expand(0, W({3})[0], W({-1})[0]));
  ASSERT_TRUE(up.has_value());
  EXPECT_EQ(Apply(grp_, std::span<const ElementId>(*up), Step::Contract(0)), g);

  const auto w1 = W({2, 2, -1}), w2 = W({-1, 4});
  const auto c = IsExpandThenContract(grp_, w1, w2, factor_, SearchLimits{});
  ASSERT_TRUE(c.has_value());
  for (const auto& s : c->expansions) EXPECT_FALSE(s.is_contraction());
  for (const auto& s : c->contractions) EXPECT_TRUE(s.is_contraction());
  EXPECT_EQ(Replay(grp_, w1, std::span<const Step>(c->expansions)), c->peak);
  EXPECT_EQ(Replay(grp_, c->peak, std::span<const Step>(c->contractions)), w2);
}

TEST_F(IntervalWords, NoCertificateForInequivalentWords) {
  EXPECT_FALSE(IsExpandThenContract(grp_, W({4, 4}), W({1}), factor_, SearchLimits{}).has_value());
  EXPECT_FALSE(IsExpandThenContract(grp_, W({1}), W({2}), factor_, SearchLimits{}).has_value());
}

TEST_F(IntervalWords, LimitsAreRespected) {
  const auto r = EquivalenceSearch(grp_, W({1, 1, 1, 1}), W({4}), factor_, SearchLimits{6, 2, 2'000'000});
  EXPECT_EQ(r.status, SearchResult<ElementId>::Status::kUnknown);
  const auto too_long = EquivalenceSearch(grp_, W({1, 1, 1}), W({3}), factor_, SearchLimits{2, 6, 2'000'000});
  EXPECT_EQ(too_long.status, SearchResult<ElementId>::Status::kUnknown);
}

TEST(Factorizers, TableFactorizerListsEveryProduct) {
  const auto grp = CyclicGroup(5);
  const auto f = TableFactorizer(grp);
  for (std::uint32_t i = 0; i < 5; ++i) {
    const auto pairs = f(ElementId{i});
    EXPECT_EQ(pairs.size(), 5u);
    for (const auto& [g, h] : pairs) EXPECT_EQ(grp.TryMul(g, h), ElementId{i});
  }
}

TEST(Factorizers, AlphabetFactorizerReproducesTheElement) {
  const GDoublePrime grp;
  const auto alphabet = TetrahedronAlphabet();
  const auto f = AlphabetFactorizer(grp, alphabet);
  const auto letters = TetrahedronLetters();
  const auto z = *grp.TryMul(letters[1], letters[0]);
  const auto pairs = f(z);
  EXPECT_FALSE(pairs.empty());
  for (const auto& [g, h] : pairs) EXPECT_TRUE(grp.ElementsEqual(*grp.TryMul(g, h), z));
}

TEST(FindAssociators, CyclicGroupHasOnlyTheTrivialRecord) {
  const auto grp = CyclicGroup(5);
  const auto records = FindAssociators(grp, AllElements(grp), 5, ObjectId{0});
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].g, grp.Unit(ObjectId{0}));
}

TEST(FindAssociators, TetrahedronAlphabetRealizesFourPi) {
  const GDoublePrime grp;
  const auto base = TetrahedronConfiguration()[0];
  const auto records = FindAssociators(grp, TetrahedronAlphabet(), 12, base);
  bool found = false;
  for (const auto& r : records) {
    const std::span<const SphereArrow> w(r.word);
    const auto unit = Evaluate(grp, w, r.tree_unit);
    const auto g = Evaluate(grp, w, r.tree_g);
    ASSERT_TRUE(unit && g);
    EXPECT_TRUE(grp.ElementsEqual(*unit, grp.Unit(base)));
    EXPECT_TRUE(grp.ElementsEqual(*g, r.g));
    found = found || std::abs(std::abs(r.g.a) - 4 * kPi) < 1e-8;
    EXPECT_LT(std::abs(std::remainder(r.g.a, 4 * kPi)), 1e-8);
  }
  EXPECT_TRUE(found);
}

TEST(FindAssociators, HalfLambdaRealizesFourPiAndTwoPi) {
  const HLambda grp(0.5);
  const auto records = FindAssociators(grp, HLambdaGadgetAlphabet(), 12, HLambdaBase());
  bool four = false, two = false;
  for (const auto& r : records) {
    const std::span<const ProductArrow> w(r.word);
    const auto unit = Evaluate(grp, w, r.tree_unit);
    const auto g = Evaluate(grp, w, r.tree_g);
    ASSERT_TRUE(unit && g);
    EXPECT_TRUE(grp.ElementsEqual(*unit, grp.Unit(HLambdaBase())));
    EXPECT_NEAR(g->a, r.g.a, 1e-12);
    four = four || std::abs(r.g.a - 4 * kPi) < 1e-6;
    two = two || std::abs(r.g.a - 2 * kPi) < 1e-6;
  }
  EXPECT_TRUE(four);
  EXPECT_TRUE(two);
}

TEST(FindAssociators, RejectsLongWords) {
  const auto grp = CyclicGroup(2);
  EXPECT_THROW(FindAssociators(grp, AllElements(grp), 13, ObjectId{0}), TooLong);
}

}  // namespace
}  // namespace assoclab

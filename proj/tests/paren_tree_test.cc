#include "assoclab/paren_tree.h"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "assoclab/associativity.h"
#include "assoclab/finite_groupoid.h"
#include "assoclab/sphere_groupoids.h"

namespace assoclab {
namespace {

// Catalan numbers by the convolution recurrence.
std::size_t CatalanByRecurrence(std::size_t n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  }
  return c[n];
}

TEST(ParenTrees, CountsAreCatalan) {
  EXPECT_EQ(EnumerateParenTrees(1).size(), 1u);
  EXPECT_EQ(EnumerateParenTrees(3).size(), 2u);
  EXPECT_EQ(EnumerateParenTrees(4).size(), 5u);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto trees = EnumerateParenTrees(n);
    EXPECT_EQ(trees.size(), CatalanByRecurrence(n - 1)) << n;
    EXPECT_EQ(CatalanNumber(n - 1), CatalanByRecurrence(n - 1));
    const std::set<ParenTree> distinct(trees.begin(), trees.end());
    EXPECT_EQ(distinct.size(), trees.size());
    for (const auto& t : trees) {
      EXPECT_EQ(t.leaf_count(), n);
      EXPECT_EQ(t.internal_count(), n - 1);
    }
  }
}

TEST(ParenTrees, LimitsAndErrors) {
  EXPECT_EQ(EnumerateParenTrees(12).size(), 58786u);
  EXPECT_THROW(EnumerateParenTrees(13), TooLong);
  EXPECT_THROW(EnumerateParenTrees(0), std::invalid_argument);
}

TEST(ParenTrees, FourLeafRenderings) {
  std::vector<std::string> rendered;
  for (const auto& t : EnumerateParenTrees(4)) rendered.push_back(t.ToString());
  const std::set<std::string> got(rendered.begin(), rendered.end());
  EXPECT_EQ(got, (std::set<std::string>{"a(b(cd))", "a((bc)d)", "(ab)(cd)", "(a(bc))d", "((ab)c)d"}));
}

TEST(ParenTrees, ParseRoundTrip) {
  for (const std::string text : {"F(E((D(CB))A))", "((F((ED)C))B)A", "A", "(AB)(CD)"}) {
    const auto [tree, letters] = ParseParenTree(text);
    std::vector<std::string> names;
    for (char c : letters) names.emplace_back(1, c);
    EXPECT_EQ(tree.Render(names), text);
  }
  EXPECT_THROW(ParseParenTree("(AB"), std::invalid_argument);
  EXPECT_THROW(ParseParenTree("ABC"), std::invalid_argument);
}

TEST(Evaluate, TetrahedronBracketings) {
  const GDoublePrime grp;
  const auto letters = TetrahedronLetters();
  auto run = [&](const std::string& text) {
    const auto [tree, names] = ParseParenTree(text);
    std::vector<SphereArrow> word;
    for (char c : names) word.push_back(letters[static_cast<std::size_t>(c - 'A')]);
    return Evaluate(grp, std::span<const SphereArrow>(word), tree);
  };
  const auto plus = run("F(E((D(CB))A))");
  const auto minus = run("((F((ED)C))B)A");
  ASSERT_TRUE(plus && minus);
  EXPECT_NEAR(plus->a, 2 * kPi, 1e-9);
  EXPECT_NEAR(minus->a, -2 * kPi, 1e-9);
}

TEST(Evaluate, SingleLetterAndMismatch) {
  const auto grp = CyclicGroup(5);
  const std::vector<ElementId> one = {ElementId{3}};
  EXPECT_EQ(Evaluate(grp, std::span<const ElementId>(one), ParenTree::Leaf()), ElementId{3});
  const std::vector<ElementId> two = {ElementId{1}, ElementId{2}};
  EXPECT_THROW(Evaluate(grp, std::span<const ElementId>(two), ParenTree::Leaf()), std::invalid_argument);
}

TEST(Evaluate, AgreesWithAllEvaluationsOnTheInterval) {
  const auto grp = IntegerInterval(3);
  const std::vector<ElementId> word = {grp.ElementByName("3"), grp.ElementByName("2"),
                                       grp.ElementByName("-3"), grp.ElementByName("-1")};
  const std::span<const ElementId> w(word);
  std::set<ElementId> direct;
  std::size_t defined = 0;
  for (const auto& t : EnumerateParenTrees(word.size())) {
    if (auto v = Evaluate(grp, w, t)) {
      direct.insert(*v);
      ++defined;
    }
  }
  EXPECT_EQ(direct, (std::set<ElementId>{grp.ElementByName("1")}));
  EXPECT_LT(defined, 5u);  // 3 + 2 leaves the interval
  const auto all = AllEvaluations(grp, w);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].value, grp.ElementByName("1"));
  EXPECT_EQ(Evaluate(grp, w, all[0].tree), all[0].value);
}

TEST(AllEvaluations, TetrahedronWordHasTwoValues) {
  const GDoublePrime grp;
  const auto letters = TetrahedronLetters();
  const std::vector<SphereArrow> word = {letters[5], letters[4], letters[3], letters[2], letters[1], letters[0]};
  const auto all = AllEvaluations(grp, std::span<const SphereArrow>(word));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_NEAR(std::abs(all[0].value.a - all[1].value.a), 4 * kPi, 1e-9);
  const auto w = IsNAssociative(grp, 6, std::span<const std::vector<SphereArrow>>(&word, 1));
  ASSERT_TRUE(w.has_value());
  EXPECT_NEAR(std::abs(w->value_a.a - w->value_b.a), 4 * kPi, 1e-9);
}

}  // namespace
}  // namespace assoclab

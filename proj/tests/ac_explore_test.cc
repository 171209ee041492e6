#include "assoclab/ac_explore.h"

#include <map>
#include <set>

#include <gtest/gtest.h>

namespace assoclab {
namespace {

int SumOf(const FiniteLocalGroupoid& grp, const Word<ElementId>& w) {
  int s = 0;
  for (ElementId e : w) s += std::stoi(grp.ElementName(e));
  return s;
}

TEST(AcExplore, CyclicGroupHasFiveClasses) {
  const auto grp = CyclicGroup(5);
  const auto r = AcExplore(grp, 4);
  EXPECT_TRUE(r.complete);
  ASSERT_EQ(r.classes.size(), 5u);
  std::set<int> residues;
  std::size_t total = 0;
  for (const auto& c : r.classes) {
    EXPECT_TRUE(c.has_letter);
    EXPECT_EQ(c.representative.size(), 1u);
    residues.insert(SumOf(grp, c.representative) % 5);
    total += c.size;
  }
  EXPECT_EQ(residues.size(), 5u);
  EXPECT_EQ(total, 5u + 25u + 125u + 625u);
  // Words are spread evenly over the residues.
  for (const auto& c : r.classes) EXPECT_EQ(c.size, total / 5);
}

TEST(AcExplore, IntervalClassesMatchIntegerSums) {
  const auto grp = IntegerInterval(4);
  const auto r = AcExplore(grp, 3);
  EXPECT_TRUE(r.complete);
  ASSERT_EQ(r.classes.size(), 25u);
  std::set<int> sums;
  for (const auto& c : r.classes) sums.insert(SumOf(grp, c.representative));
  EXPECT_EQ(*sums.begin(), -12);
  EXPECT_EQ(*sums.rbegin(), 12);
  EXPECT_EQ(sums.size(), 25u);
  // Class sizes equal the number of words of length <= 3 with that sum.
  std::map<int, std::size_t> by_sum;
  for (int a = -4; a <= 4; ++a) {
    ++by_sum[a];
    for (int b = -4; b <= 4; ++b) {
      ++by_sum[a + b];
      for (int c = -4; c <= 4; ++c) ++by_sum[a + b + c];
    }
  }
  for (const auto& c : r.classes) EXPECT_EQ(c.size, by_sum[SumOf(grp, c.representative)]);
  for (const auto& c : r.classes) {
    const int s = SumOf(grp, c.representative);
    EXPECT_EQ(c.has_letter, std::abs(s) <= 4) << s;
  }
}

TEST(AcExplore, UnitOnly) {
  const auto r = AcExplore(UnitOnlyGroupoid(), 5);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_EQ(r.classes[0].size, 5u);
}

TEST(AcExplore, HeadroomOnlyMerges) {
  // More headroom can only join classes.
  const auto grp = IntegerInterval(2);
  const auto none = AcExplore(grp, 3, 5'000'000, 0);
  const auto one = AcExplore(grp, 3, 5'000'000, 1);
  EXPECT_GE(none.classes.size(), one.classes.size());
  EXPECT_EQ(one.classes.size(), 13u);
}

TEST(AcExplore, WordBudgetMarksIncomplete) {
  const auto r = AcExplore(CyclicGroup(5), 6, 100);
  EXPECT_FALSE(r.complete);
}

TEST(AcExplore, NonAssociativeFixtureMergesTheWitnessValues) {
  // (a, b, c) contracts to both r and s, so the two letters share a class.
  const auto grp = NonThreeAssociativeFixture();
  const auto r = AcExplore(grp, 3);
  std::size_t letters = 0;
  for (const auto& c : r.classes) letters += c.has_letter;
  EXPECT_EQ(letters, grp.element_count() - 1);
}

}  // namespace
}  // namespace assoclab

#include "assoclab/complexes.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "assoclab/finite_groupoid.h"
#include "assoclab/words.h"

namespace assoclab {
namespace {

// Applies `moves` random expansions or contractions, chosen uniformly among
// the available ones.
GoodComplex RandomComplex(std::mt19937_64& rng, int k, int moves) {
  GoodComplex c = GoodComplex::Chain(k);
  for (int i = 0; i < moves; ++i) {
    const auto boundary = c.BoundaryEdges();
    const auto triples = c.ContractibleTriples();
    std::uniform_int_distribution<std::size_t> pick(0, boundary.size() + triples.size() - 1);
    const std::size_t m = pick(rng);
    if (m < boundary.size()) {
      c.Expand(boundary[m].first, boundary[m].second);
    } else {
      const auto& [u, v, w] = triples[m - boundary.size()];
      c.Contract(u, v, w);
    }
  }
  return c;
}

bool Increasing(const GoodComplex& c, const std::vector<VertexId>& path) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!c.Less(path[i - 1], path[i]) || !c.IsBoundaryEdge(path[i - 1], path[i])) return false;
  }
  return true;
}

TEST(GoodComplex, Chain) {
  const auto w1 = GoodComplex::Chain(1);
  EXPECT_EQ(w1.vertex_count(), 2u);
  EXPECT_EQ(w1.edges().size(), 1u);
  const auto w3 = GoodComplex::Chain(3);
  EXPECT_EQ(BoundaryPaths(w3).size(), 1u);
  EXPECT_EQ(w3.Source(), 0);
  EXPECT_EQ(w3.Target(), 3);
  const auto d = DecomposeDisks(w3);
  EXPECT_EQ(d.disks, 0);
  EXPECT_EQ(d.segments.size(), 3u);
  EXPECT_THROW(GoodComplex::Chain(0), std::invalid_argument);
}

TEST(GoodComplex, SingleExpansionGivesATriangle) {
  auto c = GoodComplex::Chain(1);
  const VertexId m = c.Expand(0, 1);
  EXPECT_EQ(c.label(m), mpq_class(1, 2));
  EXPECT_EQ(c.vertex_count(), 3u);
  EXPECT_EQ(c.edges().size(), 3u);
  EXPECT_EQ(c.faces().size(), 1u);
  EXPECT_EQ(BoundaryPaths(c).size(), 2u);
  EXPECT_EQ(DecomposeDisks(c).disks, 1);
  EXPECT_TRUE(c.CheckInvariants());
}

TEST(GoodComplex, RepeatedExpansionOfOneEdge) {
  auto c = GoodComplex::Chain(1);
  c.Expand(0, 1);
  EXPECT_EQ(c.FacesOn(0, 1), 1);
  const VertexId second = c.Expand(0, 1);  // still on the boundary: one face
  EXPECT_EQ(c.FacesOn(0, 1), 2);
  EXPECT_NE(c.label(second), mpq_class(1, 2));
  EXPECT_THROW(c.Expand(0, 1), NotBoundaryEdge);
  EXPECT_TRUE(c.CheckInvariants());
  EXPECT_EQ(BoundaryPaths(c).size(), 2u);
  EXPECT_THROW(c.Expand(0, 5), NotBoundaryEdge);
}

TEST(GoodComplex, ContractTheMiddleVertex) {
  auto c = GoodComplex::Chain(2);
  c.Contract(0, 1, 2);
  EXPECT_EQ(c.edges().size(), 3u);
  EXPECT_EQ(c.faces().size(), 1u);
  EXPECT_TRUE(c.CheckInvariants());
  EXPECT_EQ(BoundaryPaths(c).size(), 2u);
  EXPECT_THROW(c.Contract(0, 1, 2), EdgeExists);
  auto t = GoodComplex::Chain(1);
  const VertexId m = t.Expand(0, 1);
  EXPECT_THROW(t.Contract(0, m, 1), EdgeExists);
  EXPECT_THROW(t.Contract(1, m, 0), NotBoundary);
}

TEST(GoodComplex, ThreeDiskFigureHasEightPaths) {
  const auto c = ThreeDiskComplex();
  const auto d = DecomposeDisks(c);
  EXPECT_EQ(d.disks, 3);
  EXPECT_EQ(d.segments.size(), 1u);
  const auto paths = BoundaryPaths(c);
  EXPECT_EQ(paths.size(), 8u);
  for (const auto& p : paths) {
    EXPECT_TRUE(Increasing(c, p));
    EXPECT_EQ(p.front(), c.Source());
    EXPECT_EQ(p.back(), c.Target());
  }
  EXPECT_EQ(c.EulerCharacteristic(), 1);
}

TEST(GoodComplex, RandomMoveSequencesObeyThePathLaw) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> k_dist(1, 4), moves(0, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = k_dist(rng);
    const GoodComplex c = RandomComplex(rng, k, moves(rng));
    ASSERT_TRUE(c.CheckInvariants()) << trial;
    EXPECT_EQ(c.EulerCharacteristic(), 1) << trial;
    const auto d = DecomposeDisks(c);
    const auto paths = BoundaryPaths(c);
    EXPECT_EQ(paths.size(), std::size_t{1} << d.disks) << "trial " << trial << "\n" << GoodComplexToJson(c);
    for (const auto& p : paths) EXPECT_TRUE(Increasing(c, p));
    EXPECT_EQ(c.label(c.Source()), 0);
    EXPECT_EQ(c.label(c.Target()), k);
    EXPECT_EQ(ReplayLog(k, c.log()), c);
  }
}

TEST(GoodComplex, JsonUsesExactLabels) {
  auto c = GoodComplex::Chain(2);
  c.Expand(1, 2);
  const auto doc = nlohmann::json::parse(GoodComplexToJson(c));
  EXPECT_EQ(doc["vertices"][3], "3/2");
  EXPECT_EQ(doc["log"][0]["move"], "expansion");
}

class IntervalComplexes : public ::testing::Test {
 protected:
  Word<ElementId> W(std::initializer_list<int> values) const {
    Word<ElementId> w;
    for (int v : values) w.push_back(grp_.ElementByName(std::to_string(v)));
    return w;
  }
  bool Contains(const std::vector<Word<ElementId>>& words, const Word<ElementId>& w) const {
    return std::find(words.begin(), words.end(), w) != words.end();
  }

  const FiniteLocalGroupoid grp_ = IntegerInterval(4);
};

TEST_F(IntervalComplexes, ChainMapRecoversTheWord) {
  const auto w = W({1, -2, 3});
  const auto [c, map] = ChainMap(grp_, w);
  const auto words = BoundaryWords(grp_, c, map);
  ASSERT_EQ(words.size(), 1u);
  EXPECT_EQ(words[0], w);
}

TEST_F(IntervalComplexes, TriangleMapsToProductAndPair) {
  const auto w = W({1, 2});
  const std::vector<RewriteStep<ElementId>> path = {RewriteStep<ElementId>::Contract(0)};
  const auto [c, map] = RealizeEquivalence(grp_, w, std::span<const RewriteStep<ElementId>>(path));
  EXPECT_EQ(c.faces().size(), 1u);
  const auto words = BoundaryWords(grp_, c, map);
  EXPECT_EQ(words.size(), 2u);
  EXPECT_TRUE(Contains(words, W({3})));
  EXPECT_TRUE(Contains(words, W({1, 2})));
}

TEST_F(IntervalComplexes, SearchPathRoundTrip) {
  const auto w1 = W({2, 2, -1}), w2 = W({3});
  const auto r = EquivalenceSearch(grp_, w1, w2, TableFactorizer(grp_), SearchLimits{});
  ASSERT_EQ(r.status, SearchResult<ElementId>::Status::kEquivalent);
  const auto [c, map] = RealizeEquivalence(grp_, w1, std::span<const RewriteStep<ElementId>>(r.path));
  const auto words = BoundaryWords(grp_, c, map);
  EXPECT_EQ(words.size(), 2u);
  EXPECT_TRUE(Contains(words, w1));
  EXPECT_TRUE(Contains(words, w2));
}

TEST_F(IntervalComplexes, EmptyPathIsTheChain) {
  const auto w = W({4, -4});
  const auto [c, map] = RealizeEquivalence(grp_, w, std::span<const RewriteStep<ElementId>>());
  EXPECT_EQ(c, GoodComplex::Chain(2));
  EXPECT_EQ(BoundaryWords(grp_, c, map), std::vector<Word<ElementId>>{w});
}

TEST_F(IntervalComplexes, RandomSearchPathsRoundTrip) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> letter(-4, 4), len(1, 3);
  const auto factor = TableFactorizer(grp_);
  int realized = 0;
  for (int trial = 0; trial < 4000 && realized < 100; ++trial) {
    Word<ElementId> w1, w2;
    for (int i = len(rng); i > 0; --i) w1.push_back(W({letter(rng)})[0]);
    for (int i = len(rng); i > 0; --i) w2.push_back(W({letter(rng)})[0]);
    const auto r = EquivalenceSearch(grp_, w1, w2, factor, SearchLimits{});
    if (r.status != SearchResult<ElementId>::Status::kEquivalent) continue;
    const auto [c, map] = RealizeEquivalence(grp_, w1, std::span<const RewriteStep<ElementId>>(r.path));
    ASSERT_TRUE(c.CheckInvariants());
    EXPECT_EQ(c.EulerCharacteristic(), 1);
    const auto words = BoundaryWords(grp_, c, map);
    EXPECT_TRUE(Contains(words, w1)) << trial;
    EXPECT_TRUE(Contains(words, w2)) << trial;
    EXPECT_EQ(words.size(), std::size_t{1} << DecomposeDisks(c).disks);
    ++realized;
  }
  EXPECT_GE(realized, 30);
}

TEST_F(IntervalComplexes, BadMapsAreRejected) {
  auto [c, map] = ChainMap(grp_, W({1, 2}));
  map.edge.begin()->second = grp_.ElementByName("3");
  c.Contract(0, 1, 2);
  map.edge.emplace(Edge{0, 2}, grp_.ElementByName("0"));
  EXPECT_THROW(BoundaryWords(grp_, c, map), InvalidMap);
  const std::vector<RewriteStep<ElementId>> bad = {RewriteStep<ElementId>::Contract(0)};
  EXPECT_THROW(RealizeEquivalence(grp_, W({4, 4}), std::span<const RewriteStep<ElementId>>(bad)), InvalidPath);
}

}  // namespace
}  // namespace assoclab

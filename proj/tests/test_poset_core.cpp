#include <gtest/gtest.h>

#include <random>

#include "chainpart/dilworth.hpp"
#include "chainpart/error.hpp"
#include "chainpart/ladder.hpp"
#include "chainpart/matching.hpp"
#include "chainpart/poset.hpp"
#include "oracles.hpp"

using namespace chainpart;

namespace {

// a<c, b<c, b<d with a=0, b=1, c=2, d=3
Poset four_vertex() {
  const std::vector<Relation> rel{{0, 2}, {1, 2}, {1, 3}};
  return Poset::from_relations(4, rel);
}

// Ladder with x_i = 2i, y_i = 2i+1.
Poset ladder(std::size_t m) {
  std::vector<Relation> rel;
  for (std::size_t i = 0; i < m; ++i) {
    rel.emplace_back(2 * i, 2 * i + 1);
    if (i + 1 < m) {
      rel.emplace_back(2 * i, 2 * i + 2);
      rel.emplace_back(2 * i + 1, 2 * i + 3);
    }
  }
  return Poset::from_relations(2 * m, rel);
}

// Bipartite poset with a non-core cross edge: lower x_i = i-1, upper y_i = 4+i.
Poset not_a_core() {
  auto x = [](int i) { return static_cast<Vertex>(i - 1); };
  auto y = [](int i) { return static_cast<Vertex>(4 + i); };
  std::vector<Relation> rel;
  for (int i = 1; i <= 5; ++i) rel.emplace_back(x(i), y(i));
  for (int i = 3; i <= 5; ++i) rel.emplace_back(x(i), y(5));
  rel.emplace_back(x(1), y(2));
  rel.emplace_back(x(2), y(1));
  rel.emplace_back(x(2), y(3));
  rel.emplace_back(x(4), y(3));
  rel.emplace_back(x(5), y(4));
  return Poset::from_relations(10, rel);
}

std::vector<Antichain> to_antichains(const std::vector<std::vector<Vertex>>& sets) {
  std::vector<Antichain> out;
  for (const auto& s : sets) out.emplace_back(s);
  return out;
}

}  // namespace

TEST(BuildPoset, TwoElementChain) {
  const std::vector<Relation> rel{{0, 1}};
  Poset p = Poset::from_relations(2, rel);
  EXPECT_TRUE(p.less(0, 1));
  EXPECT_FALSE(p.less(1, 0));
  EXPECT_EQ(p.relation_count(), 1u);
}

TEST(BuildPoset, TransitivityForced) {
  const std::vector<Relation> rel{{0, 1}, {1, 2}};
  EXPECT_TRUE(Poset::from_relations(3, rel).less(0, 2));
}

TEST(BuildPoset, RejectsCycleSelfLoopAndRange) {
  const std::vector<Relation> cycle{{0, 1}, {1, 0}};
  EXPECT_THROW(Poset::from_relations(2, cycle), CycleError);
  const std::vector<Relation> loop{{1, 1}};
  EXPECT_THROW(Poset::from_relations(2, loop), SelfLoopError);
  const std::vector<Relation> range{{0, 5}};
  EXPECT_THROW(Poset::from_relations(2, range), VertexRangeError);
}

TEST(BuildPoset, ClosureMatchesFloydWarshall) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<Relation> rel;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) rel.emplace_back(u, v);
    const Poset p = Poset::from_relations(n, rel);
    const auto m = oracle::floyd_warshall_closure(n, rel);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(p.less(u, v), m[u][v]);
  }
}

TEST(BuildPoset, CoversRebuildTheSamePoset) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + rng() % 10, 0.4);
    const auto covers = p.covers();
    EXPECT_EQ(Poset::from_relations(p.size(), covers), p);
  }
}

TEST(BuildPoset, LinearExtensionRespectsOrder) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + rng() % 12, 0.3);
    const auto order = p.linear_extension();
    std::vector<std::size_t> pos(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (auto [u, v] : p.relations()) EXPECT_LT(pos[u], pos[v]);
  }
}

TEST(Width, Examples) {
  EXPECT_EQ(width(Poset::chain(5)), 1u);
  EXPECT_EQ(width(Poset::antichain(5)), 5u);
  EXPECT_EQ(width(Poset()), 0u);
  EXPECT_EQ(dilworth_partition(Poset()).count, 0u);
}

TEST(Width, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Poset p = oracle::random_poset(rng, n, 0.1 + 0.1 * (trial % 7));
    const std::size_t w = width(p);
    ASSERT_EQ(w, oracle::width(p));
    const ChainPartition part = dilworth_partition(p);
    EXPECT_EQ(part.count, w);
    EXPECT_TRUE(is_chain_partition(p, part));
    const Antichain a = maximum_antichain(p);
    EXPECT_EQ(a.size(), w);
    EXPECT_TRUE(p.is_antichain(a.members));
  }
}

TEST(Width, DilworthPartitionExamples) {
  EXPECT_EQ(dilworth_partition(Poset::chain(5)).count, 1u);
  const ChainPartition anti = dilworth_partition(Poset::antichain(3));
  EXPECT_EQ(anti.count, 3u);
  EXPECT_EQ(anti.chain_of, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Matching, PerfectMatchingEdgesAgreeWithRemovalTest) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    BipartiteGraph g(n, n);
    for (std::size_t l = 0; l < n; ++l) {
      g.add_edge(l, l);  // guarantees a perfect matching
      for (std::size_t r = 0; r < n; ++r)
        if (rng() % 3 == 0) g.add_edge(l, r);
    }
    const auto usable = perfect_matching_edges(g);
    ASSERT_TRUE(usable.has_value());
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t r = 0; r < n; ++r) {
        if (!g.has_edge(l, r)) continue;
        BipartiteGraph rest(n, n);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (a != l && b != r && g.has_edge(a, b)) rest.add_edge(a, b);
        const bool expected = maximum_matching(rest).size == n - 1;
        EXPECT_EQ((*usable)[l].test(r), expected);
      }
    }
  }
}

TEST(DilworthEdge, Examples) {
  const std::vector<Relation> rel{{0, 1}};
  EXPECT_TRUE(is_dilworth_edge(Poset::from_relations(2, rel), 0, 1));
  const Poset r = not_a_core();
  EXPECT_FALSE(is_dilworth_edge(r, 1, 7));  // x = x_2, y = y_3
  EXPECT_TRUE(is_dilworth_edge(r, 1, 5));
  EXPECT_THROW(is_dilworth_edge(Poset::antichain(2), 0, 1), NotComparableError);
  EXPECT_THROW(is_dilworth_edge(Poset::chain(2), 1, 1), NotComparableError);
}

TEST(DilworthEdge, MatchesChainCoverEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Poset p = oracle::random_poset(rng, n, 0.2 + 0.1 * (trial % 5));
    for (auto [u, v] : p.relations()) ASSERT_EQ(is_dilworth_edge(p, u, v), oracle::dilworth_edge(p, u, v));
  }
}

TEST(MaximumAntichains, Examples) {
  EXPECT_EQ(maximum_antichains(Poset::antichain(3), 10), to_antichains({{0, 1, 2}}));
  EXPECT_EQ(maximum_antichains(Poset::chain(3), 10), to_antichains({{0}, {1}, {2}}));
  EXPECT_EQ(maximum_antichains(four_vertex(), 10), to_antichains({{0, 1}, {0, 3}, {2, 3}}));
  EXPECT_THROW(maximum_antichains(Poset::chain(3), 2), CapExceededError);
}

TEST(MaximumAntichains, MatchEnumeration) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + rng() % 10, 0.3);
    EXPECT_EQ(maximum_antichains(p, 100000), to_antichains(oracle::antichains_of_size(p, oracle::width(p))));
  }
}

TEST(Lattice, FourVertexExamples) {
  const Poset p = four_vertex();
  const Antichain ab({0, 1}), ad({0, 3}), cd({2, 3});
  EXPECT_TRUE(sqsubseteq(p, ab, ab));
  EXPECT_TRUE(sqsubseteq(p, ab, cd));
  EXPECT_FALSE(sqsubseteq(p, cd, ab));
  EXPECT_EQ(antichain_meet(p, ad, ad), ad);
  EXPECT_EQ(antichain_meet(p, ad, cd), ad);
  EXPECT_EQ(antichain_join(p, ab, ad), ad);
  EXPECT_THROW(sqsubseteq(p, Antichain({0}), ab), NotMaximumAntichainError);
  EXPECT_THROW(antichain_join(p, Antichain({0, 2}), ab), NotMaximumAntichainError);
}

TEST(Lattice, LawsHoldOnAllMaximumAntichains) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + rng() % 10, 0.35);
    const AntichainLattice lat(p);
    const auto all = maximum_antichains(p, 100000);
    for (const auto& a : all) {
      EXPECT_EQ(lat.meet(a, a), a);
      EXPECT_EQ(lat.join(a, a), a);
      for (const auto& b : all) {
        const Antichain m = lat.meet(a, b), j = lat.join(a, b);
        ASSERT_TRUE(lat.is_maximum(m));
        ASSERT_TRUE(lat.is_maximum(j));
        EXPECT_EQ(m, lat.meet(b, a));
        EXPECT_EQ(j, lat.join(b, a));
        EXPECT_EQ(lat.meet(a, lat.join(a, b)), a);
        EXPECT_EQ(lat.join(a, lat.meet(a, b)), a);
        EXPECT_TRUE(lat.leq(m, a) && lat.leq(a, j));
        EXPECT_EQ(lat.leq(a, b), m == a);
        if (all.size() <= 12) {
          for (const auto& c : all) {
            EXPECT_EQ(lat.meet(lat.meet(a, b), c), lat.meet(a, lat.meet(b, c)));
            EXPECT_EQ(lat.join(lat.join(a, b), c), lat.join(a, lat.join(b, c)));
          }
        }
      }
    }
  }
}

TEST(LexProduct, Examples) {
  const Poset p = four_vertex();
  EXPECT_EQ(lex_product(p, Poset(1)), p);
  const Poset q = lex_product(Poset::antichain(2), Poset::chain(2));
  EXPECT_EQ(q.size(), 4u);
  EXPECT_EQ(width(q), 2u);
  EXPECT_TRUE(q.less(0, 1));
  EXPECT_TRUE(q.less(2, 3));
  EXPECT_EQ(q.relation_count(), 2u);
}

TEST(LexProduct, WidthMultipliesAndBlocksAreIntervals) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const Poset p = oracle::random_poset(rng, 1 + rng() % 5, 0.4);
    const Poset q = oracle::random_poset(rng, 1 + rng() % 5, 0.4);
    const Poset pq = lex_product(p, q);
    EXPECT_EQ(width(pq), width(p) * width(q));
    const std::size_t nq = q.size();
    for (Vertex a = 0; a < pq.size(); ++a) {
      for (Vertex b = 0; b < pq.size(); ++b) {
        const Vertex pa = a / nq, pb = b / nq;
        const bool expected = p.less(pa, pb) || (pa == pb && q.less(a % nq, b % nq));
        ASSERT_EQ(pq.less(a, b), expected);
      }
    }
    // (p,u) comparable to (r,s) and (r,s) ∥ (p,v) forces p = r;
    // (p,u) ≤ (r,s) ≤ (p,v) forces p = r.
    for (Vertex pp = 0; pp < p.size(); ++pp) {
      for (Vertex u = 0; u < nq; ++u) {
        for (Vertex v = 0; v < nq; ++v) {
          for (Vertex rs = 0; rs < pq.size(); ++rs) {
            const Vertex pu = pp * nq + u, pv = pp * nq + v;
            if (pq.comparable(pu, rs) && pq.incomparable(rs, pv)) EXPECT_EQ(rs / nq, pp);
            if (pq.leq(pu, rs) && pq.leq(rs, pv)) EXPECT_EQ(rs / nq, pp);
          }
        }
      }
    }
  }
}

TEST(Ladder, Examples) {
  EXPECT_EQ(find_max_ladder(Poset::antichain(4), 10).m, 0u);
  EXPECT_EQ(find_max_ladder(Poset(), 10).m, 0u);
  const auto l7 = find_max_ladder(ladder(7), 100);
  EXPECT_EQ(l7.m, 7u);
  EXPECT_TRUE(is_induced_ladder(ladder(7), l7.witness));
  EXPECT_EQ(find_max_ladder(ladder(7), 3).m, 3u);
  EXPECT_EQ(find_max_ladder(Poset::chain(4), 10).m, 1u);
}

TEST(Ladder, MatchesBacktrackingOracle) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    const Poset p = oracle::random_poset(rng, 2 + rng() % 9, 0.25 + 0.05 * (trial % 6));
    const auto result = find_max_ladder(p, 64);
    ASSERT_EQ(result.m, oracle::max_ladder(p));
    EXPECT_EQ(result.witness.size(), result.m);
    EXPECT_TRUE(is_induced_ladder(p, result.witness));
  }
}

TEST(Ladder, MonotoneUnderInducedSubposets) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 60; ++trial) {
    const Poset p = oracle::random_poset(rng, 4 + rng() % 8, 0.35);
    const std::size_t m = find_max_ladder(p, 64).m;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < p.size(); ++v)
      if (rng() % 3 != 0) keep.push_back(v);
    EXPECT_LE(find_max_ladder(p.induced(keep), 64).m, m);
  }
}

TEST(Ladder, ExactLengthSearchFindsEndpointViolations) {
  const Poset l5 = ladder(5);
  const auto none = find_ladder_violating(l5, 3, [](Vertex, Vertex) { return true; });
  EXPECT_FALSE(none.has_value());
  const auto hit = find_ladder_violating(l5, 3, [](Vertex y1, Vertex) { return y1 != 3; });
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->size(), 3u);
  EXPECT_TRUE(is_induced_ladder(l5, *hit));
  EXPECT_EQ(hit->rungs.front().second, 3u);
  EXPECT_FALSE(find_ladder_violating(l5, 6, [](Vertex, Vertex) { return false; }).has_value());
}

TEST(Ladder, ExactLengthSearchAgreesWithMaxLadder) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 80; ++trial) {
    const Poset p = oracle::random_poset(rng, 3 + rng() % 9, 0.35);
    const std::size_t m = find_max_ladder(p, 64).m;
    for (std::size_t k = 1; k <= m + 1; ++k) {
      const auto found = find_ladder_violating(p, k, [](Vertex, Vertex) { return false; });
      EXPECT_EQ(found.has_value(), k <= m);
      if (found) EXPECT_TRUE(is_induced_ladder(p, *found));
    }
  }
}

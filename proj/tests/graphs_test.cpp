#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

#include "invforge/invforge.hpp"
#include "test_support.hpp"

using namespace invforge;
using invforge::testing::make_graph;

namespace {

const Flavor kFlavors[] = {Flavor::DirectedLoops, Flavor::UndirectedLoops, Flavor::UndirectedLoopless};

}  // namespace

TEST(CanonicalForm, SingleLoopIsFixed) {
  const auto g = make_graph(Flavor::DirectedLoops, 1, {{1, 1}});
  EXPECT_EQ(canonical_form(g), g);
  EXPECT_TRUE(is_canonical(g));
}

TEST(CanonicalForm, RelabeledArrowsAgree) {
  const auto a = Multigraph::from_matrix(Flavor::DirectedLoops, {{0, 1}, {0, 0}});
  const auto b = Multigraph::from_matrix(Flavor::DirectedLoops, {{0, 0}, {1, 0}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(CanonicalForm, Idempotent) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<unsigned> dist(1, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Flavor flavor = kFlavors[trial % 3];
    const auto g = invforge::testing::random_graph(rng, flavor, dist(rng), 2);
    const auto c = canonical_form(g);
    ASSERT_EQ(canonical_form(c), c);
    ASSERT_TRUE(is_canonical(c));
    ASSERT_EQ(c.edge_count(), g.edge_count());
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Flavor flavor = kFlavors[trial % 3];
    const auto g = invforge::testing::random_graph(rng, flavor, 4, 2);
    const auto sigma = invforge::testing::random_permutation(rng, 4);
    ASSERT_EQ(canonical_form(g.permuted(sigma)), canonical_form(g));
  }
}

TEST(Multigraph, LooplessRejectsLoops) {
  Multigraph g(Flavor::UndirectedLoopless, 2);
  EXPECT_THROW(g.add_edge(1, 1), WrongFlavor);
}

TEST(Multigraph, Degrees) {
  const auto g = make_graph(Flavor::DirectedLoops, 3, {{1, 2}, {2, 3, 2}, {3, 3}});
  EXPECT_EQ(g.out_degree(1), 2u);
  EXPECT_EQ(g.in_degree(2), 3u);
  const auto u = make_graph(Flavor::UndirectedLoops, 2, {{1, 1}, {1, 2}});
  EXPECT_EQ(u.degree(0), 3u);
  EXPECT_EQ(u.degree(1), 1u);
}

TEST(Stabilizer, EmptyGraphFixedByAll) {
  for (unsigned d = 1; d <= 4; ++d) {
    EXPECT_EQ(stabilizer(Multigraph(Flavor::UndirectedLoopless, d)).size(), all_permutations(d).size());
  }
}

TEST(Stabilizer, SingleUndirectedEdge) {
  EXPECT_EQ(stabilizer(make_graph(Flavor::UndirectedLoopless, 2, {{1, 2}})).size(), 2u);
}

TEST(Stabilizer, SingleArrow) {
  const auto stab = stabilizer(Multigraph::from_matrix(Flavor::DirectedLoops, {{0, 1}, {0, 0}}));
  ASSERT_EQ(stab.size(), 1u);
  EXPECT_TRUE(is_identity(stab[0]));
}

TEST(InversionCount, Identity) {
  const auto g = make_graph(Flavor::UndirectedLoopless, 3, {{1, 2, 2}, {2, 3}});
  EXPECT_EQ(inversion_count(g, {0, 1, 2}), 0u);
}

TEST(InversionCount, SwapInvertsEveryEdge) {
  for (unsigned k = 0; k <= 6; ++k) {
    Multigraph g(Flavor::UndirectedLoopless, 2);
    if (k) g.add_edge(0, 1, k);
    EXPECT_EQ(inversion_count(g, {1, 0}), k);
  }
}

// Sign oracle: z_ij are formal skew-symmetric symbols; evaluate at a random
// numeric skew matrix Z and compare prod z_{s(i)s(j)}^{A_ij} with the same
// product written with every edge oriented upward.
TEST(InversionCount, MatchesSkewSymbolSign) {
  const auto g = make_graph(Flavor::UndirectedLoopless, 4, {{1, 2, 2}, {2, 3}, {1, 3}, {3, 4, 3}, {1, 4}});
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> v(1, 9);
  long z[4][4] = {};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      z[i][j] = v(rng);
      z[j][i] = -z[i][j];
    }
  }
  const auto value = [&](const Permutation& s, bool upward) {
    long out = 1;
    for (unsigned i = 0; i < 4; ++i) {
      for (unsigned j = i + 1; j < 4; ++j) {
        const unsigned a = upward ? std::min(s[i], s[j]) : s[i];
        const unsigned b = upward ? std::max(s[i], s[j]) : s[j];
        for (unsigned m = 0; m < g.at(i, j); ++m) out *= z[a][b];
      }
    }
    return out;
  };
  for (const auto& sigma : all_permutations(4)) {
    const long sign = (inversion_count(g, sigma) % 2) ? -1 : 1;
    EXPECT_EQ(value(sigma, false), sign * value(sigma, true));
  }
}

TEST(InversionCount, RequiresLooplessFlavor) {
  const auto g = make_graph(Flavor::UndirectedLoops, 2, {{1, 2}});
  EXPECT_THROW(inversion_count(g, {1, 0}), WrongFlavor);
}

TEST(SpAdmissible, OddMultiEdgeOnTwoVertices) {
  EXPECT_FALSE(sp_admissible(make_graph(Flavor::UndirectedLoopless, 2, {{1, 2, 3}})));
  EXPECT_TRUE(sp_admissible(make_graph(Flavor::UndirectedLoopless, 2, {{1, 2, 4}})));
}

TEST(SpAdmissible, DoubleEdgePlusPath) {
  EXPECT_TRUE(sp_admissible(make_graph(Flavor::UndirectedLoopless, 3, {{1, 2, 2}, {2, 3}})));
}

TEST(SpAdmissible, SingleEdgeOnThreeVertices) {
  EXPECT_FALSE(sp_admissible(make_graph(Flavor::UndirectedLoopless, 3, {{1, 2}})));
}

TEST(SpAdmissible, LabelingIndependent) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = invforge::testing::random_graph(rng, Flavor::UndirectedLoopless, 4, 2);
    const auto sigma = invforge::testing::random_permutation(rng, 4);
    ASSERT_EQ(sp_admissible(g), sp_admissible(g.permuted(sigma)));
  }
}

TEST(EnumerateGraphs, GlTwoVerticesTwoEdges) {
  EXPECT_EQ(enumerate_graphs(GroupKind::gl(2), 2, 2).size(), 6u);
}

TEST(EnumerateGraphs, SpTwoVertices) {
  for (unsigned k = 0; k <= 9; ++k) {
    EXPECT_EQ(enumerate_graphs(GroupKind::sp(1), 2, k).size(), k % 2 ? 0u : 1u) << k;
  }
}

TEST(EnumerateGraphs, SpThreeVertices) {
  const std::size_t expected[] = {1, 0, 2, 1, 4, 2};
  for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(enumerate_graphs(GroupKind::sp(1), 3, k).size(), expected[k]) << k;
}

TEST(EnumerateGraphs, SpThreeVerticesThreeEdgesIsDoubleEdgePlusPath) {
  const auto gs = enumerate_graphs(GroupKind::sp(1), 3, 3);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0], canonical_form(make_graph(Flavor::UndirectedLoopless, 3, {{1, 2, 2}, {2, 3}})));
}

TEST(EnumerateGraphs, SpSingleVertex) {
  EXPECT_EQ(enumerate_graphs(GroupKind::sp(1), 1, 0).size(), 1u);
  for (unsigned k = 1; k <= 4; ++k) EXPECT_TRUE(enumerate_graphs(GroupKind::sp(1), 1, k).empty());
}

TEST(EnumerateGraphs, ZeroVertices) {
  EXPECT_EQ(enumerate_graphs(Flavor::DirectedLoops, 0, 0).size(), 1u);
  EXPECT_TRUE(enumerate_graphs(Flavor::DirectedLoops, 0, 3).empty());
}

TEST(EnumerateGraphs, OrthogonalSingleVertex) {
  for (unsigned k = 0; k <= 8; ++k) {
    const auto gs = enumerate_graphs(GroupKind::o(1), 1, k);
    ASSERT_EQ(gs.size(), 1u);
    EXPECT_EQ(gs[0].at(0, 0), k);
  }
}

TEST(EnumerateGraphs, CanonicalDistinctAndOfWeightK) {
  for (Flavor flavor : kFlavors) {
    for (unsigned d = 1; d <= 4; ++d) {
      for (unsigned k = 0; k <= 4; ++k) {
        const auto gs = enumerate_graphs(flavor, d, k);
        std::set<std::vector<unsigned>> seen;
        for (const auto& g : gs) {
          ASSERT_EQ(g.edge_count(), k);
          ASSERT_EQ(canonical_form(g), g);
          seen.insert(g.cells());
        }
        ASSERT_EQ(seen.size(), gs.size());
      }
    }
  }
}

TEST(EnumerateGraphs, MatchesBurnside) {
  for (Flavor flavor : kFlavors) {
    for (unsigned d = 1; d <= 5; ++d) {
      for (unsigned k = 0; k <= 6; ++k) {
        ASSERT_EQ(Integer(static_cast<unsigned long>(enumerate_graphs(flavor, d, k).size())),
                  count_graphs_burnside(flavor, d, k))
            << to_string(flavor) << " d=" << d << " k=" << k;
      }
    }
  }
  for (unsigned d = 1; d <= 5; ++d) {
    for (unsigned k = 0; k <= 6; ++k) {
      ASSERT_EQ(Integer(static_cast<unsigned long>(enumerate_graphs(GroupKind::sp(1), d, k).size())),
                count_graphs_burnside(GroupKind::sp(1), d, k))
          << "sp d=" << d << " k=" << k;
    }
  }
}

TEST(Burnside, Examples) {
  EXPECT_EQ(count_graphs_burnside(Flavor::DirectedLoops, 2, 2), 6);
  for (unsigned k = 0; k <= 6; ++k) EXPECT_EQ(count_graphs_burnside(Flavor::UndirectedLoops, 1, k), 1);
  EXPECT_EQ(count_graphs_burnside(Flavor::UndirectedLoopless, 3, 4, true), 4);
}

TEST(EnumerateGraphs, VertexBound) {
  EXPECT_THROW(enumerate_graphs(Flavor::DirectedLoops, max_vertices() + 1, 1), VertexBoundExceeded);
}

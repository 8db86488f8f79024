#include <atomdec/mcs.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace atomdec;

namespace {

std::vector<std::string> position_labels(const Graph& g, const Ordering& ord) {
  std::vector<std::string> out;
  for (VertexId v : ord.by_position) out.push_back(g.label(v));
  return out;
}

TEST(McsNumbering, FigureGraphGetsFigureNumbers) {
  Graph g = testgen::load_fixture("mcs_figure.txt");
  Ordering ord = mcs_ordering(g);
  EXPECT_EQ(ord.number_of(testgen::id_of(g, "a")), 1);
  EXPECT_EQ(ord.number_of(testgen::id_of(g, "b")), 2);
  EXPECT_EQ(ord.number_of(testgen::id_of(g, "c")), 3);
  EXPECT_EQ(ord.number_of(testgen::id_of(g, "d")), 4);
  EXPECT_EQ(ord.number_of(testgen::id_of(g, "e")), 5);
  EXPECT_EQ(ord.vertex_numbered(5), testgen::id_of(g, "e"));
  EXPECT_TRUE(is_valid_mcs_ordering(g, ord));
}

TEST(McsNumbering, FigureSelectionWeights) {
  Graph g = testgen::load_fixture("mcs_figure.txt");
  Ordering ord = mcs_ordering(g, TieBreak::lowest_id(), true);
  ASSERT_TRUE(ord.trace.has_value());
  const McsTrace& trace = *ord.trace;
  auto weight_when_selected = [&](const std::string& label) {
    VertexId v = testgen::id_of(g, label);
    return trace.steps[trace.step_of[v]].weights_before[v];
  };
  EXPECT_EQ(weight_when_selected("a"), 2);
  EXPECT_EQ(weight_when_selected("b"), 2);
  EXPECT_EQ(weight_when_selected("c"), 1);
  EXPECT_EQ(weight_when_selected("d"), 1);
  EXPECT_EQ(weight_when_selected("e"), 0);
}

TEST(McsNumbering, StampQueriesAroundOneSelection) {
  Graph g = testgen::load_fixture("mcs_figure.txt");
  Ordering ord = mcs_ordering(g, TieBreak::lowest_id(), true);
  const McsTrace& trace = *ord.trace;
  VertexId c = testgen::id_of(g, "c");
  VertexSet just_b = testgen::by_labels(g, {"b"});
  VertexSet a_and_b = testgen::by_labels(g, {"a", "b"});

  // numbering c bumps its unnumbered neighbor b from 1 to 2
  EXPECT_EQ(weight_at(trace, c, Stamp::Before, just_b), 1);
  EXPECT_EQ(weight_at(trace, c, Stamp::After, just_b), 2);
  EXPECT_EQ(weight_at(trace, c, Stamp::Before, a_and_b), 1);
  EXPECT_EQ(weight_at(trace, c, Stamp::After, a_and_b), 2);
}

TEST(McsNumbering, StampQueryRejectsFullyNumberedSet) {
  Graph g = testgen::load_fixture("mcs_figure.txt");
  Ordering ord = mcs_ordering(g, TieBreak::lowest_id(), true);
  VertexId a = testgen::id_of(g, "a");  // numbered last
  EXPECT_THROW(weight_at(*ord.trace, a, Stamp::After, testgen::by_labels(g, {"b"})),
               std::invalid_argument);
  EXPECT_THROW(weight_at(*ord.trace, 99, Stamp::Before, testgen::by_labels(g, {"b"})),
               std::out_of_range);
}

TEST(McsNumbering, WorkedExampleOrderUnderLowestIdTieBreak) {
  Graph g = testgen::load_fixture("worked_example.txt");
  Ordering ord = mcs_ordering(g);
  EXPECT_EQ(position_labels(g, ord),
            (std::vector<std::string>{"x", "d", "b", "s", "r", "l", "t", "a"}));
  EXPECT_TRUE(is_valid_mcs_ordering(g, ord));
}

TEST(McsValidation, RejectsNonMcsOrder) {
  std::istringstream in("a b\nb c\n");
  Graph g = load_edge_list(in);
  // numbering the middle vertex first forces an endpoint pick with weight 0
  // while a weight-1 vertex is available
  EXPECT_FALSE(is_valid_mcs_ordering(g, make_ordering(g, {1, 0, 2})));
  EXPECT_TRUE(is_valid_mcs_ordering(g, make_ordering(g, {0, 1, 2})));
}

TEST(McsValidation, RequiresBijection) {
  std::istringstream in("a b\nb c\n");
  Graph g = load_edge_list(in);
  Ordering bad;
  bad.alpha = {1, 1, 2};
  bad.by_position = {0, 1, 2};
  EXPECT_THROW(is_valid_mcs_ordering(g, bad), std::invalid_argument);
  EXPECT_THROW(make_ordering(g, {0, 1}), std::invalid_argument);
  EXPECT_THROW(make_ordering(g, {0, 1, 1}), std::invalid_argument);
}

TEST(McsValidation, EveryPermutationValidOnCompleteGraphs) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      EXPECT_TRUE(is_valid_mcs_ordering(g, make_ordering(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(McsTieBreaks, RandomSeedIsDeterministic) {
  Graph g = testgen::sparse_connected(40, 20, 3);
  Ordering first = mcs_ordering(g, TieBreak::random(42));
  Ordering second = mcs_ordering(g, TieBreak::random(42));
  EXPECT_EQ(first.by_position, second.by_position);
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    EXPECT_TRUE(is_valid_mcs_ordering(g, mcs_ordering(g, TieBreak::random(seed))));
}

TEST(McsTieBreaks, RandomSeedsExploreDifferentOrders) {
  // with no edges every vertex is tied at every step, so the tie-break alone
  // decides the order: lowest-id picks ids ascending, handing out numbers
  // n down to 1
  Graph g = Graph::from_edges(8, {});
  std::vector<VertexId> reference = mcs_ordering(g).by_position;
  EXPECT_TRUE(std::is_sorted(reference.begin(), reference.end(), std::greater<VertexId>{}));
  bool any_differ = false;
  for (std::uint64_t seed = 1; seed <= 10 && !any_differ; ++seed)
    any_differ = mcs_ordering(g, TieBreak::random(seed)).by_position != reference;
  EXPECT_TRUE(any_differ);
}

TEST(McsTrace, SnapshotsMatchRecomputedNeighborCounts) {
  std::mt19937_64 rng(91);
  for (int round = 0; round < 20; ++round) {
    Graph g = testgen::connected_erdos_renyi(10, 0.35, rng);
    Ordering ord = mcs_ordering(g, TieBreak::lowest_id(), true);
    const McsTrace& trace = *ord.trace;
    std::vector<char> numbered(g.vertex_count(), 0);
    for (const McsStep& step : trace.steps) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (numbered[v]) continue;
        int count = 0;
        for (VertexId u : g.neighbors(v)) count += numbered[u];
        EXPECT_EQ(step.weights_before[v], count);
      }
      numbered[step.vertex] = 1;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (numbered[v]) continue;
        int count = 0;
        for (VertexId u : g.neighbors(v)) count += numbered[u];
        EXPECT_EQ(step.weights_after[v], count);
      }
    }
  }
}

TEST(McsTrace, ReversedOrderEliminatesChordalGraphsPerfectly) {
  // K4 with a pendant triangle vertex: chordal, so processing vertices in
  // increasing number order must always find the higher-numbered neighbors
  // forming a clique
  Graph g = Graph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  for (const TieBreak& tb : {TieBreak::lowest_id(), TieBreak::random(7), TieBreak::random(19)}) {
    Ordering ord = mcs_ordering(g, tb);
    for (int number = 1; number <= g.vertex_count(); ++number) {
      VertexId v = ord.vertex_numbered(number);
      std::vector<VertexId> higher;
      for (VertexId u : g.neighbors(v))
        if (ord.number_of(u) > number) higher.push_back(u);
      EXPECT_TRUE(is_complete(g, VertexSet(higher)));
    }
  }
}

TEST(McsNumbering, EmptyGraphRejected) {
  Graph g;
  EXPECT_THROW(mcs_ordering(g), std::invalid_argument);
}

TEST(McsTieBreaks, ParseAndName) {
  EXPECT_EQ(TieBreak::parse("lowest-id"), TieBreak::lowest_id());
  EXPECT_EQ(TieBreak::parse("random:42"), TieBreak::random(42));
  EXPECT_EQ(TieBreak::parse("random:"), std::nullopt);
  EXPECT_EQ(TieBreak::parse("random:x"), std::nullopt);
  EXPECT_EQ(TieBreak::parse("bogus"), std::nullopt);
  EXPECT_EQ(TieBreak::lowest_id().name(), "lowest-id");
  EXPECT_EQ(TieBreak::random(7).name(), "random:7");
}

}  // namespace

// End-to-end acceptance checks. Each test pins one observable guarantee of
// the toolkit: golden decompositions on the small fixtures, exhaustive
// agreement with the brute-force oracles on randomized families, invariance
// across tie-break seeds, and the coarse performance envelope on the bundled
// sparse graphs. Timing bounds are generous; the point is to catch order-of-
// magnitude regressions, not to benchmark precisely.

#include <gtest/gtest.h>

#include <chrono>
#include <limits>
#include <random>
#include <vector>

#include <atomdec/bench.hpp>
#include <atomdec/decompose.hpp>
#include <atomdec/hull.hpp>
#include <atomdec/mcs.hpp>
#include <atomdec/oracle.hpp>
#include <atomdec/result_io.hpp>
#include <atomdec/triangulation.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace atomdec;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

TEST(Acceptance, WorkedExampleGolden) {
  auto start = std::chrono::steady_clock::now();
  Graph g = testgen::load_fixture("worked_example.txt");

  std::vector<VertexId> by_position;
  for (const char* l : {"x", "d", "b", "s", "r", "l", "t", "a"})
    by_position.push_back(testgen::id_of(g, l));
  Decomposition d = rda(g, make_ordering(g, std::move(by_position)));

  std::vector<VertexSet> expected{
      testgen::by_labels(g, {"x", "r"}),
      testgen::by_labels(g, {"d", "r", "b"}),
      testgen::by_labels(g, {"b", "r", "s", "l"}),
      testgen::by_labels(g, {"r", "t", "l"}),
      testgen::by_labels(g, {"a", "t"}),
  };
  EXPECT_EQ(d.atoms, AtomSet::from_sets(expected, g.vertex_count()));

  // the default entry point reproduces the same set
  EXPECT_EQ(decompose_graph(g).atoms, d.atoms);
  EXPECT_LT(seconds_since(start), 1.0);
}

TEST(Acceptance, SecondFigureGolden) {
  auto start = std::chrono::steady_clock::now();
  Graph g = testgen::load_fixture("second_figure.txt");
  std::vector<VertexSet> expected{
      testgen::by_labels(g, {"b", "c", "e", "f"}),
      testgen::by_labels(g, {"a", "b"}),
      testgen::by_labels(g, {"c", "d"}),
  };
  AtomSet want = AtomSet::from_sets(expected, g.vertex_count());

  DecomposeOptions as_rda;
  as_rda.algorithm = Algorithm::Rda;
  EXPECT_EQ(decompose_graph(g, as_rda).atoms, want);

  DecomposeOptions as_prda;
  as_prda.algorithm = Algorithm::Prda;
  as_prda.parallel_cutoff = 1;  // force real task spawning even at this size
  EXPECT_EQ(decompose_graph(g, as_prda).atoms, want);
  EXPECT_LT(seconds_since(start), 1.0);
}

TEST(Acceptance, SearchTraceGolden) {
  Graph g = testgen::load_fixture("mcs_figure.txt");
  Ordering ord = mcs_ordering(g, TieBreak::lowest_id(), true);

  const std::pair<const char*, int> expected_numbers[] = {
      {"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", 5}};
  for (auto [label, number] : expected_numbers)
    EXPECT_EQ(ord.number_of(testgen::id_of(g, label)), number) << label;

  const McsTrace& trace = *ord.trace;
  const std::pair<const char*, int> expected_weights[] = {
      {"a", 2}, {"b", 2}, {"c", 1}, {"d", 1}, {"e", 0}};
  for (auto [label, weight] : expected_weights) {
    VertexId v = testgen::id_of(g, label);
    EXPECT_EQ(trace.steps[trace.step_of[v]].weights_before[v], weight) << label;
  }

  VertexId c = testgen::id_of(g, "c");
  VertexSet a_and_b = testgen::by_labels(g, {"a", "b"});
  EXPECT_EQ(weight_at(trace, c, Stamp::Before, a_and_b), 1);
  EXPECT_EQ(weight_at(trace, c, Stamp::After, a_and_b), 2);
}

TEST(Acceptance, AtomOracleEquivalenceOnFiveHundredGraphs) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260816);
  const double probs[] = {0.2, 0.35, 0.5};
  PrdaOptions forced;
  forced.parallel_cutoff = 1;

  for (int round = 0; round < 500; ++round) {
    int n = 4 + static_cast<int>(rng() % 9);  // 4..12
    Graph g = testgen::connected_erdos_renyi(n, probs[round % 3], rng);
    AtomSet expected = brute_atoms(g);

    Ordering ord = mcs_ordering(g);
    EXPECT_EQ(rda(g, ord).atoms, expected) << "round " << round;
    EXPECT_EQ(prda(g, ord, forced).atoms, expected) << "round " << round;
    EXPECT_EQ(leimer_decompose(g).atoms, expected) << "round " << round;
  }
  EXPECT_LT(seconds_since(start), 300.0);
}

TEST(Acceptance, HullOracleEquivalenceOnThreeHundredSeedSets) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(816);
  const double probs[] = {0.25, 0.4, 0.55};

  for (int round = 0; round < 300; ++round) {
    int n = 4 + static_cast<int>(rng() % 8);  // 4..11
    Graph g = testgen::connected_erdos_renyi(n, probs[round % 3], rng);
    std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
    std::vector<VertexId> seeds;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) seeds.push_back(pick(rng));
    VertexSet seed_set{seeds};

    VertexSet hull = convex_hull(g, seed_set);
    EXPECT_EQ(hull, brute_hull(g, seed_set)) << "round " << round;
    EXPECT_TRUE(seed_set.is_subset_of(hull)) << "round " << round;
    EXPECT_TRUE(is_convex(g, hull)) << "round " << round;
    EXPECT_EQ(convex_hull(g, hull), hull) << "round " << round;
  }
  EXPECT_LT(seconds_since(start), 300.0);
}

TEST(Acceptance, SeparatorsSoundAndCompleteAgainstOracle) {
  std::mt19937_64 rng(277);
  const double probs[] = {0.2, 0.35, 0.5};

  for (int round = 0; round < 300; ++round) {
    int n = 4 + static_cast<int>(rng() % 9);  // 4..12
    Graph g = testgen::connected_erdos_renyi(n, probs[round % 3], rng);
    Decomposition d = decompose_graph(g);
    ASSERT_TRUE(d.separators.has_value());

    EXPECT_EQ(*d.separators, brute_clique_min_seps(g)) << "round " << round;

    for (const VertexSet& s : *d.separators) {
      EXPECT_TRUE(is_complete(g, s)) << "round " << round;
      auto comps = connected_components(g, set_difference(g.all_vertices(), s));
      int full = 0;
      for (const VertexSet& c : comps)
        if (neighborhood(g, c, Closure::Open) == s) ++full;
      EXPECT_GE(full, 2) << "round " << round;
    }
  }
}

TEST(Acceptance, AtomsInvariantAcrossTieBreakSeeds) {
  for (int k = 0; k < 20; ++k) {
    Graph g = testgen::sparse_connected(50, 25, 9000 + k);
    Decomposition reference = decompose_graph(g);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      DecomposeOptions opt;
      opt.tie_break = TieBreak::random(seed);
      EXPECT_EQ(decompose_graph(g, opt).atoms, reference.atoms)
          << "graph " << k << " seed " << seed;
    }
  }
}

TEST(Acceptance, SparseGraphThroughputTrend) {
  Graph sparse_1k = testgen::load_fixture("bench/sparse_1k.txt");
  BenchOptions opt;
  opt.repeats = 20;
  opt.timeout_seconds = 600.0;
  BenchReport report = run_bench({{"sparse_1k", &sparse_1k}}, opt);

  ASSERT_EQ(report.rows.size(), 2u);
  const BenchRow& rda_row = report.rows[0];
  const BenchRow& baseline_row = report.rows[1];
  ASSERT_EQ(rda_row.algorithm, "rda");
  ASSERT_EQ(baseline_row.algorithm, "baseline");
  EXPECT_FALSE(rda_row.timed_out);
  EXPECT_FALSE(baseline_row.timed_out);
  EXPECT_LE(rda_row.mean_seconds, baseline_row.mean_seconds);

  // the larger bundled graph must finish well inside the bench timeout
  Graph sparse_5k = testgen::load_fixture("bench/sparse_5k.txt");
  DecomposeOptions big;
  big.with_separators = false;
  big.deadline = deadline_after(600.0);
  Decomposition d = decompose_graph(sparse_5k, big);
  EXPECT_GE(d.atoms.size(), 1u);
  EXPECT_LT(d.wall_time_seconds, 600.0);
}

TEST(Acceptance, NearQuadraticScalingEnvelope) {
  // doubling n at fixed average degree may grow the runtime roughly
  // quadratically; 4.5x per doubling is the allowed envelope, measured on
  // the fastest of five runs to suppress scheduler noise
  std::vector<double> best_times;
  for (int n : {1000, 2000, 4000}) {
    Graph g = testgen::sparse_connected(n, n / 2, 424200 + n);
    DecomposeOptions opt;
    opt.with_separators = false;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 5; ++i) {
      auto start = std::chrono::steady_clock::now();
      Decomposition d = decompose_graph(g, opt);
      best = std::min(best, seconds_since(start));
      ASSERT_GE(d.atoms.size(), 1u);
    }
    best_times.push_back(best);
  }
  EXPECT_LE(best_times[1], 4.5 * best_times[0])
      << "1k->2k: " << best_times[0] << "s -> " << best_times[1] << "s";
  EXPECT_LE(best_times[2], 4.5 * best_times[1])
      << "2k->4k: " << best_times[1] << "s -> " << best_times[2] << "s";
}

TEST(Acceptance, VerifierClosesTheLoop) {
  // every algorithm's serialized result re-verifies against the graph
  Graph g = testgen::load_fixture("worked_example.txt");
  for (Algorithm a : {Algorithm::Rda, Algorithm::Prda, Algorithm::Baseline}) {
    DecomposeOptions opt;
    opt.algorithm = a;
    ResultDocument doc = make_result_document(g, decompose_graph(g, opt));
    Verification v = verify_decomposition(g, doc);
    EXPECT_TRUE(v.passed()) << algorithm_name(a);
    for (const auto& f : v.failures) ADD_FAILURE() << f.invariant << ": " << f.detail;
  }
}

}  // namespace

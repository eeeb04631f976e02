#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ccw/generators.hpp"
#include "ccw/solvers.hpp"
#include "oracles.hpp"

using namespace ccw;

namespace {

// Exhaustive for n <= 4, `samples` random graphs for n = 5 and 6.
template <typename F>
void for_small_graphs(int samples, F&& f)
{
    for (int n = 1; n <= 4; ++n)
        for (std::uint32_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask)
            f(oracle::labeled_graph(n, mask));
    std::mt19937 rng(2024);
    for (int n = 5; n <= 6; ++n)
        for (int i = 0; i < samples; ++i)
            f(oracle::random_graph(n, 0.2 + 0.6 * (i % 4) / 3.0, rng));
}

}  // namespace

TEST(BandwidthExact, Examples)
{
    for (int n = 1; n <= 10; ++n) {
        auto r = bandwidth_exact(path_graph(n));
        EXPECT_EQ(r.value, n > 1 ? 1 : 0);
        EXPECT_EQ(r.witness, LinearOrdering::identity(n));
    }
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(bandwidth_exact(complete_graph(n)).value, n - 1);
    auto k13 = bandwidth_exact(star_graph(3));
    EXPECT_EQ(k13.value, 2);
    EXPECT_EQ(k13.witness.order(), (std::vector<Vertex>{1, 0, 2, 3}));
}

TEST(BandwidthExact, LimitsAndEmptyGraph)
{
    EXPECT_THROW(bandwidth_exact(path_graph(13)), LimitExceeded);
    EXPECT_EQ(bandwidth_exact(path_graph(13), 13).value, 1);
    EXPECT_THROW(bandwidth_exact(Graph()), InvalidInput);
}

TEST(BandwidthExact, MatchesBruteForceWithLexSmallestWitness)
{
    for_small_graphs(60, [](const Graph& g) {
        auto r = bandwidth_exact(g);
        ASSERT_EQ(r.value, oracle::bandwidth(g));
        ASSERT_EQ(ordering_width(g, r.witness), r.value);
        auto order = oracle::all_vertices(g);
        do {
            if (oracle::ordering_width(g, order) == r.value)
                break;
        } while (std::next_permutation(order.begin(), order.end()));
        ASSERT_EQ(r.witness.order(), order);
    });
}

TEST(BandwidthExact, HandlesTwelveVertexRandomGraphs)
{
    std::mt19937 rng(1);
    for (int i = 0; i < 6; ++i) {
        auto g = oracle::random_graph(12, 0.3 + 0.1 * i, rng);
        auto r = bandwidth_exact(g);
        EXPECT_EQ(ordering_width(g, r.witness), r.value);
        EXPECT_GE(r.value, (g.max_degree() + 1) / 2);
    }
}

TEST(CliquePartitions, EnumerationMatchesFilteredSetPartitions)
{
    for_small_graphs(20, [](const Graph& g) {
        std::vector<CoverClasses> seen;
        for_each_clique_partition(g, [&](const CoverClasses& c) { seen.push_back(c); });
        auto expected = oracle::clique_partitions(g);
        std::sort(seen.begin(), seen.end());
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(seen, expected);
    });
}

TEST(CcwExact, Examples)
{
    for (int n = 1; n <= 6; ++n) {
        auto r = ccw_exact(complete_graph(n));
        EXPECT_EQ(r.value, 0);
        EXPECT_EQ(r.witness.size(), 1u);
    }
    for (int t = 1; t <= 3; ++t)
        EXPECT_EQ(ccw_exact(odd_path(t), 7).value, 1);
    for (int t = 1; t <= 2; ++t)
        EXPECT_EQ(ccw_exact(clique_sum(odd_path(t), odd_path(t), {{t, t}})).value, 2);
    EXPECT_EQ(ccw_exact(star_graph(3)).value, 1);
    EXPECT_EQ(ccw_exact(star_graph(4)).value, 2);
}

TEST(CcwExact, LimitsAndEmptyGraph)
{
    EXPECT_THROW(ccw_exact(path_graph(10)), LimitExceeded);
    EXPECT_EQ(ccw_exact(path_graph(10), 10).value, 1);
    EXPECT_THROW(ccw_exact(Graph()), InvalidInput);
}

TEST(CcwExact, MatchesBruteForce)
{
    for_small_graphs(25, [](const Graph& g) {
        auto r = ccw_exact(g);
        ASSERT_EQ(r.value, oracle::ccw(g));
        ASSERT_TRUE(validate_cover(g, r.witness.cliques()));
        ASSERT_EQ(cover_width(r.witness), r.value);
    });
}

TEST(CcwExact, WitnessIsLexicographicallySmallestOptimum)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_graph(2 + trial % 4, 0.5, rng);
        auto r = ccw_exact(g);
        std::optional<CoverClasses> smallest;
        for (auto classes : oracle::clique_partitions(g)) {
            std::sort(classes.begin(), classes.end());
            do {
                if (oracle::classes_width(g, classes) == r.value && (!smallest || classes < *smallest))
                    smallest = classes;
            } while (std::next_permutation(classes.begin(), classes.end()));
        }
        ASSERT_TRUE(smallest);
        ASSERT_EQ(r.witness.cliques(), *smallest);
    }
}

TEST(CcwExact, Deterministic)
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_graph(8, 0.5, rng);
        auto a = ccw_exact(g);
        auto b = ccw_exact(g);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(bandwidth_exact(g).witness, bandwidth_exact(g).witness);
    }
}

TEST(Inequalities, HoldOnSmallGraphs)
{
    for_small_graphs(500, [](const Graph& g) {
        const int cw = ccw_exact(g).value;
        const int bw = bandwidth_exact(g).value;
        ASSERT_LE(cw, bw);
        if (g.edge_count() > 0) {
            ASSERT_GE(cw, star_lower_bound(star_number(g)));
        }
        // Listing vertices clique by clique gives this bound for every graph.
        ASSERT_LE(bw, clique_number(g) * (cw + 1) - 1);
        if (cw >= 1 && g.order() <= 5) {
            ASSERT_LE(bw, clique_number(g) * cw);
        }
    });
}

TEST(Inequalities, ProductBoundFailsOnOctahedron)
{
    // K_{2,2,2}: two triangles with width 1, yet every ordering has width 4.
    auto g = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
                                   {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
    ASSERT_EQ(oracle::ccw(g), 1);
    ASSERT_EQ(oracle::bandwidth(g), 4);
    ASSERT_EQ(oracle::clique_number(g), 3);
    auto report = check_inequality_chain(g);
    EXPECT_EQ(report.ccw_at_most_bandwidth, BoundStatus::holds);
    EXPECT_EQ(report.bandwidth_at_most_product, BoundStatus::fails);
    EXPECT_EQ(report.star_lower_bound, BoundStatus::holds);
    EXPECT_FALSE(report.passed());
}

TEST(InequalityChain, StarWithFourLeaves)
{
    auto r = check_inequality_chain(star_graph(4));
    EXPECT_EQ(r.star_number, 4);
    EXPECT_EQ(r.ccw, 2);
    EXPECT_EQ(r.star_lower_bound, BoundStatus::holds);
    EXPECT_TRUE(r.passed());
}

TEST(InequalityChain, CompleteGraphProductBoundIsVacuous)
{
    for (int n = 2; n <= 6; ++n) {
        auto r = check_inequality_chain(complete_graph(n));
        EXPECT_EQ(r.ccw, 0);
        EXPECT_EQ(r.bandwidth, n - 1);
        EXPECT_EQ(r.clique_number, n);
        EXPECT_EQ(r.bandwidth_at_most_product, BoundStatus::vacuous);
        EXPECT_TRUE(r.passed());
    }
}

TEST(InequalityChain, OddPathSumHasSlackOne)
{
    auto r = check_inequality_chain(clique_sum(odd_path(1), odd_path(1), {{1, 1}}));
    EXPECT_EQ(r.ccw, 2);
    EXPECT_EQ(r.star_number, 4);
    EXPECT_EQ(r.ccw - star_lower_bound(r.star_number), 1);
    EXPECT_TRUE(r.passed());
}

TEST(Results, SerializeWithValueHeader)
{
    std::ostringstream bw;
    write_result(bw, bandwidth_exact(star_graph(3)));
    EXPECT_EQ(bw.str(), "value 2\nordering 4\n1 0 2 3\n");

    std::ostringstream cw;
    write_result(cw, ccw_exact(path_graph(3)));
    std::istringstream in(cw.str());
    EXPECT_EQ(read_value_header(in), 1);
    auto cover = read_cover(in, path_graph(3));
    EXPECT_EQ(cover_width(cover), 1);
}

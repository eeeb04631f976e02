#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ccw/experiment.hpp"
#include "ccw/generators.hpp"

using namespace ccw;

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> fields(const std::string& row)
{
    std::vector<std::string> out;
    std::stringstream in(row);
    for (std::string f; std::getline(in, f, ',');)
        out.push_back(f);
    if (!row.empty() && row.back() == ',')
        out.emplace_back();
    return out;
}

}  // namespace

TEST(Generators, DeterministicFamilies)
{
    EXPECT_EQ(odd_path(2), path_graph(5));
    EXPECT_EQ(star_graph(3), Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_EQ(complete_graph(4).edge_count(), 6u);
    EXPECT_THROW(odd_path(0), InvalidInput);
    EXPECT_THROW(random_graph(4, 1.5, 1), InvalidInput);
    EXPECT_THROW(random_graph(0, 0.5, 1), InvalidInput);
}

TEST(Generators, SeededRandomGraphsRepeat)
{
    EXPECT_EQ(random_graph(6, 0.5, 7), random_graph(6, 0.5, 7));
    EXPECT_EQ(random_graph(6, 0.0, 7).edge_count(), 0u);
    EXPECT_EQ(random_graph(6, 1.0, 7).edge_count(), 15u);
}

TEST(Generators, CliquesOfSize)
{
    auto k4 = complete_graph(4);
    EXPECT_EQ(cliques_of_size(k4, 3).size(), 4u);
    EXPECT_EQ(cliques_of_size(path_graph(4), 2),
              (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_TRUE(cliques_of_size(path_graph(4), 3).empty());
}

TEST(Generators, RandomCliqueSumInstancesAreValid)
{
    Rng rng(99);
    CliqueSumParams params;
    for (int i = 0; i < 60; ++i) {
        auto inst = random_clique_sum(params, rng);
        EXPECT_LE(inst.g1.order(), params.max_vertices);
        EXPECT_LE(inst.g2.order(), params.max_vertices);
        EXPECT_GE(inst.shared.size(), 1u);
        EXPECT_LE(inst.shared.size(), 3u);
        EXPECT_NO_THROW(validate_shared_map(inst.g1, inst.g2, inst.shared));
        EXPECT_EQ(cover_width(inst.c1), ccw_exact(inst.g1).value);
        EXPECT_EQ(cover_width(inst.c2), ccw_exact(inst.g2).value);
        EXPECT_GE(cover_width(inst.c1) + cover_width(inst.c2), 1);
    }
}

TEST(Generators, InstanceFileRoundTrip)
{
    Rng rng(3);
    auto inst = random_clique_sum(CliqueSumParams{}, rng);
    std::ostringstream first;
    write_instance(first, inst);
    std::istringstream in(first.str());
    auto back = read_instance(in);
    std::ostringstream second;
    write_instance(second, back);
    EXPECT_EQ(first.str(), second.str());

    std::istringstream bad("2 1\n0 1\ncover 1\n0 1\n2 0\ncover 2\n0\n1\nshared 2\n0 0\n1 1\n");
    EXPECT_THROW(read_instance(bad), InvalidInput);
}

TEST(Experiment, OddPathSweep)
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::odd_path_sweep;
    cfg.count = 5;
    cfg.limits.ccw = 21;
    auto rows = lines(run_experiment(cfg));
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], "n1,n2,shared,w1,w2,achieved,bound,ccw_exact,claim_check");
    for (int t = 1; t <= 5; ++t) {
        auto f = fields(rows[static_cast<std::size_t>(t)]);
        ASSERT_EQ(f.size(), 9u);
        EXPECT_EQ(std::stoi(f[0]), 2 * t + 1);
        EXPECT_LE(std::stoi(f[5]), 3);
        EXPECT_EQ(f[6], "3");
        EXPECT_EQ(f[7], "2");
    }
}

TEST(Experiment, BlankOracleColumnAboveLimit)
{
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::odd_path_sweep;
    cfg.count = 3;
    auto rows = lines(run_experiment(cfg));
    EXPECT_EQ(fields(rows[1])[7], "2");
    EXPECT_EQ(fields(rows[3])[7], "");
}

TEST(Experiment, RejectsEmptyCorpus)
{
    ExperimentConfig cfg;
    cfg.count = 0;
    EXPECT_THROW(run_experiment(cfg), InvalidInput);
    EXPECT_THROW(parse_experiment_kind("spiral"), InvalidInput);
}

TEST(Experiment, SeededRunsAreByteIdentical)
{
    ExperimentConfig cfg;
    cfg.count = 25;
    cfg.seed = 12345;
    auto a = run_experiment(cfg);
    auto b = run_experiment(cfg);
    EXPECT_EQ(a, b);
    EXPECT_EQ(lines(a).size(), 26u);
    cfg.seed = 54321;
    EXPECT_NE(run_experiment(cfg), a);
}

TEST(Experiment, SkipsInstancesOverTheSolverLimit)
{
    ExperimentConfig cfg;
    cfg.count = 2;
    cfg.params.min_vertices = 6;
    cfg.params.max_vertices = 6;
    cfg.limits.ccw = 5;
    auto rows = lines(run_experiment(cfg));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(fields(rows[1]).back(), "skipped");
}

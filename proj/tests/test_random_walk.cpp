#include "doctest.h"

#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "rankax/axioms.hpp"
#include "rankax/random_walk.hpp"

using namespace rankax;

TEST_CASE("path probability of the worked example") {
    auto g = fixtures::example_web();
    for (double a : {0.1, 0.5, 0.9}) {
        WalkPath path{{"v5", "v7", "v1", "v8"}};
        double expect = a * a * a * (1 - a) / 24.0;
        CHECK(std::abs(path_probability(g, a, path) - expect) < 1e-15);
    }
    CHECK(path_probability(g, 0.9, WalkPath{{"v5", "v7", "v1", "v8"}}) ==
          doctest::Approx(0.00303750).epsilon(1e-10));
}

TEST_CASE("path probability edge cases") {
    auto g = fixtures::example_web();
    // single-node walk at a non-sink: start prob times the stop factor
    CHECK(path_probability(g, 0.9, WalkPath{{"v5"}}) ==
          doctest::Approx((1.0 / 8) * 0.1).epsilon(1e-12));
    // a sink ends the walk with certainty
    CHECK(path_probability(g, 0.9, WalkPath{{"v2", "v3"}}) ==
          doctest::Approx((1.0 / 8) * 0.9).epsilon(1e-12));
    // sequences that are not paths have probability zero
    CHECK(path_probability(g, 0.9, WalkPath{{"v1", "v2"}}) == 0.0);
    CHECK_THROWS_AS(path_probability(g, 0.9, WalkPath{{"ghost"}}), NodeNotFoundError);
    CHECK_THROWS_AS(path_probability(g, 0.9, WalkPath{{}}), std::invalid_argument);
}

TEST_CASE("sampled walks are deterministic per seed and stop at a = 0") {
    auto g = fixtures::example_web();
    auto w1 = sample_walk(g, 0.9, 42);
    auto w2 = sample_walk(g, 0.9, 42);
    CHECK(w1.nodes == w2.nodes);

    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(sample_walk(g, 0.0, seed).nodes.size() == 1);

    auto zero = make_graph({{"u", 0}}, {});
    CHECK_THROWS_AS(sample_walk(zero, 0.5, 1), std::invalid_argument);
}

TEST_CASE("one-arrow walk outcomes carry the full probability mass") {
    auto g = fixtures::one_arrow();
    double a = 0.7;
    double p_stop = path_probability(g, a, WalkPath{{"u"}});
    double p_step = path_probability(g, a, WalkPath{{"u", "v"}});
    CHECK(p_stop == doctest::Approx(1 - a).epsilon(1e-12));
    CHECK(p_step == doctest::Approx(a).epsilon(1e-12));
    CHECK(p_stop + p_step == doctest::Approx(1.0).epsilon(1e-12));

    // empirical frequencies agree
    SplitMix64 rng(7);
    int moved = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i)
        if (sample_walk(g, a, rng).nodes.size() == 2) ++moved;
    CHECK(std::abs(static_cast<double>(moved) / n - a) < 0.02);
}

TEST_CASE("isolated weighted nodes are sampled by weight") {
    auto g = make_graph({{"x", 3}, {"y", 1}}, {});
    SplitMix64 rng(99);
    int hits_x = 0;
    const int n = 40000;
    for (int i = 0; i < n; ++i)
        if (sample_walk(g, 0.5, rng).nodes.front() == "x") ++hits_x;
    CHECK(std::abs(hits_x / static_cast<double>(n) - 0.75) < 0.02);
}

TEST_CASE("monte carlo estimate brackets the exact scores") {
    auto g = fixtures::one_arrow();
    auto est = expected_visits_mc(g, 0.6, 200000, 31415);
    auto pr = pagerank_direct(g, 0.6);
    for (const auto& v : g.node_list()) {
        double err = est.stderr_.at(v);
        CHECK(std::abs(est.mean.at(v) - pr.at(v)) <= std::max(4 * err, 1e-12));
    }

    // a = 0: every walk is one node, mean converges to the weights exactly
    auto est0 = expected_visits_mc(fixtures::example_web(), 0.0, 2000, 1);
    double total = 0.0;
    for (const auto& [v, m] : est0.mean.scores) total += m;
    CHECK(total == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("truncated series evaluation matches the direct solver") {
    auto g = fixtures::example_web();
    auto dp = expected_visits_dp(g, 0.9);
    auto pr = pagerank_direct(g, 0.9);
    CHECK(dp.max_abs_diff(pr) < 1e-10);

    auto dp0 = expected_visits_dp(g, 0.0);
    for (const auto& v : g.node_list()) CHECK(dp0.at(v) == g.weight(v));
}

namespace {

// Exhaustive enumeration of all walk sequences in an acyclic graph.
void enumerate_walks(const MultiGraph& g, std::vector<NodeId>& prefix, double& total) {
    total += path_probability(g, 0.6, WalkPath{prefix});
    for (const auto& [key, mult] : g.edges()) {
        if (key.first != prefix.back()) continue;
        prefix.push_back(key.second);
        enumerate_walks(g, prefix, total);
        prefix.pop_back();
    }
}

}  // namespace

TEST_CASE("walk probabilities sum to one on acyclic graphs") {
    GeneratorConfig config;
    config.size_range = {1, 6};
    SplitMix64 rng(2718);
    int tested = 0;
    for (int i = 0; i < 50; ++i) {
        auto g = generate_graph(GraphClass::acyclic(), config, rng);
        if (g.total_weight() <= 0.0) continue;
        double total = 0.0;
        for (const auto& v : g.node_list()) {
            std::vector<NodeId> prefix{v};
            enumerate_walks(g, prefix, total);
        }
        ++tested;
        CHECK(std::abs(total - 1.0) < 1e-12);
    }
    CHECK(tested >= 40);
}

TEST_CASE("step distributions track the surviving probability mass") {
    // Independent DP over the step distributions: the mass alive at step t+1
    // equals the mass at t minus what stopped at t.
    auto g = fixtures::example_web();
    double a = 0.8;
    IndexedGraph ig(g);
    std::vector<double> p(ig.size());
    for (std::size_t v = 0; v < ig.size(); ++v) p[v] = ig.weight[v] / g.total_weight();
    double alive = 1.0;
    std::vector<double> series(ig.size(), 0.0);
    for (int t = 0; t < 400; ++t) {
        double mass = 0.0, stopped = 0.0;
        for (std::size_t v = 0; v < ig.size(); ++v) {
            mass += p[v];
            stopped += p[v] * (ig.out_deg[v] == 0 ? 1.0 : 1.0 - a);
            series[v] += p[v];
        }
        CHECK(mass == doctest::Approx(alive).epsilon(1e-10));
        alive = mass - stopped;
        std::vector<double> next(ig.size(), 0.0);
        for (std::size_t v = 0; v < ig.size(); ++v) {
            if (ig.out_deg[v] == 0 || p[v] == 0.0) continue;
            for (const auto& [w, mult] : ig.out_edges[v])
                next[w] += p[v] * a * static_cast<double>(mult) / static_cast<double>(ig.out_deg[v]);
        }
        p.swap(next);
    }
    // and the summed series recovers PageRank / b(G)
    auto pr = pagerank_direct(g, a);
    for (std::size_t v = 0; v < ig.size(); ++v)
        CHECK(series[v] * g.total_weight() == doctest::Approx(pr.at(ig.nodes[v])).epsilon(1e-9));
}

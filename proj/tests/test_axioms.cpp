#include "doctest.h"

#include <cmath>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "table_expect.hpp"
#include "rankax/axioms.hpp"

using namespace rankax;

TEST_CASE("node redirect holds for pagerank on the chain start") {
    MeasureSpec pr(MeasureId::PageRank, 0.9);
    auto report = check_axiom(pr, AxiomId::NodeRedirect, fixtures::chain_f(),
                              OpInstance::redirect("v7", "v1"));
    CHECK(report.verdict == Verdict::Holds);
    // and the merged score is the sum of the two
    auto before = pagerank_direct(fixtures::chain_f(), 0.9);
    auto after = pagerank_direct(fixtures::chain_e(), 0.9);
    CHECK(after.at("v1") == doctest::Approx(before.at("v1") + before.at("v7")).epsilon(1e-12));
}

TEST_CASE("adaptive decay violates node deletion with the documented scores") {
    MeasureSpec spec(MeasureId::CxAdaptiveDecay);
    auto g = make_graph({{"u", 1}, {"v", 0}, {"w", 1}}, {{"u", "v", 1}});
    auto report = check_axiom(spec, AxiomId::NodeDeletion, g, OpInstance::del_node("w"));
    REQUIRE(report.verdict == Verdict::Violated);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->node == "v");
    CHECK(report.witness->before == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(report.witness->after == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("degree violates edge multiplication on the diamond") {
    MeasureSpec spec(MeasureId::Degree);
    auto report = check_axiom(spec, AxiomId::EdgeMultiplication, fixtures::diamond(),
                              OpInstance::multiply("v", 1));
    REQUIRE(report.verdict == Verdict::Violated);
    CHECK(report.witness->node == "w");
    CHECK(report.witness->before == 2);
    CHECK(report.witness->after == 3);
}

TEST_CASE("edge deletion only quantifies over non-successors") {
    // deleting (u,w) changes the degree of w, but w is a successor of u
    MeasureSpec spec(MeasureId::Degree);
    auto g = make_graph({{"u", 1}, {"w", 1}}, {{"u", "w", 2}});
    auto report = check_axiom(spec, AxiomId::EdgeDeletion, g, OpInstance::del_edge("u", "w"));
    CHECK(report.verdict == Verdict::Holds);
    CHECK(report.nodes_checked == 1);  // only u itself
}

TEST_CASE("edge swap precondition is reported, not conflated with violation") {
    MeasureSpec pr(MeasureId::PageRank, 0.9);
    // v1 and v8 have out-degree 1 and 3: degree precondition fails
    auto g = fixtures::example_web();
    auto rep = check_axiom(pr, AxiomId::EdgeSwap, g, OpInstance::swap("v1", "v8", "v8", "v7"));
    CHECK(rep.verdict == Verdict::PreconditionUnmet);

    // equal degrees but unequal scores
    auto g2 = make_graph({{"a", 1}, {"b", 2}, {"x", 0}, {"y", 0}},
                         {{"a", "x", 1}, {"b", "y", 1}});
    auto rep2 = check_axiom(pr, AxiomId::EdgeSwap, g2, OpInstance::swap("a", "x", "b", "y"));
    CHECK(rep2.verdict == Verdict::PreconditionUnmet);
}

TEST_CASE("baseline verdicts") {
    MeasureSpec pr(MeasureId::PageRank, 0.5);
    auto iso = make_graph({{"u", 1}, {"v", 0.75}, {"w", 2}}, {{"u", "v", 1}});
    auto rep = check_axiom(pr, AxiomId::Baseline, iso, std::nullopt);
    CHECK(rep.verdict == Verdict::Holds);
    CHECK(rep.nodes_checked == 1);  // w is the only isolated node

    MeasureSpec scaled(MeasureId::CxScaledPageRank, 0.5);
    auto rep2 = check_axiom(scaled, AxiomId::Baseline, fixtures::lone_node(), std::nullopt);
    REQUIRE(rep2.verdict == Verdict::Violated);
    CHECK(rep2.witness->after == doctest::Approx(2.0));
    CHECK(rep2.witness->expected == doctest::Approx(1.0));

    CHECK_THROWS_AS(
        check_axiom(pr, AxiomId::Baseline, iso, OpInstance::del_node("w")),
        std::invalid_argument);
}

TEST_CASE("mismatched op and axiom is rejected") {
    MeasureSpec pr(MeasureId::PageRank, 0.5);
    CHECK_THROWS_AS(check_axiom(pr, AxiomId::NodeDeletion, fixtures::diamond(),
                                OpInstance::multiply("v", 1)),
                    std::invalid_argument);
}

TEST_CASE("restricted mode skips out-of-class instances instead of evaluating") {
    // A measure that trips if it is ever evaluated outside its class.
    BoundMeasure guarded{"guarded-eigenvector", GraphClass::strongly_connected(),
                         [](const MultiGraph& g) {
                             REQUIRE(g.is_strongly_connected());
                             return eigenvector(g);
                         }};
    // not strongly connected: must skip, not evaluate
    auto rep = check_axiom(guarded, AxiomId::EdgeDeletion, fixtures::one_arrow(),
                           OpInstance::del_edge("u", "v"), {}, true);
    CHECK(rep.verdict == Verdict::SkippedOutOfClass);

    // deleting the only return edge of a two-cycle leaves the class: the
    // post-operation graph must not be evaluated either
    auto rep2 = check_axiom(guarded, AxiomId::EdgeDeletion, fixtures::two_cycle(),
                            OpInstance::del_edge("v", "u"), {}, true);
    CHECK(rep2.verdict == Verdict::SkippedOutOfClass);

    SplitMix64 rng(13);
    GeneratorConfig config;
    for (AxiomId axiom : kCoreAxioms) {
        for (int i = 0; i < 40; ++i) {
            auto inst = random_axiom_instance(axiom, guarded.cls, config, rng);
            if (!inst) continue;
            // The REQUIRE inside the measure is the point: no instance may
            // evaluate outside the class. (Edge multiplication violations are
            // genuine for eigenvector centrality, so verdicts are free.)
            auto r = check_axiom(guarded, axiom, inst->graph, inst->op, {}, true);
            if (axiom != AxiomId::EdgeMultiplication) CHECK(r.verdict != Verdict::Violated);
        }
    }
}

TEST_CASE("locality and source node") {
    auto extra = make_graph({{"z1", 1}, {"z2", 1}, {"z3", 1}},
                            {{"z1", "z2", 1}, {"z2", "z3", 1}, {"z3", "z1", 1}});

    MeasureSpec pr(MeasureId::PageRank, 0.9);
    auto rep = check_derived_property(bind_measure(pr), DerivedProperty::Locality,
                                      fixtures::example_web(), &extra);
    CHECK(rep.verdict == Verdict::Holds);

    // every all-graphs measure except the adaptive-decay one is local
    for (MeasureId id : {MeasureId::Degree, MeasureId::Beta, MeasureId::Decay,
                         MeasureId::Betweenness, MeasureId::CxSinkDoubled,
                         MeasureId::CxDampedOutdeg, MeasureId::CxWeightedBeta,
                         MeasureId::CxUniformBeta, MeasureId::CxScaledPageRank}) {
        MeasureSpec spec(id, MeasureSpec::measure_needs_alpha(id)
                                 ? std::optional<double>(0.7)
                                 : std::nullopt);
        auto r = check_derived_property(bind_measure(spec), DerivedProperty::Locality,
                                        fixtures::example_web(), &extra);
        CHECK(r.verdict == Verdict::Holds);
    }

    MeasureSpec adaptive(MeasureId::CxAdaptiveDecay);
    auto bad = check_derived_property(bind_measure(adaptive), DerivedProperty::Locality,
                                      fixtures::one_arrow(), &extra);
    CHECK(bad.verdict == Verdict::Violated);

    auto src = check_derived_property(bind_measure(pr), DerivedProperty::SourceNode,
                                      fixtures::chain_f());
    CHECK(src.verdict == Verdict::Holds);

    CHECK_THROWS_AS(check_derived_property(bind_measure(pr), DerivedProperty::Locality,
                                           fixtures::example_web(), nullptr),
                    std::invalid_argument);
    auto overlapping = fixtures::example_web();
    CHECK_THROWS_AS(check_derived_property(bind_measure(pr), DerivedProperty::Locality,
                                           fixtures::example_web(), &overlapping),
                    std::invalid_argument);
}

TEST_CASE("probe constants") {
    auto pr = probe_constants(MeasureSpec(MeasureId::PageRank, 0.9));
    CHECK(pr.c == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pr.a == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(pr.d == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(pr.pagerank_like);

    auto scaled = probe_constants(MeasureSpec(MeasureId::CxScaledPageRank, 0.9));
    CHECK(scaled.c == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(scaled.a == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(scaled.pagerank_like);

    auto wb = probe_constants(MeasureSpec(MeasureId::CxWeightedBeta));
    CHECK(wb.c == doctest::Approx(1.0));
    CHECK(wb.a == doctest::Approx(1.0));
    CHECK_FALSE(wb.pagerank_like);  // a = 1 is outside [0,1)

    // probe gadgets are outside the strongly connected class
    CHECK_THROWS_AS(probe_constants(MeasureSpec(MeasureId::Eigenvector)), ClassViolationError);

    auto katz_probe = probe_constants(MeasureSpec(MeasureId::Katz, 0.35));
    CHECK(katz_probe.c == doctest::Approx(1.0));
    CHECK(katz_probe.a == doctest::Approx(0.35));
}

TEST_CASE("uniqueness evidence") {
    GeneratorConfig config;
    SplitMix64 rng(1234);
    std::vector<MultiGraph> corpus;
    for (int i = 0; i < 60; ++i) corpus.push_back(generate_graph(GraphClass::all(), config, rng));

    auto self = check_uniqueness(bind_measure(MeasureSpec(MeasureId::PageRank, 0.85)), corpus);
    CHECK(self.graphs_checked == corpus.size());
    CHECK(self.max_deviation < 1e-10);

    auto scaled = check_uniqueness(bind_measure(MeasureSpec(MeasureId::CxScaledPageRank, 0.9)),
                                   corpus);
    CHECK(scaled.probe.c == doctest::Approx(2.0));
    CHECK(scaled.max_deviation < 1e-9);

    // violates node redirect, so it cannot be of the c * PR^a form
    auto uniform = check_uniqueness(bind_measure(MeasureSpec(MeasureId::CxUniformBeta)), corpus);
    CHECK(uniform.max_deviation > 1e-9);
}

TEST_CASE("graph generator honors its class guarantees") {
    GeneratorConfig config;
    // deterministic per seed
    auto a1 = generate_graph(GraphClass::acyclic(), config, std::uint64_t(5));
    auto a2 = generate_graph(GraphClass::acyclic(), config, std::uint64_t(5));
    CHECK(a1.weights() == a2.weights());
    CHECK(a1.edges() == a2.edges());
    CHECK(a1.spectral_radius() == 0.0);

    SplitMix64 rng(31);
    for (int i = 0; i < 25; ++i) {
        GeneratorConfig five = config;
        five.size_range = {5, 5};
        auto sc = generate_graph(GraphClass::strongly_connected(), five, rng);
        CHECK(sc.node_count() == 5);
        CHECK(oracles::strongly_connected(sc));

        auto kg = generate_graph(GraphClass::katz_admissible(0.9), config, rng);
        CHECK(kg.spectral_radius() < 1.0 / 0.9);
    }

    GeneratorConfig tiny = config;
    tiny.size_range = {1, 1};
    auto one = generate_graph(GraphClass::all(), tiny, std::uint64_t(17));
    CHECK(one.node_count() == 1);

    CHECK_THROWS_AS(generate_graph(GraphClass::strongly_connected(), tiny, std::uint64_t(1)),
                    std::invalid_argument);
}

TEST_CASE("counterexample search finds and shrinks violations") {
    auto bw = search_counterexample(bind_measure(MeasureSpec(MeasureId::Betweenness)),
                                    AxiomId::EdgeDeletion, 200, 7);
    REQUIRE(bw.has_value());
    CHECK(bw->verdict == Verdict::Violated);
    REQUIRE(bw->witness.has_value());
    CHECK(bw->witness->graph.node_count() <= 4);  // comparable to the two-hop witness

    auto deg = search_counterexample(bind_measure(MeasureSpec(MeasureId::Degree)),
                                     AxiomId::NodeRedirect, 200, 11);
    REQUIRE(deg.has_value());
    CHECK(deg->witness->graph.node_count() <= 4);
}

TEST_CASE("no violation found for pagerank within a healthy budget") {
    MeasureSpec pr(MeasureId::PageRank, 0.9);
    for (AxiomId axiom : kCoreAxioms) {
        auto found = search_counterexample(bind_measure(pr), axiom, 150, 99);
        CHECK_FALSE(found.has_value());
    }
}

TEST_CASE("pagerank satisfies all six axioms across decays (random instances)") {
    GeneratorConfig config;
    for (double a : {0.0, 0.5, 0.85, 0.9}) {
        BoundMeasure pr = bind_measure(MeasureSpec(MeasureId::PageRank, a));
        for (AxiomId axiom : kCoreAxioms) {
            SplitMix64 rng(10000 + static_cast<std::uint64_t>(a * 100));
            int done = 0;
            for (int i = 0; i < 500 && done < 120; ++i) {
                auto inst = random_axiom_instance(axiom, GraphClass::all(), config, rng);
                if (!inst) continue;
                auto rep = check_axiom(pr, axiom, inst->graph, inst->op, {1e-9, 1e-12}, true);
                if (rep.verdict == Verdict::Holds) ++done;
                CHECK(rep.verdict != Verdict::Violated);
            }
            CHECK(done >= 100);
        }
    }
}

TEST_CASE("every fixture violates exactly as catalogued") {
    for (const auto& fx : known_violations()) {
        std::optional<double> alpha;
        if (MeasureSpec::measure_needs_alpha(fx.measure)) alpha = 0.9;
        MeasureSpec spec(fx.measure, alpha);
        auto rep = check_axiom(spec, fx.axiom, fx.graph, fx.op, {}, true);
        INFO(spec.label(), " / ", axiom_name(fx.axiom), " / ", fx.name);
        CHECK(rep.verdict == Verdict::Violated);
    }
}

TEST_CASE("satisfiability matrix reproduces the reference pattern (reduced budget)") {
    auto matrix = satisfiability_matrix(comparison_measure_set(0.9), 60, 424242);
    const auto& expected = table_expect::pattern();
    for (std::size_t mi = 0; mi < matrix.measures.size(); ++mi) {
        const auto& row = expected.at(matrix.measures[mi].id);
        for (std::size_t ai = 0; ai < kCoreAxioms.size(); ++ai) {
            INFO(matrix.measures[mi].label(), " / ", axiom_name(kCoreAxioms[ai]));
            CHECK(cell_verdict_symbol(matrix.cells[mi][ai].verdict) == row[ai]);
            if (matrix.cells[mi][ai].verdict == CellVerdict::Minus)
                CHECK(matrix.cells[mi][ai].violation.has_value());
        }
    }
    auto rendered = render_matrix(matrix);
    CHECK(rendered.find("pagerank") != std::string::npos);
}

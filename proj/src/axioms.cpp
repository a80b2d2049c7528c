#include "rankax/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace rankax {

// ---------------------------------------------------------------------------
// names and small helpers
// ---------------------------------------------------------------------------

std::string axiom_name(AxiomId id) {
    switch (id) {
        case AxiomId::NodeDeletion: return "node-deletion";
        case AxiomId::EdgeDeletion: return "edge-deletion";
        case AxiomId::EdgeMultiplication: return "edge-multiplication";
        case AxiomId::EdgeSwap: return "edge-swap";
        case AxiomId::NodeRedirect: return "node-redirect";
        case AxiomId::Baseline: return "baseline";
        case AxiomId::Locality: return "locality";
        case AxiomId::SourceNode: return "source-node";
    }
    return "?";
}

AxiomId axiom_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(AxiomId::SourceNode); ++i) {
        auto id = static_cast<AxiomId>(i);
        if (axiom_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown axiom: " + name);
}

bool axiom_is_derived(AxiomId id) {
    return id == AxiomId::Locality || id == AxiomId::SourceNode;
}

AxiomId axiom_for_op(OpInstance::Kind kind) {
    switch (kind) {
        case OpInstance::Kind::DeleteNode: return AxiomId::NodeDeletion;
        case OpInstance::Kind::DeleteEdge: return AxiomId::EdgeDeletion;
        case OpInstance::Kind::MultiplyEdges: return AxiomId::EdgeMultiplication;
        case OpInstance::Kind::SwapEdges: return AxiomId::EdgeSwap;
        case OpInstance::Kind::Redirect: return AxiomId::NodeRedirect;
    }
    throw std::logic_error("bad op kind");
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::SkippedOutOfClass: return "skipped-out-of-class";
        case Verdict::PreconditionUnmet: return "precondition-unmet";
    }
    return "?";
}

bool Tolerance::equal(double x, double y) const {
    double bound = std::max(abs_floor, rel * std::max(std::abs(x), std::abs(y)));
    return std::abs(x - y) <= bound;
}

BoundMeasure bind_measure(const MeasureSpec& spec) {
    return {spec.label(), spec.graph_class(),
            [spec](const MultiGraph& g) { return evaluate(spec, g); }};
}

// ---------------------------------------------------------------------------
// check_axiom
// ---------------------------------------------------------------------------

namespace {

AxiomReport make_report(AxiomId axiom, const BoundMeasure& m, Verdict v, std::string detail = {}) {
    AxiomReport r;
    r.axiom = axiom;
    r.measure = m.label;
    r.verdict = v;
    r.detail = std::move(detail);
    return r;
}

// Nodes whose score the axiom asserts unchanged, given the pre-operation graph.
std::vector<NodeId> untouched_nodes(AxiomId axiom, const MultiGraph& g, const OpInstance& op) {
    std::vector<NodeId> out;
    switch (axiom) {
        case AxiomId::NodeDeletion:
            for (const auto& v : g.node_list())
                if (v != op.a) out.push_back(v);
            break;
        case AxiomId::EdgeDeletion: {
            // Quantified over nodes that are not successors of the edge start,
            // with successors taken on the pre-operation graph.
            auto succ = g.reachability(op.a).successors;
            for (const auto& v : g.node_list())
                if (!succ.count(v)) out.push_back(v);
            break;
        }
        case AxiomId::EdgeMultiplication:
        case AxiomId::EdgeSwap:
            out = g.node_list();
            break;
        case AxiomId::NodeRedirect:
            for (const auto& v : g.node_list())
                if (v != op.a && v != op.b) out.push_back(v);
            break;
        default:
            throw std::logic_error("untouched_nodes: not an invariance axiom");
    }
    return out;
}

}  // namespace

AxiomReport check_axiom(const BoundMeasure& measure, AxiomId axiom, const MultiGraph& g,
                        const std::optional<OpInstance>& op, Tolerance tol,
                        bool restrict_to_class) {
    if (axiom_is_derived(axiom))
        throw std::invalid_argument("use check_derived_property for " + axiom_name(axiom));

    if (axiom == AxiomId::Baseline) {
        if (op) throw std::invalid_argument("baseline takes no operation");
        if (restrict_to_class && !measure.cls.contains(g))
            return make_report(axiom, measure, Verdict::SkippedOutOfClass,
                               "graph outside " + measure.cls.name());
        auto report = make_report(axiom, measure, Verdict::Holds);
        CentralityVector scores;
        bool have_scores = false;
        for (const auto& v : g.node_list()) {
            if (!g.incidence(v).is_isolated) continue;
            if (!have_scores) {
                scores = measure(g);
                have_scores = true;
            }
            ++report.nodes_checked;
            double got = scores.at(v), want = g.weight(v);
            if (!tol.equal(got, want)) {
                report.verdict = Verdict::Violated;
                report.witness = Witness{g, std::nullopt, v, got, got, want};
                return report;
            }
        }
        if (report.nodes_checked == 0) report.detail = "no isolated node; vacuously holds";
        return report;
    }

    if (!op) throw std::invalid_argument(axiom_name(axiom) + " needs an operation instance");
    if (axiom_for_op(op->kind) != axiom)
        throw std::invalid_argument("operation " + op->to_string() + " does not match axiom " +
                                    axiom_name(axiom));

    if (restrict_to_class && !measure.cls.contains(g))
        return make_report(axiom, measure, Verdict::SkippedOutOfClass,
                           "graph outside " + measure.cls.name());

    CentralityVector before = measure(g);

    if (axiom == AxiomId::EdgeSwap) {
        if (g.out_degree(op->a) != g.out_degree(op->c))
            return make_report(axiom, measure, Verdict::PreconditionUnmet,
                               "out-degrees differ: " + op->a + ", " + op->c);
        if (!tol.equal(before.at(op->a), before.at(op->c)))
            return make_report(axiom, measure, Verdict::PreconditionUnmet,
                               "edge starts have unequal scores: " + op->a + ", " + op->c);
    }

    MultiGraph h = op->apply(g);
    if (restrict_to_class && !measure.cls.contains(h))
        return make_report(axiom, measure, Verdict::SkippedOutOfClass,
                           "transformed graph outside " + measure.cls.name());
    CentralityVector after = measure(h);

    auto report = make_report(axiom, measure, Verdict::Holds);
    for (const auto& v : untouched_nodes(axiom, g, *op)) {
        ++report.nodes_checked;
        double x = before.at(v), y = after.at(v);
        if (!tol.equal(x, y)) {
            report.verdict = Verdict::Violated;
            report.witness = Witness{g, op, v, x, y, x};
            return report;
        }
    }
    if (axiom == AxiomId::NodeRedirect) {
        ++report.nodes_checked;
        double expected = before.at(op->a) + before.at(op->b);
        double got = after.at(op->b);
        if (!tol.equal(expected, got)) {
            report.verdict = Verdict::Violated;
            report.witness = Witness{g, op, op->b, before.at(op->b), got, expected};
            return report;
        }
    }
    return report;
}

AxiomReport check_axiom(const MeasureSpec& spec, AxiomId axiom, const MultiGraph& g,
                        const std::optional<OpInstance>& op, Tolerance tol,
                        bool restrict_to_class) {
    return check_axiom(bind_measure(spec), axiom, g, op, tol, restrict_to_class);
}

AxiomReport check_derived_property(const BoundMeasure& measure, DerivedProperty which,
                                   const MultiGraph& g, const MultiGraph* g2, Tolerance tol) {
    if (which == DerivedProperty::Locality) {
        if (!g2) throw std::invalid_argument("locality needs a disjoint second graph");
        MultiGraph combined = disjoint_union(g, *g2);  // rejects overlapping ids
        CentralityVector alone = measure(g);
        CentralityVector together = measure(combined);
        auto report = make_report(AxiomId::Locality, measure, Verdict::Holds);
        for (const auto& v : g.node_list()) {
            ++report.nodes_checked;
            double x = alone.at(v), y = together.at(v);
            if (!tol.equal(x, y)) {
                report.verdict = Verdict::Violated;
                report.witness = Witness{combined, std::nullopt, v, x, y, x};
                return report;
            }
        }
        return report;
    }

    ProbeResult probe = probe_constants(measure, tol);
    CentralityVector scores = measure(g);
    auto report = make_report(AxiomId::SourceNode, measure, Verdict::Holds);
    for (const auto& v : g.node_list()) {
        if (!g.incidence(v).is_source) continue;
        ++report.nodes_checked;
        double got = scores.at(v), want = probe.c * g.weight(v);
        if (!tol.equal(got, want)) {
            report.verdict = Verdict::Violated;
            report.witness = Witness{g, std::nullopt, v, got, got, want};
            return report;
        }
    }
    if (report.nodes_checked == 0) report.detail = "no source node; vacuously holds";
    return report;
}

// ---------------------------------------------------------------------------
// probe and uniqueness
// ---------------------------------------------------------------------------

ProbeResult probe_constants(const BoundMeasure& measure, Tolerance tol) {
    MultiGraph single = make_graph({{"w", 1.0}}, {});
    MultiGraph arrow = make_graph({{"u", 1.0}, {"v", 0.0}}, {{"u", "v", 1}});

    ProbeResult out;
    out.c = measure(single).at("w");
    double sink = measure(arrow).at("v");
    out.a = out.c > tol.abs_floor ? sink / out.c : 0.0;
    out.d = out.a * out.c;
    out.pagerank_like = out.a >= 0.0 && out.a < 1.0 && out.c >= 0.0;
    return out;
}

ProbeResult probe_constants(const MeasureSpec& spec, Tolerance tol) {
    return probe_constants(bind_measure(spec), tol);
}

UniquenessReport check_uniqueness(const BoundMeasure& measure,
                                  const std::vector<MultiGraph>& corpus, Tolerance tol) {
    UniquenessReport report;
    report.probe = probe_constants(measure, tol);
    if (!report.probe.pagerank_like) {
        // The probe already rules the measure out; nothing meaningful to
        // compare against.
        report.max_deviation = std::numeric_limits<double>::infinity();
        return report;
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const MultiGraph& g = corpus[i];
        if (g.node_count() == 0 || !measure.cls.contains(g)) {
            ++report.graphs_skipped;
            continue;
        }
        CentralityVector got = measure(g);
        CentralityVector pr = pagerank_direct(g, report.probe.a);
        ++report.graphs_checked;
        for (const auto& [v, score] : got.scores) {
            double dev = std::abs(score - report.probe.c * pr.at(v));
            if (dev > report.max_deviation) {
                report.max_deviation = dev;
                report.worst_graph = i;
                report.worst_node = v;
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// random graphs and axiom instances
// ---------------------------------------------------------------------------

namespace {

NodeId gen_id(const std::string& prefix, int i) { return prefix + std::to_string(i + 1); }

double pick_weight(const GeneratorConfig& cfg, SplitMix64& rng) {
    return cfg.weight_pool[rng.next_in(0, cfg.weight_pool.size() - 1)];
}

MultiGraph random_unrestricted(const GeneratorConfig& cfg, SplitMix64& rng, int n,
                               int max_mult) {
    std::vector<std::pair<NodeId, double>> nodes;
    for (int i = 0; i < n; ++i) nodes.emplace_back(gen_id(cfg.id_prefix, i), pick_weight(cfg, rng));
    std::vector<std::tuple<NodeId, NodeId, std::int64_t>> edges;
    auto attempts = rng.next_in(static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(2 * n + 2));
    for (std::uint64_t i = 0; i < attempts; ++i) {
        int u = static_cast<int>(rng.next_in(0, n - 1));
        int v = static_cast<int>(rng.next_in(0, n - 1));  // self-loops allowed
        edges.emplace_back(gen_id(cfg.id_prefix, u), gen_id(cfg.id_prefix, v),
                           static_cast<std::int64_t>(rng.next_in(1, max_mult)));
    }
    return make_graph(nodes, edges);
}

MultiGraph random_acyclic(const GeneratorConfig& cfg, SplitMix64& rng, int n, int max_mult) {
    // Random topological order: edges only run forward along a shuffled
    // permutation, so the result is acyclic by construction.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.next_in(0, static_cast<std::uint64_t>(i))]);
    std::vector<std::pair<NodeId, double>> nodes;
    for (int i = 0; i < n; ++i) nodes.emplace_back(gen_id(cfg.id_prefix, i), pick_weight(cfg, rng));
    std::vector<std::tuple<NodeId, NodeId, std::int64_t>> edges;
    if (n > 1) {
        auto attempts = rng.next_in(static_cast<std::uint64_t>(n),
                                    static_cast<std::uint64_t>(2 * n + 2));
        for (std::uint64_t i = 0; i < attempts; ++i) {
            int a = static_cast<int>(rng.next_in(0, n - 1));
            int b = static_cast<int>(rng.next_in(0, n - 1));
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            edges.emplace_back(gen_id(cfg.id_prefix, order[a]), gen_id(cfg.id_prefix, order[b]),
                               static_cast<std::int64_t>(rng.next_in(1, max_mult)));
        }
    }
    return make_graph(nodes, edges);
}

MultiGraph random_strongly_connected(const GeneratorConfig& cfg, SplitMix64& rng, int n,
                                     int max_mult) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.next_in(0, static_cast<std::uint64_t>(i))]);
    std::vector<std::pair<NodeId, double>> nodes;
    for (int i = 0; i < n; ++i) nodes.emplace_back(gen_id(cfg.id_prefix, i), pick_weight(cfg, rng));
    std::vector<std::tuple<NodeId, NodeId, std::int64_t>> edges;
    // spanning cycle guarantees strong connectivity; chords add variety
    for (int i = 0; i < n; ++i)
        edges.emplace_back(gen_id(cfg.id_prefix, order[i]), gen_id(cfg.id_prefix, order[(i + 1) % n]),
                           static_cast<std::int64_t>(rng.next_in(1, max_mult)));
    auto chords = rng.next_in(0, static_cast<std::uint64_t>(n));
    for (std::uint64_t i = 0; i < chords; ++i) {
        int u = static_cast<int>(rng.next_in(0, n - 1));
        int v = static_cast<int>(rng.next_in(0, n - 1));
        edges.emplace_back(gen_id(cfg.id_prefix, u), gen_id(cfg.id_prefix, v),
                           static_cast<std::int64_t>(rng.next_in(1, max_mult)));
    }
    return make_graph(nodes, edges);
}

}  // namespace

MultiGraph generate_graph(const GraphClass& cls, const GeneratorConfig& config, SplitMix64& rng) {
    auto [lo, hi] = config.size_range;
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad size range");
    if (cls.kind == GraphClass::Kind::StronglyConnected && lo < 2)
        throw std::invalid_argument("strongly connected generation needs size >= 2");
    int n = static_cast<int>(rng.next_in(lo, hi));

    switch (cls.kind) {
        case GraphClass::Kind::All:
            return random_unrestricted(config, rng, n, config.max_multiplicity);
        case GraphClass::Kind::Acyclic:
            return random_acyclic(config, rng, n, config.max_multiplicity);
        case GraphClass::Kind::StronglyConnected:
            return random_strongly_connected(config, rng, n, config.max_multiplicity);
        case GraphClass::Kind::KatzAdmissible: {
            // Rejection on the spectral radius; alternate sparse and acyclic
            // candidates so acceptance stays cheap even for alpha near 1.
            constexpr int kCap = 200;
            for (int attempt = 0; attempt < kCap; ++attempt) {
                MultiGraph g = attempt % 2 == 0 ? random_unrestricted(config, rng, n, 1)
                                                : random_acyclic(config, rng, n,
                                                                 config.max_multiplicity);
                if (cls.contains(g)) return g;
            }
            throw GenerationError("katz-admissible rejection budget exhausted");
        }
    }
    throw std::logic_error("bad GraphClass kind");
}

MultiGraph generate_graph(const GraphClass& cls, const GeneratorConfig& config,
                          std::uint64_t seed) {
    SplitMix64 rng(seed);
    return generate_graph(cls, config, rng);
}

namespace {

std::vector<EdgeKey> edge_keys(const MultiGraph& g) {
    std::vector<EdgeKey> keys;
    keys.reserve(g.edges().size());
    for (const auto& [key, mult] : g.edges()) keys.push_back(key);
    return keys;
}

// Mirrored twin-component instance: the union of a graph and its renamed
// isomorphic copy. Any isomorphism-invariant measure gives mirror nodes equal
// scores, so the edge-swap precondition holds by construction.
std::optional<AxiomInstance> twin_component_swap(const GraphClass& base_class,
                                                 const GeneratorConfig& cfg, SplitMix64& rng) {
    GeneratorConfig base_cfg = cfg;
    base_cfg.id_prefix = cfg.id_prefix + "a";
    MultiGraph g1 = generate_graph(base_class, base_cfg, rng);
    if (g1.edges().empty()) return std::nullopt;

    auto mirror_id = [&](const NodeId& v) {
        return cfg.id_prefix + "b" + v.substr(base_cfg.id_prefix.size());
    };
    MultiGraph::WeightMap weights = g1.weights();
    for (const auto& [v, w] : g1.weights()) weights[mirror_id(v)] = w;
    MultiGraph::EdgeMap edges = g1.edges();
    for (const auto& [key, mult] : g1.edges())
        edges[{mirror_id(key.first), mirror_id(key.second)}] = mult;
    MultiGraph combined(std::move(weights), std::move(edges));

    auto keys = edge_keys(g1);
    const EdgeKey& e = keys[rng.next_in(0, keys.size() - 1)];
    return AxiomInstance{std::move(combined), OpInstance::swap(e.first, e.second,
                                                               mirror_id(e.first),
                                                               mirror_id(e.second))};
}

// Rotation-symmetric circulant instance: every node is automorphic to every
// other, so scores are all equal and the precondition holds inside restricted
// classes (the union trick above never yields a strongly connected graph).
AxiomInstance circulant_swap(const GraphClass& base_class, const GeneratorConfig& cfg,
                             SplitMix64& rng) {
    int n = static_cast<int>(rng.next_in(3, 6));
    std::vector<std::pair<int, std::int64_t>> offsets;
    bool plain_cycle = base_class.kind == GraphClass::Kind::KatzAdmissible;
    offsets.emplace_back(1, plain_cycle ? 1
                                        : static_cast<std::int64_t>(
                                              rng.next_in(1, cfg.max_multiplicity)));
    if (!plain_cycle && n > 2 && rng.next_double() < 0.5)
        offsets.emplace_back(static_cast<int>(rng.next_in(2, n - 1)),
                             static_cast<std::int64_t>(rng.next_in(1, cfg.max_multiplicity)));
    double w = cfg.weight_pool[rng.next_in(0, cfg.weight_pool.size() - 1)];

    std::vector<std::pair<NodeId, double>> nodes;
    std::vector<std::tuple<NodeId, NodeId, std::int64_t>> edges;
    auto id = [&](int i) { return cfg.id_prefix + "c" + std::to_string(((i % n) + n) % n + 1); };
    for (int i = 0; i < n; ++i) nodes.emplace_back(id(i), w);
    for (int i = 0; i < n; ++i)
        for (const auto& [off, mult] : offsets) edges.emplace_back(id(i), id(i + off), mult);

    int s = offsets[rng.next_in(0, offsets.size() - 1)].first;
    int i = static_cast<int>(rng.next_in(0, n - 1));
    int j = (i + 1 + static_cast<int>(rng.next_in(0, n - 2))) % n;
    return AxiomInstance{make_graph(nodes, edges), OpInstance::swap(id(i), id(i + s), id(j),
                                                                    id(j + s))};
}

}  // namespace

std::optional<AxiomInstance> random_axiom_instance(AxiomId axiom, const GraphClass& base_class,
                                                   const GeneratorConfig& config,
                                                   SplitMix64& rng) {
    switch (axiom) {
        case AxiomId::NodeDeletion:
        case AxiomId::Baseline: {
            MultiGraph base = generate_graph(base_class, config, rng);
            NodeId iso = config.id_prefix + "iso";
            MultiGraph::WeightMap weights = base.weights();
            weights[iso] = pick_weight(config, rng);
            MultiGraph g(std::move(weights), base.edges());
            if (axiom == AxiomId::Baseline) return AxiomInstance{std::move(g), std::nullopt};
            return AxiomInstance{std::move(g), OpInstance::del_node(iso)};
        }
        case AxiomId::EdgeDeletion: {
            MultiGraph g = generate_graph(base_class, config, rng);
            auto keys = edge_keys(g);
            if (keys.empty()) return std::nullopt;
            const EdgeKey& e = keys[rng.next_in(0, keys.size() - 1)];
            return AxiomInstance{std::move(g), OpInstance::del_edge(e.first, e.second)};
        }
        case AxiomId::EdgeMultiplication: {
            MultiGraph g = generate_graph(base_class, config, rng);
            auto nodes = g.node_list();
            NodeId u = nodes[rng.next_in(0, nodes.size() - 1)];
            return AxiomInstance{std::move(g),
                                 OpInstance::multiply(u, static_cast<std::int64_t>(
                                                             rng.next_in(1, 3)))};
        }
        case AxiomId::EdgeSwap: {
            bool circulant = base_class.kind != GraphClass::Kind::All || rng.next_double() < 0.5;
            if (circulant) return circulant_swap(base_class, config, rng);
            return twin_component_swap(base_class, config, rng);
        }
        case AxiomId::NodeRedirect: {
            MultiGraph base = generate_graph(base_class, config, rng);
            auto nodes = base.node_list();
            NodeId w = nodes[rng.next_in(0, nodes.size() - 1)];
            NodeId u = config.id_prefix + "tw";
            MultiGraph::WeightMap weights = base.weights();
            weights[u] = pick_weight(config, rng);
            MultiGraph::EdgeMap edges = base.edges();
            // duplicate w's outgoing edges so u and w are out-twins; incoming
            // edges for u must avoid u and w or the twin property breaks
            for (const auto& [key, mult] : base.edges())
                if (key.first == w) edges[{u, key.second}] = mult;
            std::vector<NodeId> candidates;
            for (const auto& v : nodes)
                if (v != w) candidates.push_back(v);
            if (!candidates.empty()) {
                auto in_count = rng.next_in(1, std::min<std::uint64_t>(3, candidates.size()));
                for (std::uint64_t i = 0; i < in_count; ++i) {
                    const NodeId& src = candidates[rng.next_in(0, candidates.size() - 1)];
                    edges[{src, u}] += static_cast<std::int64_t>(
                        rng.next_in(1, config.max_multiplicity));
                }
            }
            return AxiomInstance{MultiGraph(std::move(weights), std::move(edges)),
                                 OpInstance::redirect(u, w)};
        }
        default:
            throw std::invalid_argument("no random instances for " + axiom_name(axiom));
    }
}

// ---------------------------------------------------------------------------
// counterexample search with shrinking
// ---------------------------------------------------------------------------

namespace {

std::optional<Verdict> try_check(const BoundMeasure& measure, AxiomId axiom, const MultiGraph& g,
                                 const std::optional<OpInstance>& op, Tolerance tol,
                                 AxiomReport* out) {
    try {
        AxiomReport r = check_axiom(measure, axiom, g, op, tol, true);
        if (out) *out = r;
        return r.verdict;
    } catch (const PreconditionError&) {
    } catch (const ClassViolationError&) {
    } catch (const NodeNotFoundError&) {
    } catch (const NumericError&) {
    } catch (const std::invalid_argument&) {
    }
    return std::nullopt;
}

bool op_references(const OpInstance& op, const NodeId& v) {
    switch (op.kind) {
        case OpInstance::Kind::DeleteNode:
            return op.a == v;
        case OpInstance::Kind::DeleteEdge:
        case OpInstance::Kind::Redirect:
            return op.a == v || op.b == v;
        case OpInstance::Kind::MultiplyEdges:
            return op.a == v;
        case OpInstance::Kind::SwapEdges:
            return op.a == v || op.b == v || op.c == v || op.d == v;
    }
    return false;
}

MultiGraph without_node(const MultiGraph& g, const NodeId& v) {
    MultiGraph::WeightMap weights = g.weights();
    weights.erase(v);
    MultiGraph::EdgeMap edges;
    for (const auto& [key, mult] : g.edges())
        if (key.first != v && key.second != v) edges[key] = mult;
    return MultiGraph(std::move(weights), std::move(edges));
}

MultiGraph with_decremented_edge(const MultiGraph& g, const EdgeKey& e) {
    MultiGraph::EdgeMap edges = g.edges();
    auto it = edges.find(e);
    if (--it->second == 0) edges.erase(it);
    return MultiGraph(g.weights(), edges);
}

// Greedy shrink: keep a mutation (drop one node / decrement one multiplicity)
// iff the violation persists and the operation stays applicable.
AxiomReport shrink_violation(const BoundMeasure& measure, AxiomId axiom, MultiGraph g,
                             const std::optional<OpInstance>& op, Tolerance tol,
                             AxiomReport seed_report) {
    AxiomReport best = std::move(seed_report);
    constexpr int kMaxSteps = 200;
    int steps = 0;
    bool improved = true;
    while (improved && steps < kMaxSteps) {
        improved = false;
        for (const auto& v : g.node_list()) {
            if (op && op_references(*op, v)) continue;
            MultiGraph candidate = without_node(g, v);
            AxiomReport r;
            if (try_check(measure, axiom, candidate, op, tol, &r) == Verdict::Violated) {
                g = std::move(candidate);
                best = std::move(r);
                improved = true;
                ++steps;
                break;
            }
        }
        if (improved) continue;
        for (const auto& e : edge_keys(g)) {
            MultiGraph candidate = with_decremented_edge(g, e);
            AxiomReport r;
            if (try_check(measure, axiom, candidate, op, tol, &r) == Verdict::Violated) {
                g = std::move(candidate);
                best = std::move(r);
                improved = true;
                ++steps;
                break;
            }
        }
    }
    return best;
}

}  // namespace

std::optional<AxiomReport> search_counterexample(const BoundMeasure& measure, AxiomId axiom,
                                                 int budget, std::uint64_t seed, Tolerance tol) {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    SplitMix64 rng(seed);
    GeneratorConfig config;
    for (int i = 0; i < budget; ++i) {
        std::optional<AxiomInstance> inst;
        try {
            inst = random_axiom_instance(axiom, measure.cls, config, rng);
        } catch (const GenerationError&) {
            continue;
        }
        if (!inst) continue;
        AxiomReport r;
        if (try_check(measure, axiom, inst->graph, inst->op, tol, &r) == Verdict::Violated)
            return shrink_violation(measure, axiom, inst->graph, inst->op, tol, std::move(r));
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// known violation fixtures
// ---------------------------------------------------------------------------

namespace {

std::vector<ViolationFixture> build_fixtures() {
    // Shared witness graphs.
    MultiGraph lone = make_graph({{"v", 1.0}}, {});
    MultiGraph diamond = make_graph({{"u", 0.0}, {"v", 1.0}, {"v2", 0.0}, {"w", 0.0}},
                                    {{"u", "v", 1}, {"u", "v2", 1}, {"v", "w", 1}, {"v2", "w", 1}});
    MultiGraph mutual = make_graph({{"u", 1.0}, {"v", 1.0}, {"w", 1.0}},
                                   {{"u", "v", 1}, {"w", "v", 1}, {"v", "u", 1}, {"v", "w", 1}});
    MultiGraph doubled_triangle =
        make_graph({{"u", 1.0}, {"v", 1.0}, {"w", 1.0}},
                   {{"u", "v", 2}, {"v", "w", 2}, {"w", "u", 2}});
    MultiGraph two_hop = make_graph({{"u", 1.0}, {"v", 1.0}, {"w", 1.0}},
                                    {{"u", "v", 1}, {"v", "w", 1}});
    MultiGraph two_cycle = make_graph({{"u", 1.0}, {"v", 1.0}}, {{"u", "v", 1}, {"v", "u", 1}});
    MultiGraph parallel_arrows =
        make_graph({{"u", 1.0}, {"u2", 0.0}, {"w", 0.0}, {"w2", 0.0}},
                   {{"u", "u2", 1}, {"w", "w2", 1}});

    auto mult_v = OpInstance::multiply("v", 1);
    auto redirect_uw = OpInstance::redirect("u", "w");

    std::vector<ViolationFixture> out;
    auto add = [&](MeasureId m, AxiomId a, std::string name, MultiGraph g,
                   std::optional<OpInstance> op) {
        out.push_back({m, a, std::move(name), std::move(g), std::move(op)});
    };

    // degree
    add(MeasureId::Degree, AxiomId::EdgeMultiplication, "diamond", diamond, mult_v);
    add(MeasureId::Degree, AxiomId::NodeRedirect, "mutual-pair", mutual, redirect_uw);
    add(MeasureId::Degree, AxiomId::Baseline, "lone-node", lone, std::nullopt);
    // eigenvector
    add(MeasureId::Eigenvector, AxiomId::EdgeMultiplication, "two-cycle-quadrupled", two_cycle,
        OpInstance::multiply("u", 3));
    // katz / bonacich
    add(MeasureId::Katz, AxiomId::EdgeMultiplication, "diamond", diamond, mult_v);
    add(MeasureId::Bonacich, AxiomId::EdgeMultiplication, "diamond", diamond, mult_v);
    add(MeasureId::Bonacich, AxiomId::EdgeSwap, "parallel-arrows", parallel_arrows,
        OpInstance::swap("u", "u2", "w", "w2"));
    add(MeasureId::Bonacich, AxiomId::Baseline, "lone-node", lone, std::nullopt);
    // beta
    add(MeasureId::Beta, AxiomId::NodeRedirect, "mutual-pair", mutual, redirect_uw);
    add(MeasureId::Beta, AxiomId::Baseline, "lone-node", lone, std::nullopt);
    // closeness
    add(MeasureId::Closeness, AxiomId::EdgeSwap, "doubled-triangle", doubled_triangle,
        OpInstance::swap("u", "v", "w", "u"));
    add(MeasureId::Closeness, AxiomId::NodeRedirect, "mutual-pair", mutual, redirect_uw);
    // decay
    add(MeasureId::Decay, AxiomId::EdgeSwap, "doubled-triangle", doubled_triangle,
        OpInstance::swap("u", "v", "w", "u"));
    add(MeasureId::Decay, AxiomId::NodeRedirect, "mutual-pair", mutual, redirect_uw);
    add(MeasureId::Decay, AxiomId::Baseline, "lone-node", lone, std::nullopt);
    // betweenness
    add(MeasureId::Betweenness, AxiomId::EdgeDeletion, "two-hop-path", two_hop,
        OpInstance::del_edge("v", "w"));
    add(MeasureId::Betweenness, AxiomId::EdgeMultiplication, "diamond", diamond, mult_v);
    add(MeasureId::Betweenness, AxiomId::EdgeSwap, "doubled-triangle", doubled_triangle,
        OpInstance::swap("u", "v", "w", "u"));
    add(MeasureId::Betweenness, AxiomId::NodeRedirect, "mutual-pair", mutual, redirect_uw);
    add(MeasureId::Betweenness, AxiomId::Baseline, "lone-node", lone, std::nullopt);

    // The six measures that each give up exactly one axiom.
    add(MeasureId::CxAdaptiveDecay, AxiomId::NodeDeletion, "weighted-spectator",
        make_graph({{"u", 1.0}, {"v", 0.0}, {"w", 1.0}}, {{"u", "v", 1}}),
        OpInstance::del_node("w"));
    add(MeasureId::CxSinkDoubled, AxiomId::EdgeDeletion, "two-hop-path",
        make_graph({{"u", 1.0}, {"v", 0.0}, {"w", 0.0}}, {{"u", "v", 1}, {"v", "w", 1}}),
        OpInstance::del_edge("v", "w"));
    add(MeasureId::CxDampedOutdeg, AxiomId::EdgeMultiplication, "one-arrow",
        make_graph({{"u", 1.0}, {"v", 0.0}}, {{"u", "v", 1}}), OpInstance::multiply("u", 1));
    add(MeasureId::CxWeightedBeta, AxiomId::EdgeSwap, "two-hop-path",
        make_graph({{"u", 1.0}, {"v", 0.0}, {"w", 0.0}}, {{"u", "v", 1}, {"v", "w", 1}}),
        OpInstance::swap("u", "v", "v", "w"));
    add(MeasureId::CxUniformBeta, AxiomId::NodeRedirect, "join-pair",
        make_graph({{"u", 0.0}, {"v", 0.0}, {"w", 0.0}}, {{"u", "v", 1}, {"w", "v", 1}}),
        redirect_uw);
    add(MeasureId::CxScaledPageRank, AxiomId::Baseline, "lone-node", lone, std::nullopt);
    return out;
}

}  // namespace

const std::vector<ViolationFixture>& known_violations() {
    static const std::vector<ViolationFixture> fixtures = build_fixtures();
    return fixtures;
}

// ---------------------------------------------------------------------------
// satisfiability matrix
// ---------------------------------------------------------------------------

std::string cell_verdict_symbol(CellVerdict v) {
    switch (v) {
        case CellVerdict::Plus: return "+";
        case CellVerdict::Minus: return "-";
        case CellVerdict::PlusStar: return "+*";
        case CellVerdict::MinusStar: return "-*";
    }
    return "?";
}

SatisfiabilityMatrix satisfiability_matrix(const std::vector<MeasureSpec>& measures, int budget,
                                           std::uint64_t seed, Tolerance tol) {
    SatisfiabilityMatrix matrix;
    matrix.measures = measures;
    matrix.cells.resize(measures.size());

    for (std::size_t mi = 0; mi < measures.size(); ++mi) {
        BoundMeasure bound = bind_measure(measures[mi]);
        for (std::size_t ai = 0; ai < kCoreAxioms.size(); ++ai) {
            AxiomId axiom = kCoreAxioms[ai];
            MatrixCell& cell = matrix.cells[mi][ai];
            bool violated = false;

            // Known fixtures first: a minus must be backed by its concrete
            // witness, never by suspicion.
            for (const auto& fx : known_violations()) {
                if (fx.measure != measures[mi].id || fx.axiom != axiom) continue;
                AxiomReport r = check_axiom(bound, axiom, fx.graph, fx.op, tol, true);
                ++cell.checked;
                if (r.verdict == Verdict::Violated) {
                    cell.violation = std::move(r);
                    cell.from_fixture = true;
                    violated = true;
                    break;
                }
            }

            if (!violated) {
                SplitMix64 cell_rng(seed ^ (0x9e3779b97f4a7c15ULL * (mi * 16 + ai + 1)));
                GeneratorConfig config;
                for (int i = 0; i < budget && !violated; ++i) {
                    std::optional<AxiomInstance> inst;
                    try {
                        inst = random_axiom_instance(axiom, bound.cls, config, cell_rng);
                    } catch (const GenerationError&) {
                        continue;
                    }
                    if (!inst) continue;
                    AxiomReport r;
                    auto verdict = try_check(bound, axiom, inst->graph, inst->op, tol, &r);
                    if (!verdict) continue;
                    switch (*verdict) {
                        case Verdict::Holds:
                            ++cell.checked;
                            break;
                        case Verdict::SkippedOutOfClass:
                            ++cell.skipped;
                            break;
                        case Verdict::PreconditionUnmet:
                            ++cell.precondition_unmet;
                            break;
                        case Verdict::Violated:
                            cell.violation = shrink_violation(bound, axiom, inst->graph, inst->op,
                                                              tol, std::move(r));
                            violated = true;
                            break;
                    }
                }
            }

            // Minus entries carry no star: a witness inside the class decides
            // the restricted axiom outright. The star marks pluses that were
            // established under restricted semantics only.
            if (violated) cell.verdict = CellVerdict::Minus;
            else cell.verdict = bound.cls.is_all() ? CellVerdict::Plus : CellVerdict::PlusStar;
        }
    }
    return matrix;
}

std::string render_matrix(const SatisfiabilityMatrix& m) {
    static const char* kHeaders[] = {"node-del", "edge-del", "edge-mult",
                                     "edge-swap", "node-redir", "baseline"};
    std::size_t name_width = 8;
    for (const auto& spec : m.measures) name_width = std::max(name_width, spec.label().size());

    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(name_width) + 2) << "measure";
    for (const char* h : kHeaders) os << std::setw(12) << h;
    os << "\n";
    for (std::size_t mi = 0; mi < m.measures.size(); ++mi) {
        os << std::setw(static_cast<int>(name_width) + 2) << m.measures[mi].label();
        for (std::size_t ai = 0; ai < kCoreAxioms.size(); ++ai)
            os << std::setw(12) << cell_verdict_symbol(m.cells[mi][ai].verdict);
        os << "\n";
    }
    return os.str();
}

std::vector<MeasureSpec> comparison_measure_set(double alpha) {
    return {
        {MeasureId::Degree},         {MeasureId::Eigenvector},
        {MeasureId::Katz, alpha},    {MeasureId::Bonacich, alpha},
        {MeasureId::Beta},           {MeasureId::KatzPrestige},
        {MeasureId::PageRank, alpha}, {MeasureId::Closeness},
        {MeasureId::Decay, alpha},   {MeasureId::Betweenness},
    };
}

std::vector<MeasureSpec> independence_measure_set(double alpha) {
    return {
        {MeasureId::CxAdaptiveDecay},        {MeasureId::CxSinkDoubled, alpha},
        {MeasureId::CxDampedOutdeg, alpha},  {MeasureId::CxWeightedBeta},
        {MeasureId::CxUniformBeta},          {MeasureId::CxScaledPageRank, alpha},
    };
}

}  // namespace rankax

// Command-line front end: centrality tables, axiom suites, the
// satisfiability matrix, walk checks, constant probes and chain scripts.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rankax/axioms.hpp"
#include "rankax/centrality.hpp"
#include "rankax/chain.hpp"
#include "rankax/graph_io.hpp"
#include "rankax/random_walk.hpp"

using namespace rankax;
using nlohmann::json;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RANKAX_SEED")) return std::strtoull(env, nullptr, 10);
    return 12345;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

MeasureSpec make_spec(const std::string& name, const std::optional<double>& alpha) {
    MeasureId id = measure_from_name(name);
    if (MeasureSpec::measure_needs_alpha(id) && !alpha)
        throw CLI::ValidationError("--alpha", "measure " + name + " needs --alpha");
    return MeasureSpec(id, MeasureSpec::measure_needs_alpha(id) ? alpha : std::nullopt);
}

int run_centrality(const std::string& path, const std::string& measure, std::optional<double> alpha,
                   const std::string& alpha_text, bool exact) {
    auto parsed = load_graph_file(path);
    auto spec = make_spec(measure, alpha);
    if (exact) {
        std::optional<Rational> ra;
        if (spec.needs_alpha()) ra = rational_from_decimal(alpha_text);
        auto scores = evaluate_exact(spec, parsed.graph, parsed.exact_weights, ra);
        std::cout << "node  score  (decimal)\n";
        for (const auto& [v, s] : scores)
            std::cout << v << "  " << to_string(s) << "  (" << fmt(to_double(s)) << ")\n";
        return 0;
    }
    auto scores = evaluate(spec, parsed.graph);
    std::cout << "node  score\n";
    for (const auto& [v, s] : scores.scores) std::cout << v << "  " << fmt(s) << "\n";
    return 0;
}

void print_report(const AxiomReport& r) {
    std::cout << std::left << std::setw(20) << axiom_name(r.axiom) << std::setw(24)
              << verdict_name(r.verdict);
    if (r.witness) {
        const auto& w = *r.witness;
        std::cout << " node " << w.node << ": before " << fmt(w.before) << ", after "
                  << fmt(w.after) << ", expected " << fmt(w.expected);
        if (w.op) std::cout << " [" << w.op->to_string() << "]";
    } else if (!r.detail.empty()) {
        std::cout << " (" << r.detail << ")";
    }
    std::cout << "\n";
}

int run_axioms(const std::string& path, bool random, const std::string& measure,
               std::optional<double> alpha, bool restricted, int budget, std::uint64_t seed,
               double tol) {
    auto spec = make_spec(measure, alpha);
    auto bound = bind_measure(spec);
    Tolerance tolerance{tol, 1e-12};
    bool all_hold = true;

    auto consume = [&](const AxiomReport& r) {
        print_report(r);
        if (r.verdict == Verdict::Violated) all_hold = false;
    };

    if (random) {
        GeneratorConfig config;
        SplitMix64 rng(seed);
        for (AxiomId axiom : kCoreAxioms) {
            int produced = 0;
            for (int i = 0; i < budget * 4 && produced < budget; ++i) {
                auto inst = random_axiom_instance(axiom, restricted ? bound.cls : GraphClass::all(),
                                                  config, rng);
                if (!inst) continue;
                ++produced;
                consume(check_axiom(bound, axiom, inst->graph, inst->op, tolerance, true));
            }
        }
        std::cout << (all_hold ? "no violation found\n" : "violations found\n");
        return all_hold ? 0 : 1;
    }

    auto parsed = load_graph_file(path);
    const auto& g = parsed.graph;

    for (const auto& v : g.node_list())
        if (g.incidence(v).is_isolated)
            consume(check_axiom(bound, AxiomId::NodeDeletion, g, OpInstance::del_node(v),
                                tolerance, restricted));
    for (const auto& [key, mult] : g.edges())
        consume(check_axiom(bound, AxiomId::EdgeDeletion, g,
                            OpInstance::del_edge(key.first, key.second), tolerance, restricted));
    for (const auto& v : g.node_list())
        consume(check_axiom(bound, AxiomId::EdgeMultiplication, g, OpInstance::multiply(v, 1),
                            tolerance, restricted));
    std::vector<EdgeKey> keys;
    for (const auto& [key, mult] : g.edges()) keys.push_back(key);
    int swaps = 0;
    for (std::size_t i = 0; i < keys.size() && swaps < 200; ++i)
        for (std::size_t j = i + 1; j < keys.size() && swaps < 200; ++j) {
            if (g.out_degree(keys[i].first) != g.out_degree(keys[j].first)) continue;
            ++swaps;
            consume(check_axiom(bound, AxiomId::EdgeSwap, g,
                                OpInstance::swap(keys[i].first, keys[i].second, keys[j].first,
                                                 keys[j].second),
                                tolerance, restricted));
        }
    for (const auto& u : g.node_list())
        for (const auto& w : g.node_list()) {
            if (u == w || !g.are_out_twins(u, w)) continue;
            consume(check_axiom(bound, AxiomId::NodeRedirect, g, OpInstance::redirect(u, w),
                                tolerance, restricted));
        }
    consume(check_axiom(bound, AxiomId::Baseline, g, std::nullopt, tolerance, restricted));

    // derived properties, flagged as such
    try {
        GeneratorConfig config;
        config.id_prefix = "zz";
        auto extra = generate_graph(GraphClass::all(), config, seed);
        auto loc = check_derived_property(bound, DerivedProperty::Locality, g, &extra, tolerance);
        std::cout << "derived: ";
        consume(loc);
        auto src = check_derived_property(bound, DerivedProperty::SourceNode, g, nullptr, tolerance);
        std::cout << "derived: ";
        consume(src);
    } catch (const ClassViolationError& e) {
        std::cout << "derived checks skipped: " << e.what() << "\n";
    }

    return all_hold ? 0 : 1;
}

int run_matrix(double alpha, int budget, std::uint64_t seed, const std::string& json_path,
               const std::string& witness_dir) {
    auto matrix = satisfiability_matrix(comparison_measure_set(alpha), budget, seed);
    std::cout << render_matrix(matrix);

    if (!json_path.empty()) {
        json records = json::array();
        for (std::size_t mi = 0; mi < matrix.measures.size(); ++mi) {
            for (std::size_t ai = 0; ai < kCoreAxioms.size(); ++ai) {
                const MatrixCell& cell = matrix.cells[mi][ai];
                json rec{{"measure", matrix.measures[mi].label()},
                         {"axiom", axiom_name(kCoreAxioms[ai])},
                         {"verdict", cell_verdict_symbol(cell.verdict)},
                         {"checked", cell.checked},
                         {"skipped", cell.skipped},
                         {"witness_file", ""}};
                if (cell.violation && cell.violation->witness) {
                    const Witness& w = *cell.violation->witness;
                    rec["witness"] = {{"node", w.node},
                                      {"before", w.before},
                                      {"after", w.after},
                                      {"expected", w.expected},
                                      {"op", w.op ? w.op->to_string() : "baseline"}};
                    if (!witness_dir.empty()) {
                        std::filesystem::create_directories(witness_dir);
                        std::string file = witness_dir + "/" +
                                           measure_name(matrix.measures[mi].id) + "_" +
                                           axiom_name(kCoreAxioms[ai]) + ".graph";
                        save_graph_file(w.graph, file);
                        rec["witness_file"] = file;
                    }
                }
                records.push_back(std::move(rec));
            }
        }
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << records.dump(2) << "\n";
    }
    return 0;
}

int run_walk(const std::string& path, double alpha, const std::string& path_spec,
             std::int64_t mc_samples, std::uint64_t seed) {
    auto parsed = load_graph_file(path);
    if (!path_spec.empty()) {
        WalkPath walk;
        std::istringstream is(path_spec);
        std::string tok;
        while (std::getline(is, tok, ',')) walk.nodes.push_back(tok);
        double p = path_probability(parsed.graph, alpha, walk);
        std::cout << std::fixed << std::setprecision(8) << p << "\n";
        return 0;
    }
    if (mc_samples <= 0) throw CLI::ValidationError("walk", "need --path or --mc");
    auto est = expected_visits_mc(parsed.graph, alpha, mc_samples, seed);
    auto exact = pagerank_direct(parsed.graph, alpha);
    std::cout << "node  mc-estimate  stderr  exact  z\n";
    bool ok = true;
    for (const auto& [v, mean] : est.mean.scores) {
        double err = est.stderr_.at(v);
        double diff = mean - exact.at(v);
        double z = err > 0 ? diff / err : (diff == 0 ? 0.0 : std::numeric_limits<double>::infinity());
        if (std::abs(z) > 4.0) ok = false;
        std::cout << v << "  " << fmt(mean) << "  " << fmt(err) << "  " << fmt(exact.at(v)) << "  "
                  << fmt(z) << "\n";
    }
    std::cout << (ok ? "estimates bracket the exact scores (|z| <= 4)\n"
                     : "estimate outside 4 standard errors\n");
    return ok ? 0 : 1;
}

int run_probe(const std::string& measure, std::optional<double> alpha) {
    auto probe = probe_constants(make_spec(measure, alpha));
    std::cout << "c = " << fmt(probe.c) << "\n"
              << "a = " << fmt(probe.a) << "\n"
              << "d = " << fmt(probe.d) << "\n"
              << (probe.pagerank_like ? "decay lies in [0,1)\n"
                                      : "decay outside [0,1): not a scaled-pagerank form\n");
    return 0;
}

int run_chain(const std::string& path, double tol) {
    ChainScript script = load_chain_script(path);
    auto parsed = load_graph_file(script.graph_file);
    ChainOutcome outcome = run_chain(script, parsed.graph, Tolerance{tol, 1e-12});

    for (std::size_t i = 0; i < outcome.steps.size(); ++i) {
        const auto& step = outcome.steps[i];
        std::cout << "step " << i + 1 << ": " << std::left << std::setw(24) << step.op.to_string()
                  << axiom_name(step.axiom) << " -> " << verdict_name(step.verdict) << "\n";
    }
    if (outcome.failed_step != 0) {
        std::cout << "aborted at step " << outcome.failed_step << ": " << outcome.failure << "\n";
        return 2;
    }
    for (const auto& [v, got, want] : outcome.final_checks)
        std::cout << "final: F[" << v << "] = " << fmt(got) << ", predicted " << fmt(want) << " -> "
                  << (Tolerance{tol, 1e-12}.equal(got, want) ? "ok" : "MISMATCH") << "\n";
    std::cout << (outcome.ok ? "chain holds\n" : "chain violated\n");
    return outcome.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PageRank, ten comparison centralities, and executable invariance axioms on "
                 "node-weighted directed multigraphs"};
    app.require_subcommand(1);

    std::string graph_file, measure, alpha_text, path_spec, json_path, witness_dir, script;
    std::optional<double> alpha;
    double tol = 1e-9;
    int budget = 500;
    std::int64_t mc_samples = 0;
    std::uint64_t seed = default_seed();
    bool exact = false, random_graphs = false, restricted = false;

    auto add_alpha = [&](CLI::App* cmd) {
        // accepts decimals and fractions ("0.9" or "9/10")
        cmd->add_option("--alpha", alpha_text, "decay factor in [0,1)")->each([&](const std::string& s) {
            alpha = to_double(rational_from_decimal(s));
        });
    };

    auto* centrality_cmd = app.add_subcommand("centrality", "score a graph with one measure");
    centrality_cmd->add_option("graph", graph_file, "graph file")->required();
    centrality_cmd->add_option("--measure", measure, "measure id")->required();
    add_alpha(centrality_cmd);
    centrality_cmd->add_flag("--exact", exact, "exact rational scores");

    auto* axioms_cmd = app.add_subcommand("axioms", "run the axiom suite for one measure");
    axioms_cmd->add_option("graph", graph_file, "graph file");
    axioms_cmd->add_flag("--random", random_graphs, "random instances instead of a fixed graph");
    axioms_cmd->add_option("--measure", measure, "measure id")->required();
    add_alpha(axioms_cmd);
    axioms_cmd->add_flag("--class-restricted", restricted, "skip instances outside the class");
    axioms_cmd->add_option("--budget", budget, "random instances per axiom");
    axioms_cmd->add_option("--seed", seed, "rng seed");
    axioms_cmd->add_option("--tol", tol, "relative score tolerance");

    auto* matrix_cmd = app.add_subcommand("matrix", "measure-by-axiom satisfiability table");
    double matrix_alpha = 0.9;
    matrix_cmd->add_option("--alpha", matrix_alpha, "decay for the decay-based measures");
    matrix_cmd->add_option("--budget", budget, "random instances per cell");
    matrix_cmd->add_option("--seed", seed, "rng seed");
    matrix_cmd->add_option("--json", json_path, "write machine-readable records");
    matrix_cmd->add_option("--witness-dir", witness_dir, "write witness graphs here");

    auto* walk_cmd = app.add_subcommand("walk", "walk probabilities and Monte Carlo checks");
    walk_cmd->add_option("graph", graph_file, "graph file")->required();
    double walk_alpha = 0.0;
    walk_cmd->add_option("--alpha", walk_alpha, "decay factor")->required();
    walk_cmd->add_option("--path", path_spec, "comma-separated node sequence");
    walk_cmd->add_option("--mc", mc_samples, "number of sampled walks");
    walk_cmd->add_option("--seed", seed, "rng seed");

    auto* probe_cmd = app.add_subcommand("probe", "scaling constants from the probe gadgets");
    probe_cmd->add_option("--measure", measure, "measure id")->required();
    add_alpha(probe_cmd);

    auto* chain_cmd = app.add_subcommand("chain", "verify an operation chain script");
    chain_cmd->add_option("script", script, "chain script file")->required();
    chain_cmd->add_option("--tol", tol, "relative score tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (centrality_cmd->parsed())
            return run_centrality(graph_file, measure, alpha, alpha_text, exact);
        if (axioms_cmd->parsed()) {
            if (!random_graphs && graph_file.empty())
                throw CLI::ValidationError("axioms", "need a graph file or --random");
            return run_axioms(graph_file, random_graphs, measure, alpha, restricted, budget, seed,
                              tol);
        }
        if (matrix_cmd->parsed())
            return run_matrix(matrix_alpha, budget, seed, json_path, witness_dir);
        if (walk_cmd->parsed()) return run_walk(graph_file, walk_alpha, path_spec, mc_samples, seed);
        if (probe_cmd->parsed()) return run_probe(measure, alpha);
        if (chain_cmd->parsed()) return run_chain(script, tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include "rankax/chain.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "rankax/graph_io.hpp"

namespace rankax {

ChainScript parse_chain_script(std::istream& in, const std::string& source_name,
                               const std::string& base_dir) {
    ChainScript script;
    std::string line;
    int line_no = 0;
    bool have_measure = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream is(line);
        std::string head;
        if (!(is >> head) || head[0] == '#') continue;
        try {
            if (head == "graph") {
                std::string file;
                if (!(is >> file)) throw std::invalid_argument("graph needs a file name");
                script.graph_file = base_dir.empty()
                                        ? file
                                        : (std::filesystem::path(base_dir) / file).string();
            } else if (head == "measure") {
                std::string name;
                if (!(is >> name)) throw std::invalid_argument("measure needs an id");
                double a;
                std::optional<double> alpha;
                if (is >> a) alpha = a;
                MeasureId id = measure_from_name(name);
                script.measure =
                    MeasureSpec(id, MeasureSpec::measure_needs_alpha(id) ? alpha : std::nullopt);
                have_measure = true;
            } else if (head == "track") {
                std::string v;
                while (is >> v) script.tracked.push_back(v);
            } else if (head == "mode") {
                std::string mode;
                is >> mode;
                if (mode == "redirect-sum") script.redirect_sum = true;
                else if (mode != "invariant")
                    throw std::invalid_argument("mode must be invariant or redirect-sum");
            } else {
                script.ops.push_back(OpInstance::parse(line));
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument(source_name + ":" + std::to_string(line_no) + ": " +
                                        e.what());
        }
    }
    if (script.graph_file.empty())
        throw std::invalid_argument(source_name + ": missing graph directive");
    if (!have_measure) throw std::invalid_argument(source_name + ": missing measure directive");
    return script;
}

ChainScript load_chain_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open chain script: " + path);
    return parse_chain_script(in, path, std::filesystem::path(path).parent_path().string());
}

ChainOutcome run_chain(const ChainScript& script, const MultiGraph& initial, Tolerance tol) {
    ChainOutcome outcome;
    BoundMeasure bound = bind_measure(script.measure);
    MultiGraph g = initial;

    std::map<NodeId, double> predicted;
    {
        CentralityVector start = bound(g);
        for (const auto& v : script.tracked) predicted[v] = start.at(v);
    }

    bool all_hold = true;
    for (std::size_t step = 0; step < script.ops.size(); ++step) {
        const OpInstance& op = script.ops[step];
        AxiomId axiom = axiom_for_op(op.kind);
        AxiomReport report;
        try {
            report = check_axiom(bound, axiom, g, op, tol, false);
        } catch (const std::exception& e) {
            outcome.failed_step = step + 1;
            outcome.failure = op.to_string() + ": " + e.what();
            return outcome;
        }
        outcome.steps.push_back({op, axiom, report.verdict, report.detail});
        if (report.verdict == Verdict::PreconditionUnmet) {
            outcome.failed_step = step + 1;
            outcome.failure = op.to_string() + ": precondition unmet (" + report.detail + ")";
            return outcome;
        }
        if (report.verdict != Verdict::Holds) all_hold = false;

        for (const auto& v : script.tracked) {
            if (op.kind == OpInstance::Kind::DeleteNode && op.a == v) {
                outcome.failed_step = step + 1;
                outcome.failure = "tracked node " + v + " deleted";
                return outcome;
            }
            if (op.kind == OpInstance::Kind::Redirect && op.a == v) {
                outcome.failed_step = step + 1;
                outcome.failure = "tracked node " + v + " redirected away";
                return outcome;
            }
        }
        if (script.redirect_sum && op.kind == OpInstance::Kind::Redirect && predicted.count(op.b))
            predicted[op.b] += bound(g).at(op.a);

        g = op.apply(g);
    }

    CentralityVector final_scores = bound(g);
    bool final_ok = true;
    for (const auto& v : script.tracked) {
        double got = final_scores.at(v);
        double want = predicted.at(v);
        outcome.final_checks.emplace_back(v, got, want);
        if (!tol.equal(got, want)) final_ok = false;
    }
    outcome.ok = all_hold && final_ok;
    return outcome;
}

}  // namespace rankax

#include "rankax/graph_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace rankax {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
    std::ostringstream os;
    os << source << ":" << line << ": " << what;
    throw std::invalid_argument(os.str());
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in, const std::string& source_name) {
    MultiGraph::WeightMap weights;
    MultiGraph::EdgeMap edges;
    RationalMap exact;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& kind = tokens[0];
        if (kind == "node") {
            if (tokens.size() != 3) parse_fail(source_name, line_no, "expected: node <id> <weight>");
            if (weights.count(tokens[1]))
                parse_fail(source_name, line_no, "duplicate node: " + tokens[1]);
            Rational w;
            try {
                w = rational_from_decimal(tokens[2]);
            } catch (const std::exception& e) {
                parse_fail(source_name, line_no, std::string("bad weight: ") + e.what());
            }
            if (w < 0) parse_fail(source_name, line_no, "node weight must be >= 0");
            weights[tokens[1]] = to_double(w);
            exact[tokens[1]] = w;
        } else if (kind == "edge") {
            if (tokens.size() != 3 && tokens.size() != 4)
                parse_fail(source_name, line_no, "expected: edge <src> <dst> [multiplicity]");
            if (!weights.count(tokens[1]))
                parse_fail(source_name, line_no, "edge references undeclared node: " + tokens[1]);
            if (!weights.count(tokens[2]))
                parse_fail(source_name, line_no, "edge references undeclared node: " + tokens[2]);
            std::int64_t mult = 1;
            if (tokens.size() == 4) {
                try {
                    mult = std::stoll(tokens[3]);
                } catch (const std::exception&) {
                    parse_fail(source_name, line_no, "bad multiplicity: " + tokens[3]);
                }
                if (mult < 1) parse_fail(source_name, line_no, "multiplicity must be >= 1");
            }
            edges[{tokens[1], tokens[2]}] += mult;
        } else {
            parse_fail(source_name, line_no, "unknown statement: " + kind);
        }
    }
    return {MultiGraph(std::move(weights), std::move(edges)), std::move(exact)};
}

ParsedGraph parse_graph_text(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is, "<string>");
}

ParsedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_graph(in, path);
}

std::string format_graph(const MultiGraph& g) {
    std::ostringstream os;
    os << std::setprecision(17);
    for (const auto& [v, w] : g.weights()) os << "node " << v << " " << w << "\n";
    for (const auto& [key, mult] : g.edges()) {
        os << "edge " << key.first << " " << key.second;
        if (mult != 1) os << " " << mult;
        os << "\n";
    }
    return os.str();
}

void save_graph_file(const MultiGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write graph file: " + path);
    out << format_graph(g);
}

}  // namespace rankax

#include "rankax/transforms.hpp"

#include <sstream>
#include <vector>

namespace rankax {

MultiGraph delete_node(const MultiGraph& g, const NodeId& u) {
    Incidence inc = g.incidence(u);  // throws NodeNotFoundError for unknown u
    if (!inc.is_isolated) {
        std::ostringstream os;
        os << "delete_node(" << u << "): node is not isolated; incident edges:";
        for (const auto& s : inc.direct_successors) os << " (" << u << "," << s << ")";
        for (const auto& [p, m] : inc.in_multiplicity) os << " (" << p << "," << u << ")x" << m;
        throw PreconditionError(os.str());
    }
    MultiGraph::WeightMap weights = g.weights();
    weights.erase(u);
    return MultiGraph(std::move(weights), g.edges());
}

MultiGraph delete_edge(const MultiGraph& g, const NodeId& u, const NodeId& w) {
    if (!g.has_node(u)) throw NodeNotFoundError(u);
    if (!g.has_node(w)) throw NodeNotFoundError(w);
    if (g.multiplicity(u, w) < 1)
        throw PreconditionError("delete_edge(" + u + ", " + w + "): edge not present");
    MultiGraph::EdgeMap edges = g.edges();
    auto it = edges.find({u, w});
    if (--it->second == 0) edges.erase(it);
    return MultiGraph(g.weights(), std::move(edges));
}

MultiGraph multiply_edges(const MultiGraph& g, const NodeId& u, std::int64_t k) {
    if (!g.has_node(u)) throw NodeNotFoundError(u);
    if (k < 1) throw std::invalid_argument("multiply_edges requires k >= 1");
    MultiGraph::EdgeMap edges = g.edges();
    for (auto& [key, mult] : edges)
        if (key.first == u) mult *= (k + 1);
    return MultiGraph(g.weights(), std::move(edges));
}

MultiGraph swap_edges(const MultiGraph& g, const NodeId& u, const NodeId& u2, const NodeId& w,
                      const NodeId& w2) {
    for (const NodeId* v : {&u, &u2, &w, &w2})
        if (!g.has_node(*v)) throw NodeNotFoundError(*v);
    // Remove the two edge instances one after the other, so naming the same
    // pair twice demands multiplicity >= 2.
    MultiGraph::EdgeMap edges = g.edges();
    for (const auto& key : {EdgeKey{u, u2}, EdgeKey{w, w2}}) {
        auto it = edges.find(key);
        if (it == edges.end() || it->second < 1)
            throw PreconditionError("swap_edges: edge (" + key.first + ", " + key.second +
                                    ") not present");
        if (--it->second == 0) edges.erase(it);
    }
    edges[{u, w2}] += 1;
    edges[{w, u2}] += 1;
    return MultiGraph(g.weights(), std::move(edges));
}

MultiGraph redirect(const MultiGraph& g, const NodeId& u, const NodeId& w) {
    if (!g.are_out_twins(u, w))
        throw PreconditionError("redirect(" + u + " -> " + w + "): nodes are not out-twins");
    MultiGraph::WeightMap weights = g.weights();
    weights[w] += weights[u];
    weights.erase(u);
    MultiGraph::EdgeMap edges;
    for (const auto& [key, mult] : g.edges()) {
        if (key.first == u) continue;                 // u's outgoing edges vanish
        if (key.second == u) edges[{key.first, w}] += mult;  // rewire (v,u) to (v,w)
        else edges[key] += mult;
    }
    return MultiGraph(std::move(weights), std::move(edges));
}

MultiGraph OpInstance::apply(const MultiGraph& g) const {
    switch (kind) {
        case Kind::DeleteNode:
            return delete_node(g, a);
        case Kind::DeleteEdge:
            return delete_edge(g, a, b);
        case Kind::MultiplyEdges:
            return multiply_edges(g, a, k);
        case Kind::SwapEdges:
            return swap_edges(g, a, b, c, d);
        case Kind::Redirect:
            return rankax::redirect(g, a, b);
    }
    throw std::logic_error("bad OpInstance kind");
}

OpInstance OpInstance::parse(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tok;
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        tok.push_back(t);
    }
    auto want = [&](std::size_t n, const char* usage) {
        if (tok.size() != n) throw std::invalid_argument(std::string("expected: ") + usage);
    };
    if (tok.empty()) throw std::invalid_argument("empty operation line");
    if (tok[0] == "delete-node") {
        want(2, "delete-node <u>");
        return del_node(tok[1]);
    }
    if (tok[0] == "delete-edge") {
        want(3, "delete-edge <u> <w>");
        return del_edge(tok[1], tok[2]);
    }
    if (tok[0] == "multiply") {
        want(3, "multiply <u> <k>");
        return multiply(tok[1], std::stoll(tok[2]));
    }
    if (tok[0] == "swap") {
        want(5, "swap <u> <u2> <w> <w2>");
        return swap(tok[1], tok[2], tok[3], tok[4]);
    }
    if (tok[0] == "redirect") {
        want(3, "redirect <u> <w>");
        return redirect(tok[1], tok[2]);
    }
    throw std::invalid_argument("unknown operation: " + tok[0]);
}

std::string OpInstance::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::DeleteNode:
            os << "delete-node " << a;
            break;
        case Kind::DeleteEdge:
            os << "delete-edge " << a << " " << b;
            break;
        case Kind::MultiplyEdges:
            os << "multiply " << a << " " << k;
            break;
        case Kind::SwapEdges:
            os << "swap " << a << " " << b << " " << c << " " << d;
            break;
        case Kind::Redirect:
            os << "redirect " << a << " " << b;
            break;
    }
    return os.str();
}

}  // namespace rankax

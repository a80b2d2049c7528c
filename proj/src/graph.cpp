#include "rankax/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace rankax {

MultiGraph::MultiGraph(WeightMap weights, EdgeMap edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
    for (const auto& [v, w] : weights_) {
        if (w < 0.0 || !std::isfinite(w))
            throw std::invalid_argument("negative or non-finite weight for node " + v);
        total_weight_ += w;
    }
    for (const auto& [key, mult] : edges_) {
        if (mult < 1)
            throw std::invalid_argument("edge multiplicity must be >= 1: (" + key.first + ", " +
                                        key.second + ")");
        if (!has_node(key.first)) throw std::invalid_argument("edge start not a node: " + key.first);
        if (!has_node(key.second)) throw std::invalid_argument("edge end not a node: " + key.second);
        out_degree_[key.first] += mult;
        total_multiplicity_ += mult;
    }
}

void MultiGraph::check_node(const NodeId& v) const {
    if (!has_node(v)) throw NodeNotFoundError(v);
}

double MultiGraph::weight(const NodeId& v) const {
    auto it = weights_.find(v);
    if (it == weights_.end()) throw NodeNotFoundError(v);
    return it->second;
}

std::int64_t MultiGraph::multiplicity(const NodeId& u, const NodeId& v) const {
    auto it = edges_.find({u, v});
    return it == edges_.end() ? 0 : it->second;
}

std::int64_t MultiGraph::out_degree(const NodeId& v) const {
    check_node(v);
    auto it = out_degree_.find(v);
    return it == out_degree_.end() ? 0 : it->second;
}

std::vector<NodeId> MultiGraph::node_list() const {
    std::vector<NodeId> out;
    out.reserve(weights_.size());
    for (const auto& [v, w] : weights_) out.push_back(v);
    return out;
}

Incidence MultiGraph::incidence(const NodeId& v) const {
    check_node(v);
    Incidence inc;
    for (const auto& [key, mult] : edges_) {
        if (key.first == v) {
            inc.out_degree += mult;
            inc.direct_successors.insert(key.second);
        }
        if (key.second == v) {
            inc.in_multiplicity[key.first] += mult;
            inc.direct_predecessors.insert(key.first);
        }
    }
    inc.is_sink = inc.out_degree == 0;
    inc.is_source = inc.in_multiplicity.empty();
    inc.is_isolated = inc.is_sink && inc.is_source;
    return inc;
}

namespace {

// BFS over the index; forward = true follows edges, false follows them backwards.
std::vector<std::int64_t> bfs_distances(const IndexedGraph& ig, std::size_t src, bool forward) {
    std::vector<std::int64_t> dist(ig.size(), -1);
    std::deque<std::size_t> queue;
    dist[src] = 0;
    queue.push_back(src);
    const auto& adj = forward ? ig.out_edges : ig.in_edges;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (const auto& [w, mult] : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace

Reachability MultiGraph::reachability(const NodeId& v) const {
    check_node(v);
    IndexedGraph ig(*this);
    std::size_t src = ig.index.at(v);
    Reachability out;

    // Seed the BFS with the direct neighbors so that v itself appears only
    // when it lies on a cycle.
    for (bool forward : {true, false}) {
        std::vector<bool> seen(ig.size(), false);
        std::deque<std::size_t> queue;
        const auto& adj = forward ? ig.out_edges : ig.in_edges;
        for (const auto& [w, mult] : adj[src]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (const auto& [w, mult] : adj[x]) {
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        auto& dst = forward ? out.successors : out.predecessors;
        for (std::size_t i = 0; i < ig.size(); ++i)
            if (seen[i]) dst.insert(ig.nodes[i]);
    }
    return out;
}

std::optional<std::int64_t> MultiGraph::distance(const NodeId& u, const NodeId& v) const {
    check_node(u);
    check_node(v);
    IndexedGraph ig(*this);
    std::size_t su = ig.index.at(u);
    auto dist = bfs_distances(ig, su, true);
    if (u != v) {
        std::int64_t d = dist[ig.index.at(v)];
        if (d < 0) return std::nullopt;
        return d;
    }
    // Self-distance: shortest cycle through u, i.e. one more than the
    // shortest path from u to any direct predecessor of u.
    std::optional<std::int64_t> best;
    for (const auto& [p, mult] : ig.in_edges[su]) {
        std::int64_t d = (p == su) ? 0 : dist[p];
        if (d < 0) continue;
        if (!best || d + 1 < *best) best = d + 1;
    }
    return best;
}

namespace {

// Layered BFS that counts multiplicity-weighted shortest paths from src.
struct PathCountState {
    std::vector<std::int64_t> dist;
    std::vector<BigCount> sigma;
};

PathCountState count_shortest_paths(const IndexedGraph& ig, std::size_t src) {
    PathCountState st;
    st.dist.assign(ig.size(), -1);
    st.sigma.assign(ig.size(), BigCount(0));
    st.dist[src] = 0;
    st.sigma[src] = 1;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (const auto& [w, mult] : ig.out_edges[v]) {
            if (st.dist[w] < 0) {
                st.dist[w] = st.dist[v] + 1;
                queue.push_back(w);
            }
            if (st.dist[w] == st.dist[v] + 1) st.sigma[w] += st.sigma[v] * mult;
        }
    }
    return st;
}

}  // namespace

PathCounts MultiGraph::shortest_path_counts(const NodeId& s, const NodeId& t,
                                            const std::optional<NodeId>& via) const {
    check_node(s);
    check_node(t);
    if (s == t) throw std::invalid_argument("shortest_path_counts requires s != t");
    if (via) {
        check_node(*via);
        if (*via == s || *via == t)
            throw std::invalid_argument("via must differ from both endpoints");
    }
    IndexedGraph ig(*this);
    auto from_s = count_shortest_paths(ig, ig.index.at(s));
    std::size_t ti = ig.index.at(t);

    PathCounts out;
    if (from_s.dist[ti] < 0) return out;  // unreachable: total 0
    out.total = from_s.sigma[ti];
    if (via) {
        std::size_t mi = ig.index.at(*via);
        if (from_s.dist[mi] >= 0) {
            auto from_via = count_shortest_paths(ig, mi);
            if (from_via.dist[ti] >= 0 &&
                from_s.dist[mi] + from_via.dist[ti] == from_s.dist[ti])
                out.through_via = from_s.sigma[mi] * from_via.sigma[ti];
        }
    }
    return out;
}

bool MultiGraph::are_out_twins(const NodeId& u, const NodeId& w) const {
    check_node(u);
    check_node(w);
    if (u == w) throw std::invalid_argument("out-twin test requires two distinct nodes");
    for (const auto& [v, weight] : weights_)
        if (multiplicity(u, v) != multiplicity(w, v)) return false;
    return true;
}

bool MultiGraph::is_strongly_connected() const {
    if (node_count() == 0) throw std::invalid_argument("empty graph");
    if (node_count() == 1) return multiplicity(weights_.begin()->first, weights_.begin()->first) > 0;
    IndexedGraph ig(*this);
    for (bool forward : {true, false}) {
        auto dist = bfs_distances(ig, 0, forward);
        for (std::int64_t d : dist)
            if (d < 0) return false;
    }
    return true;
}

bool MultiGraph::is_acyclic() const {
    IndexedGraph ig(*this);
    std::vector<std::int64_t> pending(ig.size(), 0);
    for (std::size_t v = 0; v < ig.size(); ++v)
        for (const auto& [w, mult] : ig.in_edges[v]) pending[v] += 1;
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < ig.size(); ++v)
        if (pending[v] == 0) queue.push_back(v);
    std::size_t removed = 0;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        ++removed;
        std::set<std::size_t> succ;
        for (const auto& [w, mult] : ig.out_edges[v]) succ.insert(w);
        for (std::size_t w : succ)
            if (--pending[w] == 0) queue.push_back(w);
    }
    return removed == ig.size();
}

namespace {

// Kosaraju over the index: finish order on the forward edges, components
// collected along the reversed edges.
std::vector<std::vector<std::size_t>> components_of(const IndexedGraph& ig) {
    const std::size_t n = ig.size();
    std::vector<std::size_t> finish;
    finish.reserve(n);
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
        seen[s] = true;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < ig.out_edges[v].size()) {
                std::size_t w = ig.out_edges[v][next++].first;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.emplace_back(w, 0);
                }
            } else {
                finish.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<std::vector<std::size_t>> comps;
    std::vector<bool> assigned(n, false);
    for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
        if (assigned[*it]) continue;
        comps.emplace_back();
        std::deque<std::size_t> queue{*it};
        assigned[*it] = true;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            comps.back().push_back(v);
            for (const auto& [u, mult] : ig.in_edges[v])
                if (!assigned[u]) {
                    assigned[u] = true;
                    queue.push_back(u);
                }
        }
    }
    return comps;
}

// Dominant eigenvalue of the irreducible block by power iteration on A + I;
// the shift makes the block primitive, so convergence is geometric even for
// periodic cycles.
double block_radius(const IndexedGraph& ig, const std::vector<std::size_t>& comp, double tol) {
    std::vector<std::int64_t> local(ig.size(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<std::int64_t>(i);
    const std::size_t n = comp.size();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    double prev_rayleigh = 0.0;
    double residual = 0.0;
    constexpr int kMaxIter = 10000;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = x[i];
            for (const auto& [u, mult] : ig.in_edges[comp[i]])
                if (local[u] >= 0) acc += static_cast<double>(mult) * x[local[u]];
            y[i] = acc;
        }
        double num = 0.0, den = 0.0, norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += x[i] * y[i];
            den += x[i] * x[i];
            norm += y[i] * y[i];
        }
        double rayleigh = num / den;
        norm = std::sqrt(norm);
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            residual = std::max(residual, std::abs(y[i] - rayleigh * x[i]));
            x[i] = y[i] / norm;
        }
        if (iter > 0 && std::abs(rayleigh - prev_rayleigh) < tol)
            return std::max(rayleigh - 1.0, 0.0);
        prev_rayleigh = rayleigh;
    }
    throw NumericError("spectral radius power iteration did not converge", residual);
}

}  // namespace

double MultiGraph::spectral_radius(double tol) const {
    if (node_count() == 0) throw std::invalid_argument("empty graph");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");

    // The adjacency spectrum is block-triangular over the condensation, so
    // the radius is the maximum over strongly connected components. Iterating
    // per component also avoids the defective case of two equal-radius
    // components feeding each other, where plain power iteration stalls.
    IndexedGraph ig(*this);
    double best = 0.0;
    for (const auto& comp : components_of(ig)) {
        if (comp.size() == 1) {
            // contributes its self-loop multiplicity (0 without a loop)
            const NodeId& v = ig.nodes[comp[0]];
            best = std::max(best, static_cast<double>(multiplicity(v, v)));
            continue;
        }
        best = std::max(best, block_radius(ig, comp, tol));
    }
    return best;
}

MultiGraph disjoint_union(const MultiGraph& g1, const MultiGraph& g2) {
    MultiGraph::WeightMap weights = g1.weights();
    for (const auto& [v, w] : g2.weights()) {
        if (weights.count(v))
            throw std::invalid_argument("disjoint union requires disjoint node sets: " + v);
        weights[v] = w;
    }
    MultiGraph::EdgeMap edges = g1.edges();
    for (const auto& [key, mult] : g2.edges()) edges[key] = mult;
    return MultiGraph(std::move(weights), std::move(edges));
}

MultiGraph make_graph(const std::vector<std::pair<NodeId, double>>& nodes,
                      const std::vector<std::tuple<NodeId, NodeId, std::int64_t>>& edges) {
    MultiGraph::WeightMap weights;
    for (const auto& [v, w] : nodes) {
        if (weights.count(v)) throw std::invalid_argument("duplicate node id: " + v);
        weights[v] = w;
    }
    MultiGraph::EdgeMap table;
    for (const auto& [u, v, m] : edges) table[{u, v}] += m;
    return MultiGraph(std::move(weights), std::move(table));
}

bool GraphClass::contains(const MultiGraph& g) const {
    if (g.node_count() == 0) return false;
    switch (kind) {
        case Kind::All:
            return true;
        case Kind::StronglyConnected:
            return g.is_strongly_connected();
        case Kind::KatzAdmissible:
            return g.spectral_radius() < 1.0 / alpha;
        case Kind::Acyclic:
            return g.is_acyclic();
    }
    return false;
}

std::string GraphClass::name() const {
    switch (kind) {
        case Kind::All:
            return "all";
        case Kind::StronglyConnected:
            return "strongly-connected";
        case Kind::KatzAdmissible: {
            std::ostringstream os;
            os << "katz-admissible(" << alpha << ")";
            return os.str();
        }
        case Kind::Acyclic:
            return "acyclic";
    }
    return "?";
}

IndexedGraph::IndexedGraph(const MultiGraph& g) {
    nodes = g.node_list();
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
    weight.resize(nodes.size());
    out_deg.assign(nodes.size(), 0);
    in_edges.resize(nodes.size());
    out_edges.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) weight[i] = g.weights().at(nodes[i]);
    for (const auto& [key, mult] : g.edges()) {
        std::size_t u = index.at(key.first), v = index.at(key.second);
        out_deg[u] += mult;
        out_edges[u].emplace_back(v, mult);
        in_edges[v].emplace_back(u, mult);
    }
}

}  // namespace rankax

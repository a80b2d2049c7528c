#ifndef RANKAX_TESTS_ORACLES_HPP
#define RANKAX_TESTS_ORACLES_HPP

// Brute-force reference implementations kept independent of the library's
// algorithms: plain edge-list BFS, Kosaraju connectivity, exhaustive path
// enumeration. Slow on purpose.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rankax/graph.hpp"
#include "rankax/rational.hpp"

namespace oracles {

using rankax::MultiGraph;
using rankax::NodeId;
using rankax::Rational;

// BFS distance over the raw edge table; -1 when unreachable. dist(u,u) is
// reported as 0 here (the caller handles the shortest-cycle reading).
inline std::map<NodeId, std::int64_t> bfs_from(const MultiGraph& g, const NodeId& src) {
    std::map<NodeId, std::int64_t> dist;
    dist[src] = 0;
    std::deque<NodeId> queue{src};
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (const auto& [key, mult] : g.edges()) {
            if (key.first != v || dist.count(key.second)) continue;
            dist[key.second] = dist[v] + 1;
            queue.push_back(key.second);
        }
    }
    return dist;
}

// Kosaraju-style check: one forward and one backward sweep from any node.
inline bool strongly_connected(const MultiGraph& g) {
    if (g.node_count() == 0) return false;
    NodeId start = g.node_list().front();
    if (g.node_count() == 1) return g.multiplicity(start, start) > 0;
    auto fwd = bfs_from(g, start);
    if (fwd.size() != g.node_count()) return false;
    std::set<NodeId> seen{start};
    std::deque<NodeId> queue{start};
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (const auto& [key, mult] : g.edges()) {
            if (key.second != v || seen.count(key.first)) continue;
            seen.insert(key.first);
            queue.push_back(key.first);
        }
    }
    return seen.size() == g.node_count();
}

// All node sequences of shortest length from s to t, with products of edge
// multiplicities, found by exhaustive depth-limited enumeration.
inline void enumerate_paths(const MultiGraph& g, const NodeId& cur, const NodeId& t,
                            std::vector<NodeId>& prefix, std::size_t limit,
                            std::vector<std::vector<NodeId>>& out) {
    if (prefix.size() > limit) return;
    if (cur == t && prefix.size() > 1) {
        out.push_back(prefix);
        return;
    }
    for (const auto& [key, mult] : g.edges()) {
        if (key.first != cur) continue;
        prefix.push_back(key.second);
        enumerate_paths(g, key.second, t, prefix, limit, out);
        prefix.pop_back();
    }
}

struct PathCountOracle {
    rankax::BigCount total = 0;
    rankax::BigCount through = 0;
};

inline PathCountOracle count_shortest_paths(const MultiGraph& g, const NodeId& s, const NodeId& t,
                                            const NodeId* via) {
    auto dist = bfs_from(g, s);
    PathCountOracle out;
    auto it = dist.find(t);
    if (it == dist.end() || (s == t)) return out;
    std::vector<std::vector<NodeId>> paths;
    std::vector<NodeId> prefix{s};
    enumerate_paths(g, s, t, prefix, static_cast<std::size_t>(it->second) + 1, paths);
    for (const auto& p : paths) {
        if (p.size() != static_cast<std::size_t>(it->second) + 1) continue;
        rankax::BigCount weight = 1;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) weight *= g.multiplicity(p[i], p[i + 1]);
        out.total += weight;
        if (via && std::find(p.begin() + 1, p.end() - 1, *via) != p.end() - 1)
            out.through += weight;
    }
    return out;
}

// Exact PageRank by rational Gauss-Jordan over the raw edge table, written
// without the library's solver or index structures.
inline std::map<NodeId, Rational> exact_pagerank(const MultiGraph& g,
                                                 const std::map<NodeId, Rational>& weights,
                                                 const Rational& alpha) {
    std::vector<NodeId> nodes = g.node_list();
    std::size_t n = nodes.size();
    std::map<NodeId, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[nodes[i]] = i;

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
    std::vector<Rational> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1;
        rhs[i] = weights.at(nodes[i]);
    }
    for (const auto& [key, mult] : g.edges()) {
        std::size_t u = idx[key.first], v = idx[key.second];
        a[v][u] -= alpha * Rational(mult, g.out_degree(key.first));
    }
    // Gauss-Jordan, pivot on the first nonzero entry.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        Rational lead = a[col][col];
        for (std::size_t c = 0; c < n; ++c) a[col][c] /= lead;
        rhs[col] /= lead;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::map<NodeId, Rational> out;
    for (std::size_t i = 0; i < n; ++i) out[nodes[i]] = rhs[i];
    return out;
}

}  // namespace oracles

#endif

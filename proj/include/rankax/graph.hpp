#ifndef RANKAX_GRAPH_HPP
#define RANKAX_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankax/errors.hpp"

namespace rankax {

using NodeId = std::string;
using EdgeKey = std::pair<NodeId, NodeId>;

// Shortest-path counts multiply edge multiplicities along a path and can grow
// combinatorially, so they are kept in arbitrary precision.
using BigCount = boost::multiprecision::cpp_int;

struct Incidence {
    std::int64_t out_degree = 0;
    std::map<NodeId, std::int64_t> in_multiplicity;  // per direct predecessor
    std::set<NodeId> direct_successors;
    std::set<NodeId> direct_predecessors;
    bool is_sink = false;
    bool is_source = false;
    bool is_isolated = false;
};

struct Reachability {
    std::set<NodeId> successors;    // reachable by a path of length >= 1
    std::set<NodeId> predecessors;  // a node on a cycle is its own successor
};

struct PathCounts {
    BigCount total = 0;        // shortest s->t paths, parallel edges distinct
    BigCount through_via = 0;  // those visiting `via` as an interior node
};

// Node-weighted directed multigraph. Immutable after construction; all
// queries are const and safe to run concurrently. Edge multiplicities are
// stored as a table keyed by (src, dst), never as repeated entries.
class MultiGraph {
public:
    using WeightMap = std::map<NodeId, double>;
    using EdgeMap = std::map<EdgeKey, std::int64_t>;

    MultiGraph() = default;  // the empty graph; valid only as an intermediate
    MultiGraph(WeightMap weights, EdgeMap edges);

    const WeightMap& weights() const { return weights_; }
    const EdgeMap& edges() const { return edges_; }

    std::size_t node_count() const { return weights_.size(); }
    std::int64_t edge_count() const { return total_multiplicity_; }
    double total_weight() const { return total_weight_; }

    bool has_node(const NodeId& v) const { return weights_.count(v) != 0; }
    double weight(const NodeId& v) const;
    std::int64_t multiplicity(const NodeId& u, const NodeId& v) const;
    std::int64_t out_degree(const NodeId& v) const;

    std::vector<NodeId> node_list() const;  // sorted, deterministic

    Incidence incidence(const NodeId& v) const;
    Reachability reachability(const NodeId& v) const;

    // Shortest-path length u -> v; nullopt when unreachable. distance(u, u)
    // is the length of the shortest cycle through u (paths have > 1 node,
    // so a reachable self-distance is never 0).
    std::optional<std::int64_t> distance(const NodeId& u, const NodeId& v) const;

    PathCounts shortest_path_counts(const NodeId& s, const NodeId& t,
                                    const std::optional<NodeId>& via = std::nullopt) const;

    // Equal outgoing multiplicity vectors: #(u,x) == #(w,x) for every x.
    bool are_out_twins(const NodeId& u, const NodeId& w) const;

    // Every node reaches every node by a path of length >= 1. A single node
    // therefore needs a self-loop to qualify, so no strongly connected graph
    // has an isolated node.
    bool is_strongly_connected() const;

    bool is_acyclic() const;

    // Largest eigenvalue magnitude of the multiplicity-weighted adjacency
    // matrix. Exact 0 for acyclic graphs; otherwise shifted power iteration.
    double spectral_radius(double tol = 1e-10) const;

private:
    void check_node(const NodeId& v) const;

    WeightMap weights_;
    EdgeMap edges_;
    std::map<NodeId, std::int64_t> out_degree_;
    std::int64_t total_multiplicity_ = 0;
    double total_weight_ = 0.0;
};

MultiGraph disjoint_union(const MultiGraph& g1, const MultiGraph& g2);

// Convenience constructor used throughout the tests and fixtures.
MultiGraph make_graph(const std::vector<std::pair<NodeId, double>>& nodes,
                      const std::vector<std::tuple<NodeId, NodeId, std::int64_t>>& edges);

// Admissible graph class of a centrality measure.
struct GraphClass {
    enum class Kind { All, StronglyConnected, KatzAdmissible, Acyclic };

    Kind kind = Kind::All;
    double alpha = 0.0;  // decay bound for KatzAdmissible: lambda(G) < 1/alpha

    static GraphClass all() { return {Kind::All, 0.0}; }
    static GraphClass strongly_connected() { return {Kind::StronglyConnected, 0.0}; }
    static GraphClass katz_admissible(double a) { return {Kind::KatzAdmissible, a}; }
    static GraphClass acyclic() { return {Kind::Acyclic, 0.0}; }

    bool is_all() const { return kind == Kind::All; }
    bool contains(const MultiGraph& g) const;
    std::string name() const;
};

// Dense index of a graph: node order is the sorted id order. Built once per
// numeric computation so the solvers work on integer indices.
struct IndexedGraph {
    std::vector<NodeId> nodes;
    std::unordered_map<NodeId, std::size_t> index;
    std::vector<double> weight;
    std::vector<std::int64_t> out_deg;
    // per node: (neighbor index, multiplicity)
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> in_edges;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> out_edges;

    explicit IndexedGraph(const MultiGraph& g);
    std::size_t size() const { return nodes.size(); }
};

}  // namespace rankax

#endif

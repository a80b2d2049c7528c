#ifndef RANKAX_TRANSFORMS_HPP
#define RANKAX_TRANSFORMS_HPP

#include <cstdint>
#include <string>

#include "rankax/graph.hpp"

namespace rankax {

// The five graph operations the invariance axioms are named after. All are
// pure: the input graph is unchanged and the result is freshly built.

// Removes an isolated node; everything else is untouched.
MultiGraph delete_node(const MultiGraph& g, const NodeId& u);

// Decrements the multiplicity of (u, w) by exactly one.
MultiGraph delete_edge(const MultiGraph& g, const NodeId& u, const NodeId& w);

// Adds k further copies of every outgoing edge of u, so each out-multiplicity
// becomes (k+1) times the original. k >= 1; a sink stays a sink.
MultiGraph multiply_edges(const MultiGraph& g, const NodeId& u, std::int64_t k);

// Exchanges the ends of edges (u, u2) and (w, w2), yielding (u, w2) and
// (w, u2). Only edge existence is validated here; the equal-centrality and
// equal-out-degree conditions belong to the axiom, not the raw transform.
MultiGraph swap_edges(const MultiGraph& g, const NodeId& u, const NodeId& u2, const NodeId& w,
                      const NodeId& w2);

// Redirects u into its out-twin w: u disappears, its incoming edges from
// v != u are rewired to w, and w absorbs u's weight. u's self-loops and
// outgoing edges are dropped.
MultiGraph redirect(const MultiGraph& g, const NodeId& u, const NodeId& w);

// One concrete operation instance, as used by the axiom checker and the
// chain scripts.
struct OpInstance {
    enum class Kind { DeleteNode, DeleteEdge, MultiplyEdges, SwapEdges, Redirect };

    Kind kind;
    NodeId a, b, c, d;     // node arguments, meaning depends on kind
    std::int64_t k = 1;    // MultiplyEdges only

    static OpInstance del_node(NodeId u) { return {Kind::DeleteNode, std::move(u), {}, {}, {}, 0}; }
    static OpInstance del_edge(NodeId u, NodeId w) {
        return {Kind::DeleteEdge, std::move(u), std::move(w), {}, {}, 0};
    }
    static OpInstance multiply(NodeId u, std::int64_t k) {
        return {Kind::MultiplyEdges, std::move(u), {}, {}, {}, k};
    }
    static OpInstance swap(NodeId u, NodeId u2, NodeId w, NodeId w2) {
        return {Kind::SwapEdges, std::move(u), std::move(u2), std::move(w), std::move(w2), 0};
    }
    static OpInstance redirect(NodeId u, NodeId w) {
        return {Kind::Redirect, std::move(u), std::move(w), {}, {}, 0};
    }

    MultiGraph apply(const MultiGraph& g) const;

    // Script line format:
    //   delete-node <u> | delete-edge <u> <w> | multiply <u> <k>
    //   | swap <u> <u2> <w> <w2> | redirect <u> <w>
    static OpInstance parse(const std::string& line);
    std::string to_string() const;
};

}  // namespace rankax

#endif

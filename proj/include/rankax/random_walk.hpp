#ifndef RANKAX_RANDOM_WALK_HPP
#define RANKAX_RANDOM_WALK_HPP

#include <cstdint>
#include <vector>

#include "rankax/centrality.hpp"
#include "rankax/graph.hpp"
#include "rankax/rng.hpp"

namespace rankax {

// A sampled walk: the start node is drawn proportionally to the node weights;
// each step continues with probability a (never from a sink) along an
// out-edge chosen proportionally to multiplicity.
struct WalkPath {
    std::vector<NodeId> nodes;
    std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Probability that the walk equals exactly this node sequence:
//   b(v0)/b(G) * a^T * prod mult(v_t, v_t+1)/outdeg(v_t),
// times (1 - a) unless the final node is a sink. Non-paths have probability 0.
double path_probability(const MultiGraph& g, double alpha, const WalkPath& path);

// Deterministic for a fixed seed: the generator is a fully specified
// SplitMix64 stream, so identical seeds give identical walks everywhere.
WalkPath sample_walk(const MultiGraph& g, double alpha, std::uint64_t seed);
WalkPath sample_walk(const MultiGraph& g, double alpha, SplitMix64& rng);

struct McEstimate {
    CentralityVector mean;    // (average visits per walk) * b(G); estimates PageRank
    CentralityVector stderr_; // standard error of the mean, same scaling
    std::int64_t samples = 0;
};

McEstimate expected_visits_mc(const MultiGraph& g, double alpha, std::int64_t samples,
                              std::uint64_t seed);

// Evaluates the expected-visits series sum_t P(walk at v at step t) * b(G) by
// dynamic programming over step distributions, truncated once the remaining
// mass bound b(G) * m_T * a/(1-a) drops below `cutoff`. Agrees with
// pagerank_direct to solver precision.
CentralityVector expected_visits_dp(const MultiGraph& g, double alpha, double cutoff = 1e-14);

}  // namespace rankax

#endif

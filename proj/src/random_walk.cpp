#include "rankax/random_walk.hpp"

#include <cmath>

namespace rankax {

namespace {

void check_decay(double alpha) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::invalid_argument("walk decay factor must lie in [0,1)");
}

}  // namespace

double path_probability(const MultiGraph& g, double alpha, const WalkPath& path) {
    check_decay(alpha);
    if (path.nodes.empty()) throw std::invalid_argument("empty walk path");
    for (const auto& v : path.nodes)
        if (!g.has_node(v)) throw NodeNotFoundError(v);
    if (g.total_weight() <= 0.0)
        throw std::invalid_argument("walk needs positive total weight");

    double p = g.weight(path.nodes.front()) / g.total_weight();
    for (std::size_t t = 0; t + 1 < path.nodes.size(); ++t) {
        std::int64_t mult = g.multiplicity(path.nodes[t], path.nodes[t + 1]);
        if (mult == 0) return 0.0;  // not a path
        p *= alpha * static_cast<double>(mult) / static_cast<double>(g.out_degree(path.nodes[t]));
    }
    if (g.out_degree(path.nodes.back()) > 0) p *= 1.0 - alpha;
    return p;
}

WalkPath sample_walk(const MultiGraph& g, double alpha, SplitMix64& rng) {
    check_decay(alpha);
    if (g.total_weight() <= 0.0)
        throw std::invalid_argument("walk needs positive total weight");
    IndexedGraph ig(g);

    std::size_t current = rng.next_weighted(ig.weight);
    WalkPath path;
    path.nodes.push_back(ig.nodes[current]);
    while (ig.out_deg[current] > 0 && rng.next_double() < alpha) {
        // out-edge proportional to multiplicity
        std::int64_t pick = static_cast<std::int64_t>(
            rng.next_in(0, static_cast<std::uint64_t>(ig.out_deg[current]) - 1));
        std::size_t next = current;
        for (const auto& [w, mult] : ig.out_edges[current]) {
            if (pick < mult) {
                next = w;
                break;
            }
            pick -= mult;
        }
        current = next;
        path.nodes.push_back(ig.nodes[current]);
    }
    return path;
}

WalkPath sample_walk(const MultiGraph& g, double alpha, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return sample_walk(g, alpha, rng);
}

McEstimate expected_visits_mc(const MultiGraph& g, double alpha, std::int64_t samples,
                              std::uint64_t seed) {
    check_decay(alpha);
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (g.total_weight() <= 0.0)
        throw std::invalid_argument("walk needs positive total weight");
    IndexedGraph ig(g);
    const std::size_t n = ig.size();

    std::vector<double> sum(n, 0.0), sum_sq(n, 0.0);
    std::vector<std::int64_t> visits(n, 0);
    SplitMix64 rng(seed);
    for (std::int64_t s = 0; s < samples; ++s) {
        std::fill(visits.begin(), visits.end(), 0);
        std::size_t current = rng.next_weighted(ig.weight);
        ++visits[current];
        while (ig.out_deg[current] > 0 && rng.next_double() < alpha) {
            std::int64_t pick = static_cast<std::int64_t>(
                rng.next_in(0, static_cast<std::uint64_t>(ig.out_deg[current]) - 1));
            for (const auto& [w, mult] : ig.out_edges[current]) {
                if (pick < mult) {
                    current = w;
                    break;
                }
                pick -= mult;
            }
            ++visits[current];
        }
        for (std::size_t v = 0; v < n; ++v) {
            double c = static_cast<double>(visits[v]);
            sum[v] += c;
            sum_sq[v] += c * c;
        }
    }

    McEstimate out;
    out.samples = samples;
    double scale = g.total_weight();
    double ns = static_cast<double>(samples);
    for (std::size_t v = 0; v < n; ++v) {
        double mean = sum[v] / ns;
        double var = samples > 1 ? std::max(0.0, (sum_sq[v] - ns * mean * mean) / (ns - 1.0)) : 0.0;
        out.mean.scores[ig.nodes[v]] = scale * mean;
        out.stderr_.scores[ig.nodes[v]] = scale * std::sqrt(var / ns);
    }
    return out;
}

CentralityVector expected_visits_dp(const MultiGraph& g, double alpha, double cutoff) {
    check_decay(alpha);
    if (cutoff <= 0.0) throw std::invalid_argument("cutoff must be positive");
    if (g.total_weight() <= 0.0)
        throw std::invalid_argument("walk needs positive total weight");
    IndexedGraph ig(g);
    const std::size_t n = ig.size();

    std::vector<double> p(n), next(n), acc(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) p[v] = ig.weight[v] / g.total_weight();
    constexpr int kMaxSteps = 1000000;
    for (int t = 0; t < kMaxSteps; ++t) {
        double mass = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            acc[v] += p[v];
            mass += p[v];
        }
        // Everything still to come is bounded by the geometric tail.
        if (alpha == 0.0 || g.total_weight() * mass * alpha / (1.0 - alpha) < cutoff) break;
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            if (p[v] == 0.0) continue;
            double share = alpha * p[v] / static_cast<double>(std::max<std::int64_t>(ig.out_deg[v], 1));
            for (const auto& [w, mult] : ig.out_edges[v]) next[w] += share * static_cast<double>(mult);
        }
        p.swap(next);
    }
    CentralityVector out;
    for (std::size_t v = 0; v < n; ++v) out.scores[ig.nodes[v]] = acc[v] * g.total_weight();
    return out;
}

}  // namespace rankax

#include "rankax/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "rankax/linalg.hpp"

namespace rankax {

namespace {

// ---------------------------------------------------------------------------
// Scalar-generic kernels. Instantiated for double (the normal path) and for
// Rational (the exact mode). Adjacency data is integral either way.
// ---------------------------------------------------------------------------

template <typename T>
T ratio(std::int64_t num, std::int64_t den) {
    return T(num) / T(den);
}

template <>
Rational ratio<Rational>(std::int64_t num, std::int64_t den) {
    return Rational(num, den);
}

template <typename T>
T big_ratio(const BigCount& num, const BigCount& den) {
    return Rational(num, den).convert_to<T>();
}

template <>
Rational big_ratio<Rational>(const BigCount& num, const BigCount& den) {
    return Rational(num, den);
}

template <typename T>
T pow_int(const T& base, std::int64_t e) {
    T acc(1);
    for (std::int64_t i = 0; i < e; ++i) acc *= base;
    return acc;
}

// Solves x_v = sum over in-edges (u,v) of coeff(u) * mult * x_u + rhs_v.
// All feedback measures here are instances of this linear system with a
// different per-source coefficient.
template <typename T, typename CoeffFn>
std::vector<T> solve_feedback(const IndexedGraph& ig, const std::vector<T>& rhs, CoeffFn coeff) {
    const std::size_t n = ig.size();
    Matrix<T> a(n, std::vector<T>(n, T(0)));
    for (std::size_t v = 0; v < n; ++v) {
        a[v][v] = T(1);
        for (const auto& [u, mult] : ig.in_edges[v]) a[v][u] -= coeff(u) * T(mult);
    }
    return solve_dense(std::move(a), rhs);
}

template <typename T>
std::vector<T> pagerank_kernel(const IndexedGraph& ig, const std::vector<T>& weights, T alpha) {
    return solve_feedback(ig, weights, [&](std::size_t u) {
        return ig.out_deg[u] == 0 ? T(0) : alpha * ratio<T>(1, ig.out_deg[u]);
    });
}

template <typename T>
std::vector<T> katz_kernel(const IndexedGraph& ig, const std::vector<T>& weights, T alpha) {
    return solve_feedback(ig, weights, [&](std::size_t) { return alpha; });
}

template <typename T>
std::vector<T> bonacich_kernel(const IndexedGraph& ig, const std::vector<T>& weights, T alpha) {
    // BK_v = sum (a * BK_u + b(u)) over in-edges: same matrix as Katz with
    // rhs_v = sum of predecessor weights.
    std::vector<T> rhs(ig.size(), T(0));
    for (std::size_t v = 0; v < ig.size(); ++v)
        for (const auto& [u, mult] : ig.in_edges[v]) rhs[v] += T(mult) * weights[u];
    return solve_feedback(ig, rhs, [&](std::size_t) { return alpha; });
}

template <typename T>
std::vector<T> damped_outdeg_kernel(const IndexedGraph& ig, const std::vector<T>& weights,
                                    T alpha) {
    return solve_feedback(ig, weights,
                          [&](std::size_t u) { return alpha * ratio<T>(1, ig.out_deg[u] + 1); });
}

template <typename T>
std::vector<T> beta_kernel(const IndexedGraph& ig) {
    std::vector<T> out(ig.size(), T(0));
    for (std::size_t v = 0; v < ig.size(); ++v)
        for (const auto& [u, mult] : ig.in_edges[v]) out[v] += ratio<T>(mult, ig.out_deg[u]);
    return out;
}

template <typename T>
std::vector<T> weighted_beta_kernel(const IndexedGraph& ig, const std::vector<T>& weights) {
    std::vector<T> out(weights);
    for (std::size_t v = 0; v < ig.size(); ++v)
        for (const auto& [u, mult] : ig.in_edges[v])
            out[v] += ratio<T>(mult, ig.out_deg[u]) * weights[u];
    return out;
}

template <typename T>
std::vector<T> degree_kernel(const IndexedGraph& ig) {
    std::vector<T> out(ig.size(), T(0));
    for (std::size_t v = 0; v < ig.size(); ++v)
        for (const auto& [u, mult] : ig.in_edges[v]) out[v] += T(mult);
    return out;
}

// Stationary equations KP = P^T KP with the normalization sum = 1 written
// into the first row; for a strongly connected graph I - P^T has rank n-1,
// so the replaced system is nonsingular.
template <typename T>
std::vector<T> prestige_kernel(const IndexedGraph& ig) {
    const std::size_t n = ig.size();
    Matrix<T> a(n, std::vector<T>(n, T(0)));
    std::vector<T> rhs(n, T(0));
    for (std::size_t v = 0; v < n; ++v) {
        a[v][v] = T(1);
        for (const auto& [u, mult] : ig.in_edges[v]) a[v][u] -= ratio<T>(mult, ig.out_deg[u]);
    }
    for (std::size_t c = 0; c < n; ++c) a[0][c] = T(1);
    rhs[0] = T(1);
    return solve_dense(std::move(a), std::move(rhs));
}

// Distances into v == forward BFS over reversed edges.
std::vector<std::int64_t> distances_into(const IndexedGraph& ig, std::size_t target) {
    std::vector<std::int64_t> dist(ig.size(), -1);
    std::deque<std::size_t> queue{target};
    dist[target] = 0;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (const auto& [u, mult] : ig.in_edges[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

template <typename T>
std::vector<T> closeness_kernel(const IndexedGraph& ig) {
    std::vector<T> out(ig.size(), T(0));
    for (std::size_t v = 0; v < ig.size(); ++v) {
        auto dist = distances_into(ig, v);
        std::int64_t sum = 0;
        for (std::size_t u = 0; u < ig.size(); ++u)
            if (u != v) sum += dist[u];
        out[v] = ratio<T>(1, sum);
    }
    return out;
}

template <typename T>
std::vector<T> decay_kernel(const IndexedGraph& ig, T alpha) {
    std::vector<T> out(ig.size(), T(0));
    for (std::size_t v = 0; v < ig.size(); ++v) {
        auto dist = distances_into(ig, v);
        for (std::size_t u = 0; u < ig.size(); ++u)
            if (u != v && dist[u] > 0) out[v] += pow_int(alpha, dist[u]);
    }
    return out;
}

// Brandes accumulation generalized to multiplicities: sigma counts parallel
// edges as distinct paths, and the pair dependency of v through edge (v,w)
// carries the factor sigma_v * mult / sigma_w.
template <typename T>
std::vector<T> betweenness_kernel(const IndexedGraph& ig) {
    const std::size_t n = ig.size();
    std::vector<T> acc(n, T(0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::int64_t> dist(n, -1);
        std::vector<BigCount> sigma(n, BigCount(0));
        std::vector<std::size_t> order;
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        sigma[s] = 1;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (const auto& [w, mult] : ig.out_edges[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] += sigma[v] * mult;
            }
        }
        std::vector<T> delta(n, T(0));
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            std::size_t v = *it;
            for (const auto& [w, mult] : ig.out_edges[v]) {
                if (dist[w] != dist[v] + 1) continue;
                T frac = big_ratio<T>(sigma[v] * mult, sigma[w]);
                delta[v] += frac * (T(1) + delta[w]);
            }
            if (v != s) acc[v] += delta[v];
        }
    }
    return acc;
}

template <typename T>
std::vector<T> adaptive_decay_kernel(const IndexedGraph& ig, const std::vector<T>& weights) {
    T total(0);
    for (const T& w : weights) total += w;
    T alpha = T(1) / (T(2) + total);
    return pagerank_kernel(ig, weights, alpha);
}

template <typename T>
std::vector<T> sink_doubled_kernel(const IndexedGraph& ig, const std::vector<T>& weights,
                                   T alpha) {
    auto pr = pagerank_kernel(ig, weights, alpha);
    for (std::size_t v = 0; v < ig.size(); ++v)
        if (ig.out_deg[v] == 0) pr[v] = T(2) * pr[v] - weights[v];
    return pr;
}

// ---------------------------------------------------------------------------
// double-facing helpers
// ---------------------------------------------------------------------------

CentralityVector to_vector(const IndexedGraph& ig, const std::vector<double>& values) {
    CentralityVector out;
    for (std::size_t i = 0; i < ig.size(); ++i) out.scores[ig.nodes[i]] = values[i];
    return out;
}

void require_nonempty(const MultiGraph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("empty graph");
}

void require_strongly_connected(const MultiGraph& g, const char* measure) {
    require_nonempty(g);
    if (!g.is_strongly_connected())
        throw ClassViolationError(std::string(measure) + " is defined on strongly connected graphs");
}

void require_katz_admissible(const MultiGraph& g, double alpha, const char* measure) {
    require_nonempty(g);
    double lambda = g.spectral_radius();
    if (!(lambda < 1.0 / alpha)) {
        std::ostringstream os;
        os << measure << " needs spectral radius < " << 1.0 / alpha << ", got " << lambda;
        throw ClassViolationError(os.str());
    }
}

double check_alpha(std::optional<double> alpha, bool zero_ok, const char* measure) {
    if (!alpha) throw std::invalid_argument(std::string(measure) + " requires a decay factor");
    double lo = zero_ok ? 0.0 : std::nextafter(0.0, 1.0);
    if (*alpha < lo || *alpha >= 1.0) {
        std::ostringstream os;
        os << measure << ": decay factor " << *alpha << " outside " << (zero_ok ? "[0,1)" : "(0,1)");
        throw std::invalid_argument(os.str());
    }
    return *alpha;
}

double pagerank_residual(const IndexedGraph& ig, const std::vector<double>& x, double alpha) {
    double worst = 0.0;
    for (std::size_t v = 0; v < ig.size(); ++v) {
        double acc = ig.weight[v];
        for (const auto& [u, mult] : ig.in_edges[v])
            acc += alpha * static_cast<double>(mult) / static_cast<double>(ig.out_deg[u]) * x[u];
        worst = std::max(worst, std::abs(x[v] - acc));
    }
    return worst;
}

}  // namespace

// ---------------------------------------------------------------------------
// MeasureSpec
// ---------------------------------------------------------------------------

std::string measure_name(MeasureId id) {
    switch (id) {
        case MeasureId::PageRank: return "pagerank";
        case MeasureId::Degree: return "degree";
        case MeasureId::Eigenvector: return "eigenvector";
        case MeasureId::Katz: return "katz";
        case MeasureId::Bonacich: return "bonacich";
        case MeasureId::Beta: return "beta";
        case MeasureId::KatzPrestige: return "katz-prestige";
        case MeasureId::Closeness: return "closeness";
        case MeasureId::Decay: return "decay";
        case MeasureId::Betweenness: return "betweenness";
        case MeasureId::CxAdaptiveDecay: return "cx-adaptive-decay";
        case MeasureId::CxSinkDoubled: return "cx-sink-doubled";
        case MeasureId::CxDampedOutdeg: return "cx-damped-outdeg";
        case MeasureId::CxWeightedBeta: return "cx-weighted-beta";
        case MeasureId::CxUniformBeta: return "cx-uniform-beta";
        case MeasureId::CxScaledPageRank: return "cx-scaled-pagerank";
    }
    return "?";
}

MeasureId measure_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(MeasureId::CxScaledPageRank); ++i) {
        auto id = static_cast<MeasureId>(i);
        if (measure_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown measure: " + name);
}

bool MeasureSpec::measure_needs_alpha(MeasureId id) {
    switch (id) {
        case MeasureId::PageRank:
        case MeasureId::Katz:
        case MeasureId::Bonacich:
        case MeasureId::Decay:
        case MeasureId::CxSinkDoubled:
        case MeasureId::CxDampedOutdeg:
        case MeasureId::CxScaledPageRank:
            return true;
        default:
            return false;
    }
}

MeasureSpec::MeasureSpec(MeasureId id_, std::optional<double> alpha_) : id(id_), alpha(alpha_) {
    if (needs_alpha()) {
        check_alpha(alpha, id == MeasureId::PageRank, measure_name(id).c_str());
    } else if (alpha) {
        throw std::invalid_argument(measure_name(id) + " takes no decay factor");
    }
}

GraphClass MeasureSpec::graph_class() const {
    switch (id) {
        case MeasureId::Eigenvector:
        case MeasureId::KatzPrestige:
        case MeasureId::Closeness:
            return GraphClass::strongly_connected();
        case MeasureId::Katz:
        case MeasureId::Bonacich:
            return GraphClass::katz_admissible(*alpha);
        default:
            return GraphClass::all();
    }
}

std::string MeasureSpec::label() const {
    std::string out = measure_name(id);
    if (alpha) {
        std::ostringstream os;
        os << out << "[a=" << *alpha << "]";
        return os.str();
    }
    return out;
}

double CentralityVector::at(const NodeId& v) const {
    auto it = scores.find(v);
    if (it == scores.end()) throw NodeNotFoundError(v);
    return it->second;
}

double CentralityVector::max_abs_diff(const CentralityVector& other) const {
    if (scores.size() != other.scores.size())
        throw std::invalid_argument("centrality vectors over different node sets");
    double worst = 0.0;
    for (const auto& [v, s] : scores) worst = std::max(worst, std::abs(s - other.at(v)));
    return worst;
}

// ---------------------------------------------------------------------------
// measures (double path)
// ---------------------------------------------------------------------------

CentralityVector pagerank_direct(const MultiGraph& g, double alpha) {
    require_nonempty(g);
    check_alpha(alpha, true, "pagerank");
    IndexedGraph ig(g);
    auto x = pagerank_kernel<double>(ig, ig.weight, alpha);
    double res = pagerank_residual(ig, x, alpha);
    if (!(res < 1e-12 * std::max(1.0, g.total_weight())))
        throw NumericError("pagerank_direct residual too large", res);
    return to_vector(ig, x);
}

CentralityVector pagerank_power(const MultiGraph& g, double alpha, double tol, int max_iter) {
    require_nonempty(g);
    check_alpha(alpha, true, "pagerank");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    IndexedGraph ig(g);
    std::vector<double> x(ig.weight), y(ig.size());
    // A delta below tol*(1-a)/a in l1 bounds the distance to the fixed point
    // by tol in l1, hence in max-norm.
    double stop = alpha > 0.0 ? tol * (1.0 - alpha) / alpha : tol;
    double delta = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        for (std::size_t v = 0; v < ig.size(); ++v) {
            double acc = ig.weight[v];
            for (const auto& [u, mult] : ig.in_edges[v])
                acc += alpha * static_cast<double>(mult) / static_cast<double>(ig.out_deg[u]) * x[u];
            y[v] = acc;
        }
        delta = 0.0;
        for (std::size_t v = 0; v < ig.size(); ++v) delta += std::abs(y[v] - x[v]);
        x.swap(y);
        if (delta <= stop) return to_vector(ig, x);
    }
    throw NumericError("pagerank_power did not converge", delta);
}

CentralityVector degree(const MultiGraph& g) {
    IndexedGraph ig(g);
    return to_vector(ig, degree_kernel<double>(ig));
}

CentralityVector eigenvector(const MultiGraph& g, double tol) {
    require_strongly_connected(g, "eigenvector centrality");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    IndexedGraph ig(g);
    const std::size_t n = ig.size();
    // Shifted power iteration: A + I is primitive for irreducible A, so this
    // converges even on periodic graphs such as plain cycles.
    std::vector<double> x(n, 1.0 / static_cast<double>(n)), ax(n);
    constexpr int kMaxIter = 200000;
    double residual = 0.0;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        double lambda = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (const auto& [u, mult] : ig.in_edges[v]) acc += static_cast<double>(mult) * x[u];
            ax[v] = acc;
            lambda += acc;  // sum(Ax)/sum(x) with sum(x) = 1
        }
        residual = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            residual = std::max(residual, std::abs(x[v] - ax[v] / lambda));
        if (residual < tol) return to_vector(ig, x);
        double norm = 0.0;
        for (std::size_t v = 0; v < n; ++v) norm += x[v] + ax[v];
        for (std::size_t v = 0; v < n; ++v) x[v] = (x[v] + ax[v]) / norm;
    }
    throw NumericError("eigenvector iteration did not converge", residual);
}

CentralityVector katz(const MultiGraph& g, double alpha) {
    check_alpha(alpha, false, "katz");
    require_katz_admissible(g, alpha, "katz centrality");
    IndexedGraph ig(g);
    return to_vector(ig, katz_kernel<double>(ig, ig.weight, alpha));
}

CentralityVector bonacich(const MultiGraph& g, double alpha) {
    check_alpha(alpha, false, "bonacich");
    require_katz_admissible(g, alpha, "bonacich centrality");
    IndexedGraph ig(g);
    return to_vector(ig, bonacich_kernel<double>(ig, ig.weight, alpha));
}

CentralityVector beta_measure(const MultiGraph& g) {
    IndexedGraph ig(g);
    return to_vector(ig, beta_kernel<double>(ig));
}

CentralityVector katz_prestige(const MultiGraph& g, double tol) {
    require_strongly_connected(g, "katz prestige");
    IndexedGraph ig(g);
    auto x = prestige_kernel<double>(ig);
    // The first stationary equation was sacrificed for the normalization row;
    // verify it held anyway.
    double acc = 0.0;
    for (const auto& [u, mult] : ig.in_edges[0])
        acc += static_cast<double>(mult) / static_cast<double>(ig.out_deg[u]) * x[u];
    if (std::abs(x[0] - acc) > tol)
        throw NumericError("katz prestige stationarity residual too large", std::abs(x[0] - acc));
    return to_vector(ig, x);
}

CentralityVector closeness(const MultiGraph& g) {
    require_strongly_connected(g, "closeness centrality");
    if (g.node_count() < 2)
        throw std::invalid_argument("closeness needs at least two nodes (zero distance sum)");
    IndexedGraph ig(g);
    return to_vector(ig, closeness_kernel<double>(ig));
}

CentralityVector decay_centrality(const MultiGraph& g, double alpha) {
    check_alpha(alpha, false, "decay");
    IndexedGraph ig(g);
    return to_vector(ig, decay_kernel<double>(ig, alpha));
}

CentralityVector betweenness(const MultiGraph& g) {
    IndexedGraph ig(g);
    return to_vector(ig, betweenness_kernel<double>(ig));
}

CentralityVector counterexample_centrality(CxKind kind, const MultiGraph& g,
                                           std::optional<double> alpha) {
    require_nonempty(g);
    IndexedGraph ig(g);
    switch (kind) {
        case CxKind::AdaptiveDecay:
            return to_vector(ig, adaptive_decay_kernel<double>(ig, ig.weight));
        case CxKind::SinkDoubled:
            return to_vector(ig, sink_doubled_kernel<double>(
                                     ig, ig.weight, check_alpha(alpha, false, "cx-sink-doubled")));
        case CxKind::DampedOutdeg:
            return to_vector(ig, damped_outdeg_kernel<double>(
                                     ig, ig.weight, check_alpha(alpha, false, "cx-damped-outdeg")));
        case CxKind::WeightedBeta:
            return to_vector(ig, weighted_beta_kernel<double>(ig, ig.weight));
        case CxKind::UniformBeta: {
            auto x = beta_kernel<double>(ig);
            for (std::size_t v = 0; v < ig.size(); ++v) x[v] += ig.weight[v];
            return to_vector(ig, x);
        }
        case CxKind::ScaledPageRank: {
            auto x = pagerank_kernel<double>(ig, ig.weight,
                                             check_alpha(alpha, false, "cx-scaled-pagerank"));
            for (double& s : x) s *= 2.0;
            return to_vector(ig, x);
        }
    }
    throw std::logic_error("bad CxKind");
}

CentralityVector evaluate(const MeasureSpec& spec, const MultiGraph& g) {
    switch (spec.id) {
        case MeasureId::PageRank: return pagerank_direct(g, *spec.alpha);
        case MeasureId::Degree: return degree(g);
        case MeasureId::Eigenvector: return eigenvector(g);
        case MeasureId::Katz: return katz(g, *spec.alpha);
        case MeasureId::Bonacich: return bonacich(g, *spec.alpha);
        case MeasureId::Beta: return beta_measure(g);
        case MeasureId::KatzPrestige: return katz_prestige(g);
        case MeasureId::Closeness: return closeness(g);
        case MeasureId::Decay: return decay_centrality(g, *spec.alpha);
        case MeasureId::Betweenness: return betweenness(g);
        case MeasureId::CxAdaptiveDecay:
            return counterexample_centrality(CxKind::AdaptiveDecay, g);
        case MeasureId::CxSinkDoubled:
            return counterexample_centrality(CxKind::SinkDoubled, g, spec.alpha);
        case MeasureId::CxDampedOutdeg:
            return counterexample_centrality(CxKind::DampedOutdeg, g, spec.alpha);
        case MeasureId::CxWeightedBeta:
            return counterexample_centrality(CxKind::WeightedBeta, g);
        case MeasureId::CxUniformBeta:
            return counterexample_centrality(CxKind::UniformBeta, g);
        case MeasureId::CxScaledPageRank:
            return counterexample_centrality(CxKind::ScaledPageRank, g, spec.alpha);
    }
    throw std::logic_error("bad MeasureId");
}

// ---------------------------------------------------------------------------
// exact-rational mode
// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> exact_weight_vector(const IndexedGraph& ig, const RationalMap& weights) {
    std::vector<Rational> out(ig.size());
    for (std::size_t i = 0; i < ig.size(); ++i) {
        auto it = weights.find(ig.nodes[i]);
        if (it == weights.end())
            throw std::invalid_argument("exact weight missing for node " + ig.nodes[i]);
        out[i] = it->second;
    }
    return out;
}

RationalMap to_map(const IndexedGraph& ig, const std::vector<Rational>& v) {
    RationalMap out;
    for (std::size_t i = 0; i < ig.size(); ++i) out[ig.nodes[i]] = v[i];
    return out;
}

}  // namespace

RationalMap evaluate_exact(const MeasureSpec& spec, const MultiGraph& g, const RationalMap& weights,
                           const std::optional<Rational>& alpha) {
    require_nonempty(g);
    if (spec.needs_alpha() && !alpha)
        throw std::invalid_argument("exact mode needs a rational decay factor for " +
                                    measure_name(spec.id));
    IndexedGraph ig(g);
    auto b = exact_weight_vector(ig, weights);
    switch (spec.id) {
        case MeasureId::PageRank:
            return to_map(ig, pagerank_kernel<Rational>(ig, b, *alpha));
        case MeasureId::Degree:
            return to_map(ig, degree_kernel<Rational>(ig));
        case MeasureId::Eigenvector:
            throw std::invalid_argument(
                "eigenvector centrality has no exact mode (irrational eigenvalue)");
        case MeasureId::Katz:
            require_katz_admissible(g, to_double(*alpha), "katz centrality");
            return to_map(ig, katz_kernel<Rational>(ig, b, *alpha));
        case MeasureId::Bonacich:
            require_katz_admissible(g, to_double(*alpha), "bonacich centrality");
            return to_map(ig, bonacich_kernel<Rational>(ig, b, *alpha));
        case MeasureId::Beta:
            return to_map(ig, beta_kernel<Rational>(ig));
        case MeasureId::KatzPrestige:
            require_strongly_connected(g, "katz prestige");
            return to_map(ig, prestige_kernel<Rational>(ig));
        case MeasureId::Closeness:
            require_strongly_connected(g, "closeness centrality");
            if (g.node_count() < 2) throw std::invalid_argument("closeness needs >= 2 nodes");
            return to_map(ig, closeness_kernel<Rational>(ig));
        case MeasureId::Decay:
            return to_map(ig, decay_kernel<Rational>(ig, *alpha));
        case MeasureId::Betweenness:
            return to_map(ig, betweenness_kernel<Rational>(ig));
        case MeasureId::CxAdaptiveDecay:
            return to_map(ig, adaptive_decay_kernel<Rational>(ig, b));
        case MeasureId::CxSinkDoubled:
            return to_map(ig, sink_doubled_kernel<Rational>(ig, b, *alpha));
        case MeasureId::CxDampedOutdeg:
            return to_map(ig, damped_outdeg_kernel<Rational>(ig, b, *alpha));
        case MeasureId::CxWeightedBeta:
            return to_map(ig, weighted_beta_kernel<Rational>(ig, b));
        case MeasureId::CxUniformBeta: {
            auto x = beta_kernel<Rational>(ig);
            for (std::size_t v = 0; v < ig.size(); ++v) x[v] += b[v];
            return to_map(ig, x);
        }
        case MeasureId::CxScaledPageRank: {
            auto x = pagerank_kernel<Rational>(ig, b, *alpha);
            for (auto& s : x) s *= 2;
            return to_map(ig, x);
        }
    }
    throw std::logic_error("bad MeasureId");
}

}  // namespace rankax

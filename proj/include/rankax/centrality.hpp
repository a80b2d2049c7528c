#ifndef RANKAX_CENTRALITY_HPP
#define RANKAX_CENTRALITY_HPP

#include <map>
#include <optional>
#include <string>

#include "rankax/graph.hpp"
#include "rankax/rational.hpp"

namespace rankax {

enum class MeasureId {
    PageRank,
    Degree,
    Eigenvector,
    Katz,
    Bonacich,
    Beta,
    KatzPrestige,
    Closeness,
    Decay,
    Betweenness,
    CxAdaptiveDecay,
    CxSinkDoubled,
    CxDampedOutdeg,
    CxWeightedBeta,
    CxUniformBeta,
    CxScaledPageRank,
};

std::string measure_name(MeasureId id);
MeasureId measure_from_name(const std::string& name);

// One centrality measure with its parameters and admissible graph class.
// The decay factor is present exactly for the measures whose formula uses it.
struct MeasureSpec {
    MeasureId id;
    std::optional<double> alpha;

    MeasureSpec(MeasureId id, std::optional<double> alpha = std::nullopt);

    bool needs_alpha() const { return measure_needs_alpha(id); }
    static bool measure_needs_alpha(MeasureId id);

    GraphClass graph_class() const;
    std::string label() const;  // e.g. "pagerank[a=0.9]"
};

struct CentralityVector {
    std::map<NodeId, double> scores;

    double at(const NodeId& v) const;
    // Largest |a - b| over the common domain; domains must match.
    double max_abs_diff(const CentralityVector& other) const;
};

// --- PageRank (two solver routes, cross-checked in the tests) -------------

// Exact dense solve of PR_v = a * sum_{(u,v)} PR_u / outdeg(u) + b(v).
// Sinks pass nothing on: there is no dangling-node redistribution. This
// follows the stopping-surfer reading and deliberately differs from the
// teleport variant common in web-scale implementations.
CentralityVector pagerank_direct(const MultiGraph& g, double alpha);

// Fixed-point iteration of the same equation, started from the weights.
// Converges for alpha < 1; the result is within tol of pagerank_direct
// in max-norm.
CentralityVector pagerank_power(const MultiGraph& g, double alpha, double tol = 1e-10,
                                int max_iter = 100000);

// --- comparison measures ---------------------------------------------------

CentralityVector degree(const MultiGraph& g);
CentralityVector eigenvector(const MultiGraph& g, double tol = 1e-12);
CentralityVector katz(const MultiGraph& g, double alpha);
CentralityVector bonacich(const MultiGraph& g, double alpha);
CentralityVector beta_measure(const MultiGraph& g);
CentralityVector katz_prestige(const MultiGraph& g, double tol = 1e-12);
CentralityVector closeness(const MultiGraph& g);
CentralityVector decay_centrality(const MultiGraph& g, double alpha);
CentralityVector betweenness(const MultiGraph& g);

// --- the six single-axiom-violating measures --------------------------------

enum class CxKind {
    AdaptiveDecay,    // PageRank with decay 1/(2 + b(G))
    SinkDoubled,      // 2*PR - b at sinks, PR elsewhere
    DampedOutdeg,     // recursive equation with denominators outdeg+1
    WeightedBeta,     // sum b(u)/outdeg(u) over in-edges, plus b(v)
    UniformBeta,      // sum 1/outdeg(u) over in-edges, plus b(v)
    ScaledPageRank,   // 2*PR
};

CentralityVector counterexample_centrality(CxKind kind, const MultiGraph& g,
                                           std::optional<double> alpha = std::nullopt);

// Unified dispatch used by the axiom checker and the CLI. Enforces the
// measure's graph class (ClassViolationError outside it).
CentralityVector evaluate(const MeasureSpec& spec, const MultiGraph& g);

// --- exact-rational mode ----------------------------------------------------

// Exact evaluation for desk-size graphs. Weights come from the parsed
// decimal literals, not from the binary doubles. Available for every measure
// except eigenvector, whose dominant eigenvalue is not rational in general.
RationalMap evaluate_exact(const MeasureSpec& spec, const MultiGraph& g,
                           const RationalMap& weights,
                           const std::optional<Rational>& alpha = std::nullopt);

}  // namespace rankax

#endif

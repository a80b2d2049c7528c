#ifndef RANKAX_AXIOMS_HPP
#define RANKAX_AXIOMS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rankax/centrality.hpp"
#include "rankax/graph.hpp"
#include "rankax/rng.hpp"
#include "rankax/transforms.hpp"

namespace rankax {

// The six executable axioms plus the two derived properties (locality and
// source-node), which are consequences of the others and flagged as derived
// in reports.
enum class AxiomId {
    NodeDeletion,
    EdgeDeletion,
    EdgeMultiplication,
    EdgeSwap,
    NodeRedirect,
    Baseline,
    Locality,
    SourceNode,
};

constexpr std::array<AxiomId, 6> kCoreAxioms = {
    AxiomId::NodeDeletion,   AxiomId::EdgeDeletion, AxiomId::EdgeMultiplication,
    AxiomId::EdgeSwap,       AxiomId::NodeRedirect, AxiomId::Baseline,
};

std::string axiom_name(AxiomId id);
AxiomId axiom_from_name(const std::string& name);
bool axiom_is_derived(AxiomId id);
// The axiom an operation kind belongs to.
AxiomId axiom_for_op(OpInstance::Kind kind);

enum class Verdict { Holds, Violated, SkippedOutOfClass, PreconditionUnmet };
std::string verdict_name(Verdict v);

struct Witness {
    MultiGraph graph;
    std::optional<OpInstance> op;
    NodeId node;
    double before = 0.0;
    double after = 0.0;
    double expected = 0.0;
};

struct AxiomReport {
    AxiomId axiom;
    std::string measure;
    Verdict verdict = Verdict::Holds;
    std::optional<Witness> witness;  // present whenever verdict == Violated
    std::size_t nodes_checked = 0;
    std::string detail;
};

// Score-equality comparison: relative with an absolute floor, since the
// iterative solvers introduce noise around zero.
struct Tolerance {
    double rel = 1e-9;
    double abs_floor = 1e-12;
    bool equal(double x, double y) const;
};

// A measure bound to an evaluation callable. The axiom machinery works on
// this so that scaled or otherwise synthetic measures can be checked with the
// same code paths as the built-in ones.
struct BoundMeasure {
    std::string label;
    GraphClass cls;
    std::function<CentralityVector(const MultiGraph&)> fn;

    CentralityVector operator()(const MultiGraph& g) const { return fn(g); }
};

BoundMeasure bind_measure(const MeasureSpec& spec);

// Checks one axiom on one concrete instance. For the invariance axioms `op`
// must carry the matching operation; Baseline takes no op and checks every
// isolated node of g. With `restrict_to_class` the measure is never evaluated
// outside its class: the report comes back SkippedOutOfClass instead.
AxiomReport check_axiom(const BoundMeasure& measure, AxiomId axiom, const MultiGraph& g,
                        const std::optional<OpInstance>& op, Tolerance tol = {},
                        bool restrict_to_class = false);
AxiomReport check_axiom(const MeasureSpec& spec, AxiomId axiom, const MultiGraph& g,
                        const std::optional<OpInstance>& op, Tolerance tol = {},
                        bool restrict_to_class = false);

enum class DerivedProperty { Locality, SourceNode };

// Locality: every node of g scores the same in g and in g + g2 (g2 disjoint).
// SourceNode: every source scores c * weight, with c from probe_constants.
AxiomReport check_derived_property(const BoundMeasure& measure, DerivedProperty which,
                                   const MultiGraph& g, const MultiGraph* g2 = nullptr,
                                   Tolerance tol = {});

// Scaling constants extracted from the two probe gadgets: c from the single
// weighted node, a from the sink of the one-edge source/sink graph. For an
// axiom-satisfying measure these are the constants of its c * PR^a form; for
// anything else they are a diagnostic only.
struct ProbeResult {
    double c = 0.0;
    double a = 0.0;
    double d = 0.0;  // d = a * c
    bool pagerank_like = false;  // a inside [0,1)
};

ProbeResult probe_constants(const BoundMeasure& measure, Tolerance tol = {});
ProbeResult probe_constants(const MeasureSpec& spec, Tolerance tol = {});

struct UniquenessReport {
    ProbeResult probe;
    std::size_t graphs_checked = 0;
    std::size_t graphs_skipped = 0;  // outside the measure's class
    double max_deviation = 0.0;      // +inf when the probe is not PageRank-like
    std::size_t worst_graph = 0;
    NodeId worst_node;
};

// Compares the measure against c * PR^a on every corpus graph inside its
// class. Evidence, not proof: a measure satisfying the five invariance
// axioms must deviate below tolerance everywhere.
UniquenessReport check_uniqueness(const BoundMeasure& measure,
                                  const std::vector<MultiGraph>& corpus, Tolerance tol = {});

// --- random instances -------------------------------------------------------

struct GeneratorConfig {
    std::pair<int, int> size_range{2, 7};
    int max_multiplicity = 3;
    std::vector<double> weight_pool{0.0, 0.5, 1.0, 2.0};
    std::string id_prefix = "n";
};

// Random graph guaranteed to lie in `cls`: strongly connected graphs are a
// random cycle plus chords, acyclic graphs follow a random topological order,
// Katz-admissible graphs are rejection-sampled on the spectral radius.
MultiGraph generate_graph(const GraphClass& cls, const GeneratorConfig& config, SplitMix64& rng);
MultiGraph generate_graph(const GraphClass& cls, const GeneratorConfig& config,
                          std::uint64_t seed);

struct AxiomInstance {
    MultiGraph graph;
    std::optional<OpInstance> op;  // empty for Baseline
};

// A random graph plus a valid operation for the axiom. Edge-swap instances
// are built with the equal-centrality precondition holding by symmetry
// (mirrored components, or rotation-symmetric circulants when the base class
// is restricted); node-redirect instances get a constructed out-twin.
// nullopt when the sampled base graph could not host the operation.
std::optional<AxiomInstance> random_axiom_instance(AxiomId axiom, const GraphClass& base_class,
                                                   const GeneratorConfig& config, SplitMix64& rng);

// Samples instances until one violates the axiom, then shrinks it greedily
// (drop a node or decrement a multiplicity while the violation persists).
// nullopt means no violation found within the budget - evidence, not proof.
std::optional<AxiomReport> search_counterexample(const BoundMeasure& measure, AxiomId axiom,
                                                 int budget, std::uint64_t seed,
                                                 Tolerance tol = {});

// --- known violation fixtures ------------------------------------------------

struct ViolationFixture {
    MeasureId measure;
    AxiomId axiom;
    std::string name;
    MultiGraph graph;
    std::optional<OpInstance> op;
};

// Concrete witness instances for every measure/axiom pair that is known to
// fail. The satisfiability matrix tries these before random search.
const std::vector<ViolationFixture>& known_violations();

// --- the satisfiability matrix -----------------------------------------------

enum class CellVerdict { Plus, Minus, PlusStar, MinusStar };
std::string cell_verdict_symbol(CellVerdict v);

struct MatrixCell {
    CellVerdict verdict = CellVerdict::Plus;
    std::optional<AxiomReport> violation;  // witness backing a minus
    bool from_fixture = false;             // witness came from the catalogue
    int checked = 0;                       // instances actually evaluated
    int skipped = 0;                       // instances outside the class
    int precondition_unmet = 0;
};

struct SatisfiabilityMatrix {
    std::vector<MeasureSpec> measures;
    std::vector<std::array<MatrixCell, 6>> cells;  // per measure, kCoreAxioms order
};

SatisfiabilityMatrix satisfiability_matrix(const std::vector<MeasureSpec>& measures, int budget,
                                           std::uint64_t seed, Tolerance tol = {});

std::string render_matrix(const SatisfiabilityMatrix& m);

// The ten standard comparison measures in the usual presentation order.
std::vector<MeasureSpec> comparison_measure_set(double alpha);
// The six single-axiom-violating measures.
std::vector<MeasureSpec> independence_measure_set(double alpha);

}  // namespace rankax

#endif

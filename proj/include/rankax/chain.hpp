#ifndef RANKAX_CHAIN_HPP
#define RANKAX_CHAIN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rankax/axioms.hpp"
#include "rankax/transforms.hpp"

namespace rankax {

// A chain script: an initial graph, an ordered list of operations, tracked
// nodes and the expectation mode. In `invariant` mode every tracked node must
// end with its initial score; `redirect-sum` additionally folds the score of
// every node redirected into a tracked node into its prediction.
//
// Script format (one directive or operation per line, `#` comments):
//   graph <file>            resolved relative to the script location
//   measure <id> [alpha]
//   track <node> [node ...]
//   mode invariant|redirect-sum
//   <operation lines as in OpInstance::parse>
struct ChainScript {
    std::string graph_file;
    MeasureSpec measure{MeasureId::PageRank, 0.9};
    std::vector<NodeId> tracked;
    bool redirect_sum = false;
    std::vector<OpInstance> ops;
};

ChainScript parse_chain_script(std::istream& in, const std::string& source_name,
                               const std::string& base_dir);
ChainScript load_chain_script(const std::string& path);

struct ChainStepResult {
    OpInstance op;
    AxiomId axiom;
    Verdict verdict;
    std::string detail;
};

struct ChainOutcome {
    bool ok = false;
    // 1-based step that aborted the run (0 when all steps executed)
    std::size_t failed_step = 0;
    std::string failure;
    std::vector<ChainStepResult> steps;
    // per tracked node: final score and the axiom-predicted value
    std::vector<std::tuple<NodeId, double, double>> final_checks;
};

ChainOutcome run_chain(const ChainScript& script, const MultiGraph& initial, Tolerance tol = {});

}  // namespace rankax

#endif

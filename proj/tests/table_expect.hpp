#ifndef RANKAX_TESTS_TABLE_EXPECT_HPP
#define RANKAX_TESTS_TABLE_EXPECT_HPP

#include <array>
#include <map>
#include <string>

#include "rankax/axioms.hpp"

namespace table_expect {

// Expected satisfiability pattern, rows in comparison_measure_set order,
// columns in kCoreAxioms order (node-deletion, edge-deletion,
// edge-multiplication, edge-swap, node-redirect, baseline).
inline const std::map<rankax::MeasureId, std::array<const char*, 6>>& pattern() {
    using rankax::MeasureId;
    static const std::map<MeasureId, std::array<const char*, 6>> p = {
        {MeasureId::Degree,       {"+", "+", "-", "+", "-", "-"}},
        {MeasureId::Eigenvector,  {"+*", "+*", "-", "+*", "+*", "+*"}},
        {MeasureId::Katz,         {"+*", "+*", "-", "+*", "+*", "+*"}},
        {MeasureId::Bonacich,     {"+*", "+*", "-", "-", "+*", "-"}},
        {MeasureId::Beta,         {"+", "+", "+", "+", "-", "-"}},
        {MeasureId::KatzPrestige, {"+*", "+*", "+*", "+*", "+*", "+*"}},
        {MeasureId::PageRank,     {"+", "+", "+", "+", "+", "+"}},
        {MeasureId::Closeness,    {"+*", "+*", "+*", "-", "-", "+*"}},
        {MeasureId::Decay,        {"+", "+", "+", "-", "-", "-"}},
        {MeasureId::Betweenness,  {"+", "-", "-", "-", "-", "-"}},
    };
    return p;
}

}  // namespace table_expect

#endif

#ifndef RANKAX_TESTS_FIXTURES_HPP
#define RANKAX_TESTS_FIXTURES_HPP

#include "rankax/graph.hpp"

namespace fixtures {

using rankax::make_graph;
using rankax::MultiGraph;

// The eight-node running example: v8 collects the out-edges of v1 and v4,
// v8 -> v2 is doubled, v3 is a sink.
inline MultiGraph example_web() {
    return make_graph(
        {{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}, {"v5", 1}, {"v6", 1}, {"v7", 1}, {"v8", 1}},
        {
            {"v1", "v8", 1},
            {"v2", "v3", 1},
            {"v4", "v8", 1},
            {"v5", "v4", 1},
            {"v5", "v6", 1},
            {"v5", "v7", 1},
            {"v6", "v5", 1},
            {"v6", "v1", 1},
            {"v6", "v7", 1},
            {"v7", "v1", 1},
            {"v8", "v2", 2},
            {"v8", "v7", 1},
        });
}

// Stages of the worked invariance chain. chain_f is the start; redirect
// v7 -> v1 gives chain_e; the swap of (v5,v2),(v6,v5) for (v6,v2),(v5,v5)
// gives chain_d; chain_c halves v6's doubled edges; deleting (v4,v3) and
// then the isolated v3 leads to chain_a.
inline MultiGraph chain_f() {
    return make_graph(
        {{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}, {"v5", 1}, {"v6", 1}, {"v7", 0}},
        {
            {"v1", "v2", 1},
            {"v4", "v3", 1},
            {"v5", "v2", 1},
            {"v5", "v4", 1},
            {"v5", "v6", 1},
            {"v5", "v7", 1},
            {"v6", "v1", 1},
            {"v6", "v2", 1},
            {"v6", "v5", 1},
            {"v6", "v7", 1},
            {"v7", "v2", 1},
        });
}

inline MultiGraph chain_e() {
    return make_graph({{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}, {"v5", 1}, {"v6", 1}},
                      {
                          {"v1", "v2", 1},
                          {"v4", "v3", 1},
                          {"v5", "v1", 1},
                          {"v5", "v2", 1},
                          {"v5", "v4", 1},
                          {"v5", "v6", 1},
                          {"v6", "v1", 2},
                          {"v6", "v2", 1},
                          {"v6", "v5", 1},
                      });
}

inline MultiGraph chain_d() {
    return make_graph({{"v1", 1}, {"v2", 1}, {"v3", 1}, {"v4", 1}, {"v5", 1}, {"v6", 1}},
                      {
                          {"v1", "v2", 1},
                          {"v4", "v3", 1},
                          {"v5", "v1", 1},
                          {"v5", "v4", 1},
                          {"v5", "v5", 1},
                          {"v5", "v6", 1},
                          {"v6", "v1", 2},
                          {"v6", "v2", 2},
                      });
}

// The four-node graph whose middle layer splits two units of flow.
inline MultiGraph diamond() {
    return make_graph({{"u", 0}, {"v", 1}, {"v2", 0}, {"w", 0}},
                      {{"u", "v", 1}, {"u", "v2", 1}, {"v", "w", 1}, {"v2", "w", 1}});
}

inline MultiGraph two_cycle() {
    return make_graph({{"u", 1}, {"v", 1}}, {{"u", "v", 1}, {"v", "u", 1}});
}

inline MultiGraph doubled_triangle() {
    return make_graph({{"u", 1}, {"v", 1}, {"w", 1}},
                      {{"u", "v", 2}, {"v", "w", 2}, {"w", "u", 2}});
}

inline MultiGraph one_arrow(double x = 1.0) {
    return make_graph({{"u", x}, {"v", 0}}, {{"u", "v", 1}});
}

inline MultiGraph lone_node(double x = 1.0) { return make_graph({{"v", x}}, {}); }

}  // namespace fixtures

#endif

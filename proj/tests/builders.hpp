#ifndef QGRAPH_TESTS_BUILDERS_HPP
#define QGRAPH_TESTS_BUILDERS_HPP

#include "qgraph/graph.hpp"

namespace qtest {

using qgraph::Color;
using qgraph::DecoratedGraph;

// one black vertex with `arity` in-legs and an out-leg
inline DecoratedGraph star_black(int arity) {
    DecoratedGraph g;
    g.vertices = {{0, Color::Black, arity}};
    for (int s = 1; s <= arity; ++s) g.in_legs[s] = {0, s};
    g.out_legs[1] = 0;
    g.ordering = {0};
    return g;
}

// open chain of bivalent black vertices, in-leg 1 to out-leg 1
inline DecoratedGraph bivalent_chain(int blacks) {
    DecoratedGraph g;
    for (int i = 0; i < blacks; ++i) {
        g.vertices.push_back({i, Color::Black, 1});
        g.ordering.push_back(i);
        if (i > 0) g.edges.push_back({i - 1, i, 1});
    }
    g.in_legs[1] = {0, 1};
    g.out_legs[1] = blacks - 1;
    return g;
}

// closed cycle of bivalent black vertices, numbered along the flow
inline DecoratedGraph black_cycle(int blacks) {
    DecoratedGraph g;
    for (int i = 0; i < blacks; ++i) {
        g.vertices.push_back({i, Color::Black, 1});
        g.ordering.push_back(i);
        g.edges.push_back({i, (i + 1) % blacks, 1});
    }
    return g;
}

// closed cycle of composite white vertices
inline DecoratedGraph white_cycle(int whites) {
    DecoratedGraph g;
    for (int i = 0; i < whites; ++i) {
        g.vertices.push_back({i, Color::White, 1});
        g.ordering.push_back(i);
        g.edges.push_back({i, (i + 1) % whites, 1});
    }
    return g;
}

// one composite white vertex between an in-leg and an out-leg
inline DecoratedGraph composite_white() {
    DecoratedGraph g;
    g.vertices = {{0, Color::White, 1}};
    g.in_legs[1] = {0, 1};
    g.out_legs[1] = 0;
    g.ordering = {0};
    return g;
}

// white vertex of in_arity 3 with leg `labels[s-1]` on slot s and an out-leg
inline DecoratedGraph white_star3(int s1, int s2, int s3) {
    DecoratedGraph g;
    g.vertices = {{0, Color::White, 3}};
    g.in_legs[s1] = {0, 1};
    g.in_legs[s2] = {0, 2};
    g.in_legs[s3] = {0, 3};
    g.out_legs[1] = 0;
    g.ordering = {0};
    return g;
}

}  // namespace qtest

#endif  // QGRAPH_TESTS_BUILDERS_HPP

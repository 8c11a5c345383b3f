#ifndef QGRAPH_CLASSIFY_HPP
#define QGRAPH_CLASSIFY_HPP

#include "qgraph/graph.hpp"

#include <vector>

namespace qgraph {

// The four invariant summands of the connected complex.  G1 is the lone
// in_arity-0 black vertex with an out-leg, G2 the all-bivalent graphs (open
// chains included), G3 the all-black graphs of valency >= 3, G4 the rest.
enum class Subcomplex { G1, G2, G3, G4 };

Subcomplex classify(const DecoratedGraph& g);

enum class Mark { Leg, Black, White };

// Degree of a boundary mark: 0 for legs and black vertices, 1 for whites.
int mark_degree(Mark m);

// One end of a branch: a leg, or a multivalent vertex.  For the end a branch
// flows into, `slot` records which input slot of the vertex receives it.
struct BranchEnd {
    bool is_leg = false;
    int leg = 0;
    int vertex = -1;
    int slot = 0;
};

// A maximal string of bivalent black vertices, read in flow order, together
// with its boundary marks.  Zero-length branches are the bare edges between
// multivalent vertices and the legs attached to them.
struct Branch {
    BranchEnd start;
    BranchEnd end;
    std::vector<int> interior;
    Mark alpha = Mark::Leg;
    Mark beta = Mark::Leg;
    bool alpha_univalent = false;

    int k() const { return static_cast<int>(interior.size()); }
};

// Branch decomposition of a G4 graph.  Throws WrongSubcomplex for graphs
// outside G4 and for graphs containing composite (in_arity-1) white vertices:
// the filtration machinery counts every white vertex as multivalent, so
// composite vertices must be expanded before entering it.
std::vector<Branch> branches(const DecoratedGraph& g);

}  // namespace qgraph

#endif  // QGRAPH_CLASSIFY_HPP

#ifndef QGRAPH_CANONICAL_HPP
#define QGRAPH_CANONICAL_HPP

#include "qgraph/graph.hpp"

#include <cstdint>
#include <vector>

namespace qgraph {

// Canonical representative of an isomorphism class together with the sign
// relating the input orientation to the canonical one.  sign == 0 marks a
// graph equal to minus itself (an automorphism acts by an odd permutation of
// the blacks, or flips the antisymmetric white slot pair an odd number of
// times); such graphs vanish identically.
struct CanonicalGraph {
    DecoratedGraph graph;  // ids 0..V-1 equal to the ordering positions
    int sign = 1;

    friend bool operator==(const CanonicalGraph&,
                           const CanonicalGraph&) = default;
};

// Stable total order / hashing key for canonical graphs.
using GraphKey = std::vector<std::int64_t>;

GraphKey graph_key(const DecoratedGraph& canonical_graph);

// Brute-force minimization over vertex relabelings compatible with an
// iterated invariant partition (color, in_arity, leg incidence, refined
// neighborhoods).  Within each vertex the symmetric slot groups are sorted
// and the antisymmetric white pair is put in order, tracking its sign.
// The candidate count is capped by soft_limit(); raises LimitExceeded.
CanonicalGraph canonical_form(const DecoratedGraph& g);

// Relabel vertices/ordering of g by an arbitrary permutation while keeping
// the abstract graph fixed; used by tests to probe presentation invariance.
DecoratedGraph relabeled(const DecoratedGraph& g,
                         const std::vector<int>& new_ids,
                         const std::vector<int>& new_ordering);

}  // namespace qgraph

#endif  // QGRAPH_CANONICAL_HPP

#ifndef QGRAPH_COBOUNDARY_HPP
#define QGRAPH_COBOUNDARY_HPP

#include "qgraph/cochain.hpp"

namespace qgraph {

// The graph coboundary operator.  Vertices of valency 1 and 3 contribute
// nothing; a black vertex of in_arity >= 3 splits over ordered subset pairs;
// a bivalent black vertex produces the two-black chain minus the composite
// white vertex; a composite white produces a bivalent black on its input
// minus one on its output; a white vertex of in_arity 3 produces the
// univalent-black prolongation to in_arity 4, a bivalent black on every
// incoming slot, and minus a bivalent black on the output.  Terms containing
// an edge from an in_arity-0 black vertex into a black vertex are dropped.
// Throws UnspecifiedDifferential when a white vertex of in_arity >= 4 is
// present in the input.
Cochain coboundary(const Cochain& c);
Cochain coboundary(const DecoratedGraph& g, const Rat& coeff = 1);

// Replace every composite (in_arity-1) white vertex by a white vertex of
// in_arity 3 carrying two fresh in_arity-0 black vertices on its last two
// slots, multiplying the coefficient by 1/2 per replacement.  The new black
// vertices take the leading ordering positions.
Cochain expand_composites(const Cochain& c);
Cochain expand_composites(const DecoratedGraph& g, const Rat& coeff = 1);

// Inverse of the expansion where it applies: every white in_arity-3 vertex
// whose last two slots are fed by in_arity-0 black vertices is replaced by a
// composite white vertex, with coefficient factor 2 and the black-reordering
// sign.  Other graphs pass through unchanged.
Cochain contract_composites(const Cochain& c);

}  // namespace qgraph

#endif  // QGRAPH_COBOUNDARY_HPP

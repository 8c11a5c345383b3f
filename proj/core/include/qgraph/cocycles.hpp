#ifndef QGRAPH_COCYCLES_HPP
#define QGRAPH_COCYCLES_HPP

#include "qgraph/cochain.hpp"

#include <vector>

namespace qgraph {

// The closed cocycle of the loop sector: the cycle of 2n-1 composite white
// vertices with coefficient -binomial(4n-3, 2n-1).
Cochain pi(int n);

// The arc operators on cyclic bivalent graphs (no legs, every in_arity 1).
// An arc is a maximal run of black vertices ending at a white vertex; the
// cochain overloads extend term by term.  All three throw NotCyclic off
// their domain.
//
// op_a recolors one black vertex white, summed over the black vertices,
// each term signed by the parity of the black vertices preceding the
// recolored one in the orientation.
Cochain op_a(const DecoratedGraph& g, const Rat& coeff = 1);
Cochain op_a(const Cochain& c);

// op_b rescales by 1/k where k is the number of arcs of nonzero length.
// Throws NoNonzeroArcs when the cycle has no white vertex (the arc has no
// boundary) or no black vertex (every arc is empty).
Cochain op_b(const DecoratedGraph& g, const Rat& coeff = 1);
Cochain op_b(const Cochain& c);

// op_c shortens one nonzero arc, summed over such arcs: the black vertex
// adjacent to the arc's bounding white vertex, in edge direction, is
// removed, with the same preceding-blacks sign as op_a.  Throws
// NoNonzeroArcs when no arc has positive length.
Cochain op_c(const DecoratedGraph& g, const Rat& coeff = 1);
Cochain op_c(const Cochain& c);

// The primitive whose coboundary is pi(n): the sum of the 2n-1 stages
// obtained by iterating op_c . op_b . op_a from the pure-black cycle of
// 4n-3 vertices numbered along the flow.  Stage m carries m-1 white and
// 4n-1-2m black vertices.
Cochain psi(int n);

// Left-comb tree of n-1 trivalent black vertices: in-leg 1 on the deepest
// vertex, the remaining legs labeled by perm (a permutation of 2..n read
// along the comb), one out-leg.  Throws BadPermutation.
CanonicalGraph b_graph(int n, const std::vector<int>& perm);

// Directed cycle of n trivalent black vertices, one in-leg each: leg 1 on
// the first vertex fixes the cyclic class representative, the rest labeled
// by perm (a permutation of 2..n read along the flow).  Throws
// BadPermutation.
CanonicalGraph c_graph(int n, const std::vector<int>& perm);

}  // namespace qgraph

#endif  // QGRAPH_COCYCLES_HPP

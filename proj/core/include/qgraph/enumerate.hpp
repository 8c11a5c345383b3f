#ifndef QGRAPH_ENUMERATE_HPP
#define QGRAPH_ENUMERATE_HPP

#include "qgraph/canonical.hpp"
#include "qgraph/classify.hpp"

#include <vector>

namespace qgraph {

// Complete duplicate-free list of connected valid graphs with the requested
// grading, restricted to one subcomplex: n_in in-legs, m_out out-legs,
// k_black black vertices, and one white vertex per entry of white_profile
// (the entry is its in_arity).  Black arities are free within the subcomplex
// constraints; results are deduplicated by canonical form, graphs of
// canonical sign 0 are dropped, and the list is sorted by canonical key.
//
// For G4 the composite-free graphs of Laplacian weight 0 are excluded: by
// the acyclicity lemma those are cyclic arrangements of expanded bivalent
// white vertices (or vanish by the white symmetries), so they are G2
// elements in expanded presentation rather than genuine G4 generators.
//
// Throws LimitExceeded when the backtracking search grows past soft_limit().
std::vector<CanonicalGraph> enumerate_basis(int n_in, int m_out, int k_black,
                                            const std::vector<int>& white_profile,
                                            Subcomplex subcomplex);

}  // namespace qgraph

#endif  // QGRAPH_ENUMERATE_HPP

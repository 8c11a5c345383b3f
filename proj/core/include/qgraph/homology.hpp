#ifndef QGRAPH_HOMOLOGY_HPP
#define QGRAPH_HOMOLOGY_HPP

#include "qgraph/cochain.hpp"
#include "qgraph/enumerate.hpp"
#include "qgraph/linalg.hpp"

#include <functional>
#include <vector>

namespace qgraph {

// Spanning set of one graded sector.  The grading k means: black count for
// G3 and G4, effective degree (blacks plus twice the composite whites) for
// G2, and 1 for the G1 generator.  G2 unions the (blacks, composites)
// splittings of k; G4 unions the white profiles of in_arity >= 3 compatible
// with the slot budget, so its sectors feed the d0 machinery directly.
std::vector<CanonicalGraph> sector_basis(Subcomplex sc, int n_in, int m_out,
                                         int k);

// Rows spanning the 3-term white-slot relations over `basis`: for every
// white vertex of in_arity r >= 3 the cyclic relation in the last three
// slots, and for r >= 4 additionally the cyclic relation in slots
// (r-3, r-1, r).  Columns follow the order of `basis`.  Throws
// BasisNotClosed when a reslotted graph falls outside the basis.
RatMatrix relation_matrix(const std::vector<CanonicalGraph>& basis);

// Matrix of `op` from the source to the target basis (rows = target, columns
// = source).  Throws BasisNotClosed when an image leaves the target span.
RatMatrix operator_matrix(const std::vector<CanonicalGraph>& source,
                          const std::vector<CanonicalGraph>& target,
                          const std::function<Cochain(const DecoratedGraph&)>& op);

struct BettiBreakdown {
    long long dim_space = 0;
    long long rank_in = 0;
    long long rank_out = 0;
    long long betti = 0;
};

// Cohomology dimension of the sector at grading k: dim ker - dim im.  G1,
// G2, G3 use the full coboundary; G4 uses d0 and reports the E1-page
// dimension on the free span.
BettiBreakdown betti_breakdown(Subcomplex sc, int n_in, int m_out, int k);
long long betti(Subcomplex sc, int n_in, int m_out, int k);

struct CoboundaryCertificate {
    bool is_coboundary = false;
    Cochain primitive;
    // rank of the augmented system without and with z; equal exactly when z
    // is a coboundary modulo the relation subspace
    long long rank_without = 0;
    long long rank_with = 0;
};

// Solves coboundary(x) = z over the enumerated lower sector, modulo the
// S2/S3 relation subspace of the target sector.  In relation-free sectors
// the returned primitive satisfies coboundary(primitive) = z exactly.
// Throws NotACocycle when coboundary(z) != 0, and InvalidGraph when z mixes
// effective degrees.
CoboundaryCertificate is_coboundary(const Cochain& z);

}  // namespace qgraph

#endif  // QGRAPH_HOMOLOGY_HPP

#ifndef QGRAPH_FILTRATION_HPP
#define QGRAPH_FILTRATION_HPP

#include "qgraph/classify.hpp"
#include "qgraph/cochain.hpp"

namespace qgraph {

// Leading part of the coboundary with respect to the bivalent-black count:
// every branch (k, alpha, beta) is lengthened by one bivalent black vertex
// with coefficient (-1)^|alpha| (1 - (-1)^(k+|alpha|+|beta|)) / 2, the branch
// rotated to the front of the orientation in flow order.  Defined on G4
// graphs without composite white vertices.
Cochain coboundary_d0(const Cochain& c);
Cochain coboundary_d0(const DecoratedGraph& g, const Rat& coeff = 1);

// Contracting homotopy: every branch of nonzero length is shortened by one
// bivalent black vertex with coefficient
// (-1)^|alpha| (1 + (-1)^(k+|alpha|+|beta|)) / 2; zero-length branches
// contribute nothing.
Cochain homotopy_h(const Cochain& c);
Cochain homotopy_h(const DecoratedGraph& g, const Rat& coeff = 1);

struct LaplacianResult {
    long long eigenvalue = 0;
    bool is_diagonal = false;
};

// Evaluates (h d0 + d0 h) on g and checks it equals eigenvalue * g with
// eigenvalue = n1 + n2 + n3: branches of nonzero length, direct edges
// between multivalent black and white vertices, and legs on white vertices.
// Throws NotDiagonal when the computed cochain is not that multiple.
LaplacianResult laplacian(const DecoratedGraph& g);

// The predicted eigenvalue n1 + n2 + n3 read off the branch decomposition.
long long laplacian_weight(const DecoratedGraph& g);

}  // namespace qgraph

#endif  // QGRAPH_FILTRATION_HPP

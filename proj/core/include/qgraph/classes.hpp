#ifndef QGRAPH_CLASSES_HPP
#define QGRAPH_CLASSES_HPP

#include <vector>

#include "qgraph/lie.hpp"
#include "qgraph/superfun.hpp"
#include "qgraph/tensor.hpp"

namespace qgraph {

enum class ClassSeries { B, C };

// Constant invariant tensors built from ad-matrix products:
//   B_n(a_1 .. a_{n+1})^b = (ad_{a_1} ... ad_{a_n})^b_{a_{n+1}},  type (1, n+1)
//   C_n(a_1 .. a_n)       = tr(ad_{a_1} ... ad_{a_n}),            type (0, n)
// The lower display slots carry the arguments in label order (1, perm...):
// display slot i holds the argument labelled l_i.  perm permutes 2..n+1 for
// the B series and 2..n for C; empty means the identity.  Throws
// BadPermutation on a malformed perm.
SuperTensor bc_class(ClassSeries series, int n, const LieAlgebraData& L,
                     const std::vector<int>& perm = {});

// Signed trace of the (4n-3)-th power of the endomorphism L^j_i = f_{ia}^j c^a.
// Closedness under the induced differential is asserted.
SuperFunction a_class(int n, const LieAlgebraData& L);

// sum tr(ad_{a_1} ... ad_{a_k}) c^{a_1} ... c^{a_k} over all index tuples.
SuperFunction primitive_ce_class(int k, const LieAlgebraData& L);

struct ExactnessResult {
    bool exact = false;
    SuperTensor primitive;  // a preimage under the differential when exact
};

// Decides whether t lies in the image of the induced differential by solving
// degree by degree over the finite-dimensional component spaces.  Requires t
// closed (NotACocycle) over the coordinates of L (ParityMismatch).
ExactnessResult is_exact(const SuperTensor& t, const LieAlgebraData& L);
ExactnessResult is_exact(const SuperFunction& f, const LieAlgebraData& L);

}  // namespace qgraph

#endif  // QGRAPH_CLASSES_HPP

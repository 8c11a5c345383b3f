#ifndef QGRAPH_LIE_HPP
#define QGRAPH_LIE_HPP

#include "qgraph/linalg.hpp"
#include "qgraph/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qgraph {

// Structure constants [t_a, t_b] = f_{ab}^c t_c with generator parities
// (all 0 for an ordinary Lie algebra).  Indices are 0-based throughout.
struct LieAlgebraData {
    int dim = 0;
    std::vector<int> parities;
    std::map<std::array<int, 3>, Rat> f;  // {a, b, c} -> f_{ab}^c, zero-free

    Rat structure(int a, int b, int c) const;
};

// Graded antisymmetry and the graded Jacobi identity; throws JacobiFailure
// naming the first violating triple.
void validate_algebra(const LieAlgebraData& L);

// (ad_a)^c_b = f_{ab}^c as a dim x dim matrix (row c, column b).
RatMatrix ad_matrix(const LieAlgebraData& L, int a);

// K_ab = str(ad_a ad_b); plain trace when all generators are even.
RatMatrix killing_form(const LieAlgebraData& L);

LieAlgebraData abelian_algebra(int dim);
LieAlgebraData affine2_algebra();      // [e1, e2] = e2
LieAlgebraData heisenberg3_algebra();  // [e1, e2] = e3 central
LieAlgebraData so3_algebra();          // [e_i, e_j] = e_k cyclic
LieAlgebraData sl_algebra(int n);      // traceless n x n matrices

// Built-in lookup by name: sl2, sl3, so3, heisenberg3, affine2, abelian<d>.
// Throws std::invalid_argument for unknown names.
LieAlgebraData builtin_algebra(const std::string& name);

// {"dim": d, "parities": [...], "f": [[a, b, c, "p/q"], ...]} with entries
// sorted; loading validates the algebra.
std::string algebra_to_json(const LieAlgebraData& L);
LieAlgebraData algebra_from_json(const std::string& text);

}  // namespace qgraph

#endif  // QGRAPH_LIE_HPP

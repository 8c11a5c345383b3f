#ifndef QGRAPH_TENSOR_HPP
#define QGRAPH_TENSOR_HPP

#include "qgraph/lie.hpp"
#include "qgraph/superfun.hpp"

#include <map>
#include <vector>

namespace qgraph {

// Tensor of type (upper, lower) over graded coordinates: the component key
// lists the lower indices first, then the upper ones; values are
// SuperFunctions over the same coordinates.  Storage is zero-free.
class SuperTensor {
  public:
    SuperTensor() = default;
    SuperTensor(std::vector<int> coordinate_parities, int upper, int lower);

    int dim() const { return static_cast<int>(parities_.size()); }
    int upper_count() const { return upper_; }
    int lower_count() const { return lower_; }
    const std::vector<int>& coordinate_parities() const { return parities_; }

    void add_component(const std::vector<int>& key, const SuperFunction& f);
    // zero function when absent
    SuperFunction component(const std::vector<int>& key) const;
    const std::map<std::vector<int>, SuperFunction>& components() const {
        return components_;
    }
    bool zero() const { return components_.empty(); }

    SuperTensor& operator+=(const SuperTensor& other);
    SuperTensor& operator-=(const SuperTensor& other);
    void scale(const Rat& factor);

    // Function parity plus the parities of the slot indices, when all
    // components agree; -1 when mixed.  The zero tensor reports 0.
    int total_parity() const;

    friend bool operator==(const SuperTensor& a, const SuperTensor& b) {
        return a.upper_ == b.upper_ && a.lower_ == b.lower_ &&
               a.parities_ == b.parities_ && a.components_ == b.components_;
    }

  private:
    std::vector<int> parities_;
    int upper_ = 0;
    int lower_ = 0;
    std::map<std::vector<int>, SuperFunction> components_;
};

// A type (1,0) tensor of odd total parity; the homological field Q lives
// here.
struct OddVectorField {
    SuperTensor field;
};

// Q^d = 1/2 c^b c^a f_ab^d over coordinates of parity e(t_a)+1; the algebra
// is validated first (JacobiFailure).
OddVectorField q_from_lie(const LieAlgebraData& L);

// Q(f) = Q^d times the left derivative of f.
SuperFunction apply_field(const OddVectorField& q, const SuperFunction& f);

// Q(Q^d) = 0 for every d; equivalent to the Jacobi identity.
bool square_zero(const OddVectorField& q);

// Type (1, order) tensor of iterated left derivatives of a (1,0) field:
// component (j_1 .. j_order, d) = d/dc^{j_1} ... d/dc^{j_order} field^d,
// the innermost derivative taken first.
SuperTensor derivative_tensor(const SuperTensor& field, int order);

// The odd derivation L_q: acts on component functions through q and on
// covector/vector slots through the derivative matrix of q, with Koszul
// transport past the preceding slots.  Throws ParityMismatch when the
// coordinate contexts differ.
SuperTensor lie_derivative(const OddVectorField& q, const SuperTensor& t);

// Signed trace of the single upper slot against the last lower slot:
// (1, q) -> (0, q-1), summing (-1)^{e_i} T(.., i, i).  Throws SlotMismatch
// unless the type is (1, q >= 1).
SuperTensor supertrace(const SuperTensor& t);

}  // namespace qgraph

#endif  // QGRAPH_TENSOR_HPP

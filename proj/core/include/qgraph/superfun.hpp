#ifndef QGRAPH_SUPERFUN_HPP
#define QGRAPH_SUPERFUN_HPP

#include "qgraph/rational.hpp"

#include <map>
#include <vector>

namespace qgraph {

// Polynomial in graded coordinates c^0 .. c^{d-1} with the given coordinate
// parities.  Monomials are kept in ascending generator order; reordering
// picks up Koszul signs and odd coordinates square to zero.  The
// default-constructed value is the context-free zero, absorbed by any
// operation; otherwise both operands must carry identical parity tables.
class SuperFunction {
  public:
    using Monomial = std::vector<int>;  // exponent per coordinate

    SuperFunction() = default;
    explicit SuperFunction(std::vector<int> coordinate_parities)
        : parities_(std::move(coordinate_parities)) {}

    static SuperFunction constant(std::vector<int> coordinate_parities,
                                  const Rat& value);
    static SuperFunction coordinate(std::vector<int> coordinate_parities,
                                    int index);

    const std::vector<int>& coordinate_parities() const { return parities_; }
    bool zero() const { return terms_.empty(); }

    void add_term(const Monomial& monomial, const Rat& coeff);
    SuperFunction& operator+=(const SuperFunction& other);
    SuperFunction& operator-=(const SuperFunction& other);
    SuperFunction operator*(const SuperFunction& other) const;
    void scale(const Rat& factor);

    // 0 or 1 when every monomial has the same parity (0 for the zero
    // function), -1 when mixed.
    int parity() const;
    // Total-degree decomposition; parts share the parity table.
    std::map<int, SuperFunction> degree_parts() const;

    // Derivative acting from the left.
    SuperFunction left_derivative(int index) const;

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coefficient(const Monomial& monomial) const;

    friend bool operator==(const SuperFunction& a, const SuperFunction& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::vector<int> parities_;
    std::map<Monomial, Rat> terms_;
};

// All exponent vectors of the given total degree, odd coordinates capped at
// exponent 1.
std::vector<SuperFunction::Monomial> monomials_of_degree(
    const std::vector<int>& parities, int degree);

}  // namespace qgraph

#endif  // QGRAPH_SUPERFUN_HPP

#ifndef QGRAPH_COCHAIN_HPP
#define QGRAPH_COCHAIN_HPP

#include "qgraph/canonical.hpp"
#include "qgraph/rational.hpp"

#include <map>
#include <utility>

namespace qgraph {

// A finite rational combination of canonical graphs, keyed by the canonical
// encoding.  Adding a term canonicalizes the graph, multiplies the
// coefficient by the derivation sign, drops graphs of sign 0, and erases
// cancellations, so a Cochain never stores zero coefficients.  All graphs in
// one cochain must share the leg grading (n_in, m_out).
class Cochain {
  public:
    using Term = std::pair<DecoratedGraph, Rat>;

    void add(const DecoratedGraph& g, const Rat& coeff);
    void add_canonical(const CanonicalGraph& cg, const Rat& coeff);
    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    void scale(const Rat& factor);

    bool zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<GraphKey, Term>& terms() const { return terms_; }

    // Coefficient of the canonical class of g (0 when absent); the sign of
    // bringing g to canonical form is applied.
    Rat coefficient(const DecoratedGraph& g) const;

    // The common effective degree (blacks plus twice the composite whites)
    // when every term agrees on it, otherwise -1; -1 also for zero cochains.
    int homogeneous_degree() const;

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<GraphKey, Term> terms_;
};

}  // namespace qgraph

#endif  // QGRAPH_COCHAIN_HPP

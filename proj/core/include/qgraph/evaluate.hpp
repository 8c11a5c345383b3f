#ifndef QGRAPH_EVALUATE_HPP
#define QGRAPH_EVALUATE_HPP

#include "qgraph/cochain.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/lie.hpp"
#include "qgraph/tensor.hpp"

namespace qgraph {

// What to do with white vertices during evaluation: reject the graph or send
// the whole term to zero.
enum class WhitePolicy { reject, zero };

// Pairs each black vertex with the derivative tensor of Q of its in_arity
// (zero from arity 3 on), multiplies the factors in orientation order,
// contracts along every edge, and sorts the leftover covector slots by
// in-leg label and vector slots by out-leg label.  The result has type
// (m_out, n_in).  Throws WhiteVertexPresent under WhitePolicy::reject.
SuperTensor evaluate_graph(const DecoratedGraph& g, const OddVectorField& q,
                           WhitePolicy policy = WhitePolicy::reject);
SuperTensor evaluate_graph(const Cochain& c, const OddVectorField& q,
                           WhitePolicy policy = WhitePolicy::reject);

// Convenience forms that build Q from the algebra (JacobiFailure when the
// structure constants are bad).
SuperTensor evaluate_graph(const DecoratedGraph& g, const LieAlgebraData& L,
                           WhitePolicy policy = WhitePolicy::reject);
SuperTensor evaluate_graph(const Cochain& c, const LieAlgebraData& L,
                           WhitePolicy policy = WhitePolicy::reject);

}  // namespace qgraph

#endif  // QGRAPH_EVALUATE_HPP

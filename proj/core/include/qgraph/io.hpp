#ifndef QGRAPH_IO_HPP
#define QGRAPH_IO_HPP

#include "qgraph/cochain.hpp"
#include "qgraph/tensor.hpp"

#include <string>

namespace qgraph {

// JSON layout:
//   {"vertices": [{"id": 0, "color": "black", "in_arity": 2}, ...],
//    "edges": [[src, dst, slot], ...],
//    "in_legs": {"1": [vertex, slot], ...},
//    "out_legs": {"1": vertex, ...},
//    "ordering": [ids]}
// Serialization is deterministic: keys sorted, slots 1-based.  Parsing
// validates the graph and throws InvalidGraph on malformed input.
std::string graph_to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const std::string& text);

// {"n_in": n, "m_out": m, "degree": k, "terms": [{"coeff": "p/q",
//  "graph": {...}}, ...]} with terms in canonical key order; degree is the
// common effective degree or -1 when mixed.
std::string cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const std::string& text);

// GraphViz text: black vertices filled, white vertices hollow, legs drawn
// as point-shaped half-edge stubs, edges labeled by their input slot.
std::string graph_to_dot(const DecoratedGraph& g);

// {"lower": q, "upper": p, "parities": [...], "components": [{"key": [...],
//  "terms": [{"monomial": [exponents], "coeff": "p/q"}, ...]}, ...]} with
// components in key order and monomials sorted.
std::string tensor_to_json(const SuperTensor& t);

}  // namespace qgraph

#endif  // QGRAPH_IO_HPP

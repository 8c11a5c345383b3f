#ifndef QGRAPH_GRAPH_HPP
#define QGRAPH_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qgraph {

enum class Color { Black, White };

// A vertex carries a color and a number of incoming slots.  Every vertex has
// exactly one outgoing line (an edge or an out-leg).  Black vertices accept
// any in_arity >= 0 and their slots are totally symmetric; white vertices
// have in_arity 1 (the composite bivalent vertex) or in_arity >= 3, with the
// symmetries of their last two slots antisymmetric and the leading n-3 slots
// symmetric.
struct VertexSpec {
    int id = 0;
    Color color = Color::Black;
    int in_arity = 0;

    friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

// Directed edge into input slot `slot` (1-based) of `dst`.
struct Edge {
    int src = 0;
    int dst = 0;
    int slot = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A decorated graph with explicit orientation: `ordering` lists every vertex
// id once; orientations differing by an even permutation of the black
// vertices coincide, and swapping two blacks flips the overall sign.
struct DecoratedGraph {
    std::vector<VertexSpec> vertices;
    std::vector<Edge> edges;
    std::map<int, std::pair<int, int>> in_legs;  // label -> (vertex, slot)
    std::map<int, int> out_legs;                 // label -> vertex
    std::vector<int> ordering;

    const VertexSpec* find_vertex(int id) const;
    int n_in() const { return static_cast<int>(in_legs.size()); }
    int m_out() const { return static_cast<int>(out_legs.size()); }
    int black_count() const;
    int white_count() const;
    // Blacks plus twice the composite (in_arity-1) whites; the grading the
    // coboundary raises by exactly one.
    int effective_degree() const;

    friend bool operator==(const DecoratedGraph&,
                           const DecoratedGraph&) = default;
};

struct ValidityReport {
    bool ok = true;
    bool connected = true;
    std::vector<std::string> problems;
};

// Structural checks: unique ids, ordering a permutation of the ids, white
// arities in {1} or >= 3, every input slot filled exactly once, exactly one
// outgoing line per vertex, leg labels contiguous from 1, and no edge from an
// in_arity-0 black into a black vertex.  Connectivity is reported, not
// enforced.
ValidityReport validate(const DecoratedGraph& g);

// validate() and throw InvalidGraph on the first problem.
void require_valid(const DecoratedGraph& g);

bool is_connected(const DecoratedGraph& g);

// True when some edge runs from an in_arity-0 black vertex into a black
// vertex.  Such terms produced by an operator are dropped as zero.
bool violates_a_rule(const DecoratedGraph& g);

// Parity of the permutation taking `from` to `to` restricted to black
// vertices; +1 or -1.  Both sequences must contain the same vertex set.
int black_permutation_sign(const DecoratedGraph& g,
                           const std::vector<int>& from,
                           const std::vector<int>& to);

}  // namespace qgraph

#endif  // QGRAPH_GRAPH_HPP

#include "qgraph/cocycles.hpp"

#include "qgraph/errors.hpp"
#include "qgraph/rational.hpp"

#include <algorithm>
#include <map>

namespace qgraph {

namespace {

// src vertex of the single edge into (dst, slot 1) of a cyclic graph
std::map<int, int> feeder_map(const DecoratedGraph& g) {
    std::map<int, int> feeder;
    for (const auto& e : g.edges)
        feeder[e.dst] = e.src;
    return feeder;
}

void require_cyclic(const DecoratedGraph& g) {
    require_valid(g);
    if (!g.in_legs.empty() || !g.out_legs.empty())
        throw NotCyclic("the graph has legs");
    for (const auto& v : g.vertices)
        if (v.in_arity != 1)
            throw NotCyclic("a vertex is not bivalent");
    if (!is_connected(g))
        throw NotCyclic("the graph is not a single cycle");
}

int blacks_before(const DecoratedGraph& g, int id) {
    int count = 0;
    for (int v : g.ordering) {
        if (v == id)
            break;
        if (g.find_vertex(v)->color == Color::Black)
            ++count;
    }
    return count;
}

int nonzero_arc_count(const DecoratedGraph& g,
                      const std::map<int, int>& feeder) {
    int k = 0;
    for (const auto& v : g.vertices)
        if (v.color == Color::White &&
            g.find_vertex(feeder.at(v.id))->color == Color::Black)
            ++k;
    return k;
}

}  // namespace

Cochain pi(int n) {
    const int whites = 2 * n - 1;
    DecoratedGraph g;
    for (int i = 0; i < whites; ++i) {
        g.vertices.push_back({i, Color::White, 1});
        g.edges.push_back({i, (i + 1) % whites, 1});
        g.ordering.push_back(i);
    }
    Cochain out;
    out.add(g, -Rat(binomial(4 * n - 3, 2 * n - 1)));
    return out;
}

Cochain op_a(const DecoratedGraph& g, const Rat& coeff) {
    require_cyclic(g);
    Cochain out;
    for (const auto& v : g.vertices) {
        if (v.color != Color::Black)
            continue;
        const int sign = blacks_before(g, v.id) % 2 == 0 ? 1 : -1;
        DecoratedGraph term = g;
        for (auto& w : term.vertices)
            if (w.id == v.id)
                w.color = Color::White;
        out.add(term, coeff * sign);
    }
    return out;
}

Cochain op_b(const DecoratedGraph& g, const Rat& coeff) {
    require_cyclic(g);
    const auto feeder = feeder_map(g);
    if (g.white_count() == 0)
        throw NoNonzeroArcs("the cycle has no white vertices");
    const int k = nonzero_arc_count(g, feeder);
    if (k == 0)
        throw NoNonzeroArcs("every arc is empty");
    Cochain out;
    out.add(g, coeff / k);
    return out;
}

Cochain op_c(const DecoratedGraph& g, const Rat& coeff) {
    require_cyclic(g);
    const auto feeder = feeder_map(g);
    if (g.white_count() == 0)
        throw NoNonzeroArcs("the cycle has no white vertices");
    if (nonzero_arc_count(g, feeder) == 0)
        throw NoNonzeroArcs("every arc is empty");
    Cochain out;
    for (const auto& v : g.vertices) {
        if (v.color != Color::White)
            continue;
        const int gone = feeder.at(v.id);
        if (g.find_vertex(gone)->color != Color::Black)
            continue;
        const int sign = blacks_before(g, gone) % 2 == 0 ? 1 : -1;
        DecoratedGraph term;
        for (const auto& w : g.vertices)
            if (w.id != gone)
                term.vertices.push_back(w);
        for (const auto& e : g.edges) {
            if (e.src == gone)
                continue;
            Edge copy = e;
            if (copy.dst == gone)
                copy.dst = v.id;
            term.edges.push_back(copy);
        }
        for (int id : g.ordering)
            if (id != gone)
                term.ordering.push_back(id);
        out.add(term, coeff * sign);
    }
    return out;
}

Cochain op_a(const Cochain& c) {
    Cochain out;
    for (const auto& [key, term] : c.terms())
        out += op_a(term.first, term.second);
    return out;
}

Cochain op_b(const Cochain& c) {
    Cochain out;
    for (const auto& [key, term] : c.terms())
        out += op_b(term.first, term.second);
    return out;
}

Cochain op_c(const Cochain& c) {
    Cochain out;
    for (const auto& [key, term] : c.terms())
        out += op_c(term.first, term.second);
    return out;
}

Cochain psi(int n) {
    const int blacks = 4 * n - 3;
    DecoratedGraph stage1;
    for (int i = 0; i < blacks; ++i) {
        stage1.vertices.push_back({i, Color::Black, 1});
        stage1.edges.push_back({i, (i + 1) % blacks, 1});
        stage1.ordering.push_back(i);
    }
    Cochain stage;
    stage.add(stage1, 1);
    Cochain out = stage;
    for (int m = 2; m <= 2 * n - 1; ++m) {
        stage = op_c(op_b(op_a(stage)));
        out += stage;
    }
    return out;
}

namespace {

void require_tail_permutation(int n, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != n - 1)
        throw BadPermutation("expected a permutation of 2..n");
    std::vector<bool> seen(n + 1, false);
    for (int x : perm) {
        if (x < 2 || x > n || seen[x])
            throw BadPermutation("expected a permutation of 2..n");
        seen[x] = true;
    }
}

}  // namespace

CanonicalGraph b_graph(int n, const std::vector<int>& perm) {
    if (n < 2)
        throw BadPermutation("b_graph needs n >= 2");
    require_tail_permutation(n, perm);
    DecoratedGraph g;
    for (int i = 0; i < n - 1; ++i) {
        g.vertices.push_back({i, Color::Black, 2});
        g.ordering.push_back(i);
        if (i > 0)
            g.edges.push_back({i - 1, i, 2});
    }
    g.in_legs[1] = {0, 2};
    for (int i = 0; i < n - 1; ++i)
        g.in_legs[perm[i]] = {i, 1};
    g.out_legs[1] = n - 2;
    return canonical_form(g);
}

CanonicalGraph c_graph(int n, const std::vector<int>& perm) {
    if (n < 1)
        throw BadPermutation("c_graph needs n >= 1");
    require_tail_permutation(n, perm);
    DecoratedGraph g;
    for (int i = 0; i < n; ++i) {
        g.vertices.push_back({i, Color::Black, 2});
        g.ordering.push_back(i);
        g.edges.push_back({i, (i + 1) % n, 2});
    }
    g.in_legs[1] = {0, 1};
    for (int i = 1; i < n; ++i)
        g.in_legs[perm[i - 1]] = {i, 1};
    return canonical_form(g);
}

}  // namespace qgraph

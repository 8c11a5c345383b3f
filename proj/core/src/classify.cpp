#include "qgraph/classify.hpp"

#include "qgraph/errors.hpp"

#include <map>

namespace qgraph {

Subcomplex classify(const DecoratedGraph& g) {
    require_valid(g);
    if (!is_connected(g))
        throw Disconnected("classify needs a connected graph");

    if (g.vertices.size() == 1) {
        const VertexSpec& v = g.vertices.front();
        if (v.color == Color::Black && v.in_arity == 0)
            return Subcomplex::G1;
    }

    bool all_bivalent = true;
    bool all_black_internal = true;
    for (const auto& v : g.vertices) {
        if (v.in_arity != 1)
            all_bivalent = false;
        if (v.color != Color::Black || v.in_arity < 2)
            all_black_internal = false;
    }
    if (all_bivalent)
        return Subcomplex::G2;
    if (all_black_internal)
        return Subcomplex::G3;
    return Subcomplex::G4;
}

int mark_degree(Mark m) {
    return m == Mark::White ? 1 : 0;
}

namespace {

bool is_bivalent_black(const VertexSpec& v) {
    return v.color == Color::Black && v.in_arity == 1;
}

}  // namespace

std::vector<Branch> branches(const DecoratedGraph& g) {
    if (classify(g) != Subcomplex::G4)
        throw WrongSubcomplex("branches applies to G4 graphs");
    for (const auto& v : g.vertices)
        if (v.color == Color::White && v.in_arity == 1)
            throw WrongSubcomplex(
                "composite white vertices must be expanded before the "
                "branch decomposition");

    std::map<int, const VertexSpec*> spec;
    for (const auto& v : g.vertices)
        spec[v.id] = &v;
    struct Out {
        bool is_leg = false;
        int leg = 0;
        int dst = -1;
        int slot = 0;
    };
    std::map<int, Out> out;
    for (const auto& e : g.edges)
        out[e.src] = {false, 0, e.dst, e.slot};
    for (const auto& [label, vid] : g.out_legs)
        out[vid] = {true, label, -1, 0};

    // Walk from an entry point (in-leg target or the output of a multivalent
    // vertex) through the bivalent black string to whatever terminates it.
    auto walk = [&](Branch b, int vertex, int slot) {
        while (is_bivalent_black(*spec.at(vertex))) {
            b.interior.push_back(vertex);
            const Out& o = out.at(vertex);
            if (o.is_leg) {
                b.end = {true, o.leg, -1, 0};
                b.beta = Mark::Leg;
                return b;
            }
            vertex = o.dst;
            slot = o.slot;
        }
        b.end = {false, 0, vertex, slot};
        b.beta = spec.at(vertex)->color == Color::White ? Mark::White
                                                        : Mark::Black;
        return b;
    };

    std::vector<Branch> result;
    for (const auto& [label, target] : g.in_legs) {
        Branch b;
        b.start = {true, label, -1, 0};
        b.alpha = Mark::Leg;
        result.push_back(walk(std::move(b), target.first, target.second));
    }
    for (const auto& v : g.vertices) {
        if (is_bivalent_black(v))
            continue;
        Branch b;
        b.start = {false, 0, v.id, 0};
        b.alpha = v.color == Color::White ? Mark::White : Mark::Black;
        b.alpha_univalent = v.color == Color::Black && v.in_arity == 0;
        const Out& o = out.at(v.id);
        if (o.is_leg) {
            b.end = {true, o.leg, -1, 0};
            b.beta = Mark::Leg;
            result.push_back(std::move(b));
        } else {
            result.push_back(walk(std::move(b), o.dst, o.slot));
        }
    }
    return result;
}

}  // namespace qgraph

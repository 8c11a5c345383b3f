#include "qgraph/coboundary.hpp"

#include "qgraph/errors.hpp"

#include <algorithm>
#include <map>

namespace qgraph {

namespace {

// Local rewiring around one acted vertex: v may be removed or retyped, new
// vertices appear, edges into v are rerouted slot-by-slot, and v's single
// output may move to a new carrier.  Wires are added verbatim after the
// rerouting, so they always name final endpoints.
struct Surgery {
    int v = -1;
    bool remove_v = false;
    int retype_arity = -1;
    std::vector<VertexSpec> added;
    std::vector<Edge> wires;
    std::map<int, std::pair<int, int>> in_map;
    int out_carrier = -1;
    std::vector<int> ordering;
};

DecoratedGraph apply_surgery(const DecoratedGraph& g, const Surgery& s) {
    DecoratedGraph out;
    for (const auto& u : g.vertices) {
        if (u.id == s.v) {
            if (s.remove_v)
                continue;
            int arity = s.retype_arity >= 0 ? s.retype_arity : u.in_arity;
            out.vertices.push_back({u.id, u.color, arity});
        } else {
            out.vertices.push_back(u);
        }
    }
    for (const auto& u : s.added)
        out.vertices.push_back(u);
    for (const auto& e : g.edges) {
        int src = e.src, dst = e.dst, slot = e.slot;
        if (src == s.v && s.out_carrier != -1)
            src = s.out_carrier;
        if (dst == s.v) {
            auto [d, t] = s.in_map.at(e.slot);
            dst = d;
            slot = t;
        }
        out.edges.push_back({src, dst, slot});
    }
    for (const auto& e : s.wires)
        out.edges.push_back(e);
    for (const auto& [label, t] : g.in_legs) {
        if (t.first == s.v)
            out.in_legs[label] = s.in_map.at(t.second);
        else
            out.in_legs[label] = t;
    }
    for (const auto& [label, u] : g.out_legs)
        out.out_legs[label] =
            (u == s.v && s.out_carrier != -1) ? s.out_carrier : u;
    out.ordering = s.ordering;
    return out;
}

int max_vertex_id(const DecoratedGraph& g) {
    int m = -1;
    for (const auto& v : g.vertices)
        m = std::max(m, v.id);
    return m;
}

std::vector<int> ordering_without(const std::vector<int>& ordering, int v) {
    std::vector<int> rest;
    for (int id : ordering)
        if (id != v)
            rest.push_back(id);
    return rest;
}

std::vector<int> prepend(std::vector<int> front, const std::vector<int>& rest) {
    front.insert(front.end(), rest.begin(), rest.end());
    return front;
}

std::map<int, std::pair<int, int>> identity_in_map(int v, int arity) {
    std::map<int, std::pair<int, int>> m;
    for (int s = 1; s <= arity; ++s)
        m[s] = {v, s};
    return m;
}

void add_term(Cochain& out, const DecoratedGraph& g, const Rat& coeff) {
    if (!violates_a_rule(g))
        out.add(g, coeff);
}

void coboundary_into(const DecoratedGraph& g, const Rat& coeff,
                     Cochain& out) {
    for (const auto& v : g.vertices)
        if (v.color == Color::White && v.in_arity >= 4)
            throw UnspecifiedDifferential(
                "white vertices of in_arity >= 4 are outside the coboundary "
                "domain");

    const int base_id = max_vertex_id(g) + 1;
    for (const auto& v : g.vertices) {
        std::vector<int> rest = ordering_without(g.ordering, v.id);
        int sigma = 1;
        if (v.color == Color::Black) {
            for (int id : g.ordering) {
                if (id == v.id)
                    break;
                if (g.find_vertex(id)->color == Color::Black)
                    sigma = -sigma;
            }
        }
        const Rat base = coeff * sigma;

        if (v.color == Color::Black && v.in_arity == 1) {
            const int c1 = base_id, c2 = base_id + 1;
            Surgery chain;
            chain.v = v.id;
            chain.remove_v = true;
            chain.added = {{c1, Color::Black, 1}, {c2, Color::Black, 1}};
            chain.wires = {{c1, c2, 1}};
            chain.in_map = {{1, {c1, 1}}};
            chain.out_carrier = c2;
            chain.ordering = prepend({c1, c2}, rest);
            add_term(out, apply_surgery(g, chain), base);

            const int w = base_id;
            Surgery comp;
            comp.v = v.id;
            comp.remove_v = true;
            comp.added = {{w, Color::White, 1}};
            comp.in_map = {{1, {w, 1}}};
            comp.out_carrier = w;
            comp.ordering = prepend({w}, rest);
            add_term(out, apply_surgery(g, comp), -base);
        } else if (v.color == Color::Black && v.in_arity >= 3) {
            const int n = v.in_arity;
            const int u1 = base_id, u2 = base_id + 1;
            for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
                int upper = __builtin_popcount(mask);
                if (upper < 1 || n - upper < 2)
                    continue;
                Surgery split;
                split.v = v.id;
                split.remove_v = true;
                split.added = {{u1, Color::Black, upper + 1},
                               {u2, Color::Black, n - upper}};
                split.wires = {{u2, u1, upper + 1}};
                int p1 = 0, p2 = 0;
                for (int s = 1; s <= n; ++s) {
                    if (mask & (1u << (s - 1)))
                        split.in_map[s] = {u1, ++p1};
                    else
                        split.in_map[s] = {u2, ++p2};
                }
                split.out_carrier = u1;
                split.ordering = prepend({u1, u2}, rest);
                add_term(out, apply_surgery(g, split), base);
            }
        } else if (v.color == Color::White && v.in_arity == 1) {
            const int c = base_id;
            Surgery front;
            front.v = v.id;
            front.added = {{c, Color::Black, 1}};
            front.wires = {{c, v.id, 1}};
            front.in_map = {{1, {c, 1}}};
            front.ordering = prepend({c, v.id}, rest);
            add_term(out, apply_surgery(g, front), base);

            Surgery back;
            back.v = v.id;
            back.added = {{c, Color::Black, 1}};
            back.wires = {{v.id, c, 1}};
            back.in_map = identity_in_map(v.id, 1);
            back.out_carrier = c;
            back.ordering = prepend({c, v.id}, rest);
            add_term(out, apply_surgery(g, back), -base);
        } else if (v.color == Color::White && v.in_arity == 3) {
            const int u = base_id;
            Surgery grow;
            grow.v = v.id;
            grow.retype_arity = 4;
            grow.added = {{u, Color::Black, 0}};
            grow.wires = {{u, v.id, 1}};
            grow.in_map = {{1, {v.id, 2}}, {2, {v.id, 3}}, {3, {v.id, 4}}};
            grow.ordering = prepend({u, v.id}, rest);
            add_term(out, apply_surgery(g, grow), base);

            for (int s = 1; s <= 3; ++s) {
                Surgery ins;
                ins.v = v.id;
                ins.added = {{u, Color::Black, 1}};
                ins.wires = {{u, v.id, s}};
                ins.in_map = identity_in_map(v.id, 3);
                ins.in_map[s] = {u, 1};
                ins.ordering = prepend({u, v.id}, rest);
                add_term(out, apply_surgery(g, ins), base);
            }

            Surgery tail;
            tail.v = v.id;
            tail.added = {{u, Color::Black, 1}};
            tail.wires = {{v.id, u, 1}};
            tail.in_map = identity_in_map(v.id, 3);
            tail.out_carrier = u;
            tail.ordering = prepend({u, v.id}, rest);
            add_term(out, apply_surgery(g, tail), -base);
        }
    }
}

void expand_into(const DecoratedGraph& g, const Rat& coeff, Cochain& out) {
    const VertexSpec* comp = nullptr;
    for (const auto& v : g.vertices)
        if (v.color == Color::White && v.in_arity == 1) {
            comp = &v;
            break;
        }
    if (!comp) {
        out.add(g, coeff);
        return;
    }
    const int b1 = max_vertex_id(g) + 1, b2 = max_vertex_id(g) + 2;
    Surgery exp;
    exp.v = comp->id;
    exp.retype_arity = 3;
    exp.added = {{b1, Color::Black, 0}, {b2, Color::Black, 0}};
    exp.wires = {{b1, comp->id, 3}, {b2, comp->id, 2}};
    exp.in_map = {{1, {comp->id, 1}}};
    exp.ordering = prepend({b1, b2}, g.ordering);
    expand_into(apply_surgery(g, exp), coeff / 2, out);
}

void contract_into(const DecoratedGraph& g, const Rat& coeff, Cochain& out) {
    std::map<int, const VertexSpec*> spec;
    for (const auto& v : g.vertices)
        spec[v.id] = &v;
    auto univalent_feeder = [&](int white, int slot) -> int {
        for (const auto& e : g.edges)
            if (e.dst == white && e.slot == slot) {
                const VertexSpec* s = spec.at(e.src);
                if (s->color == Color::Black && s->in_arity == 0)
                    return e.src;
                return -1;
            }
        return -1;
    };
    for (const auto& v : g.vertices) {
        if (v.color != Color::White || v.in_arity != 3)
            continue;
        int s3 = univalent_feeder(v.id, 3);
        int s2 = univalent_feeder(v.id, 2);
        if (s3 < 0 || s2 < 0)
            continue;
        std::vector<int> rest;
        for (int id : g.ordering)
            if (id != s2 && id != s3)
                rest.push_back(id);
        int sigma =
            black_permutation_sign(g, g.ordering, prepend({s3, s2}, rest));
        DecoratedGraph h;
        for (const auto& u : g.vertices) {
            if (u.id == s2 || u.id == s3)
                continue;
            if (u.id == v.id)
                h.vertices.push_back({u.id, Color::White, 1});
            else
                h.vertices.push_back(u);
        }
        for (const auto& e : g.edges)
            if (e.src != s2 && e.src != s3)
                h.edges.push_back(e);
        h.in_legs = g.in_legs;
        h.out_legs = g.out_legs;
        h.ordering = rest;
        contract_into(h, coeff * 2 * sigma, out);
        return;
    }
    out.add(g, coeff);
}

}  // namespace

Cochain coboundary(const Cochain& c) {
    Cochain out;
    for (const auto& [key, term] : c.terms())
        coboundary_into(term.first, term.second, out);
    return out;
}

Cochain coboundary(const DecoratedGraph& g, const Rat& coeff) {
    require_valid(g);
    Cochain out;
    coboundary_into(g, coeff, out);
    return out;
}

Cochain expand_composites(const Cochain& c) {
    Cochain out;
    for (const auto& [key, term] : c.terms())
        expand_into(term.first, term.second, out);
    return out;
}

Cochain expand_composites(const DecoratedGraph& g, const Rat& coeff) {
    require_valid(g);
    Cochain out;
    expand_into(g, coeff, out);
    return out;
}

Cochain contract_composites(const Cochain& c) {
    Cochain out;
    for (const auto& [key, term] : c.terms())
        contract_into(term.first, term.second, out);
    return out;
}

}  // namespace qgraph

#include "qgraph/graph.hpp"

#include "qgraph/errors.hpp"

#include <algorithm>
#include <set>

namespace qgraph {

const VertexSpec* DecoratedGraph::find_vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id)
            return &v;
    return nullptr;
}

int DecoratedGraph::black_count() const {
    int k = 0;
    for (const auto& v : vertices)
        if (v.color == Color::Black)
            ++k;
    return k;
}

int DecoratedGraph::white_count() const {
    return static_cast<int>(vertices.size()) - black_count();
}

int DecoratedGraph::effective_degree() const {
    int k = 0;
    for (const auto& v : vertices) {
        if (v.color == Color::Black)
            k += 1;
        else if (v.in_arity == 1)
            k += 2;
    }
    return k;
}

ValidityReport validate(const DecoratedGraph& g) {
    ValidityReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };

    std::set<int> ids;
    for (const auto& v : g.vertices) {
        if (!ids.insert(v.id).second)
            fail("duplicate vertex id " + std::to_string(v.id));
        if (v.in_arity < 0)
            fail("negative in_arity at vertex " + std::to_string(v.id));
        if (v.color == Color::White && v.in_arity != 1 && v.in_arity < 3)
            fail("white vertex " + std::to_string(v.id) +
                 " must have in_arity 1 or >= 3");
    }

    std::set<int> ordered(g.ordering.begin(), g.ordering.end());
    if (g.ordering.size() != g.vertices.size() || ordered != ids)
        fail("ordering is not a permutation of the vertex ids");

    // slot -> filled by whom; out-line count per vertex
    std::map<std::pair<int, int>, int> slot_fill;
    std::map<int, int> out_count;
    for (int id : ids)
        out_count[id] = 0;

    auto check_slot = [&](int vid, int slot, const std::string& what) {
        const VertexSpec* v = g.find_vertex(vid);
        if (!v) {
            fail(what + " refers to unknown vertex " + std::to_string(vid));
            return;
        }
        if (slot < 1 || slot > v->in_arity) {
            fail(what + " refers to slot " + std::to_string(slot) +
                 " outside 1.." + std::to_string(v->in_arity) +
                 " of vertex " + std::to_string(vid));
            return;
        }
        if (++slot_fill[{vid, slot}] > 1)
            fail("slot " + std::to_string(slot) + " of vertex " +
                 std::to_string(vid) + " filled more than once");
    };

    for (const auto& e : g.edges) {
        check_slot(e.dst, e.slot, "edge");
        const VertexSpec* s = g.find_vertex(e.src);
        if (!s)
            fail("edge from unknown vertex " + std::to_string(e.src));
        else
            ++out_count[e.src];
        const VertexSpec* d = g.find_vertex(e.dst);
        if (s && d && s->color == Color::Black && s->in_arity == 0 &&
            d->color == Color::Black)
            fail("edge from in_arity-0 black " + std::to_string(e.src) +
                 " into black vertex " + std::to_string(e.dst));
    }
    for (const auto& [label, target] : g.in_legs) {
        if (label < 1)
            fail("in-leg label " + std::to_string(label) + " not positive");
        check_slot(target.first, target.second,
                   "in-leg " + std::to_string(label));
    }
    for (const auto& [label, vid] : g.out_legs) {
        if (label < 1)
            fail("out-leg label " + std::to_string(label) + " not positive");
        if (!ids.count(vid))
            fail("out-leg " + std::to_string(label) +
                 " from unknown vertex " + std::to_string(vid));
        else
            ++out_count[vid];
    }

    // contiguous leg labels
    int want = 1;
    for (const auto& [label, _] : g.in_legs)
        if (label != want++)
            fail("in-leg labels are not 1..n");
    want = 1;
    for (const auto& [label, _] : g.out_legs)
        if (label != want++)
            fail("out-leg labels are not 1..m");

    for (const auto& v : g.vertices) {
        for (int s = 1; s <= v.in_arity; ++s)
            if (!slot_fill.count({v.id, s}))
                fail("slot " + std::to_string(s) + " of vertex " +
                     std::to_string(v.id) + " unfilled");
        if (out_count[v.id] != 1)
            fail("vertex " + std::to_string(v.id) + " has " +
                 std::to_string(out_count[v.id]) +
                 " outgoing lines, expected exactly 1");
    }

    rep.connected = rep.ok ? is_connected(g) : false;
    return rep;
}

void require_valid(const DecoratedGraph& g) {
    ValidityReport rep = validate(g);
    if (!rep.ok)
        throw InvalidGraph(rep.problems.front());
}

bool is_connected(const DecoratedGraph& g) {
    if (g.vertices.empty())
        return false;
    std::map<int, std::vector<int>> adj;
    for (const auto& e : g.edges) {
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::set<int> seen;
    std::vector<int> stack{g.vertices.front().id};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second)
            continue;
        for (int w : adj[v])
            stack.push_back(w);
    }
    return seen.size() == g.vertices.size();
}

bool violates_a_rule(const DecoratedGraph& g) {
    for (const auto& e : g.edges) {
        const VertexSpec* s = g.find_vertex(e.src);
        const VertexSpec* d = g.find_vertex(e.dst);
        if (s && d && s->color == Color::Black && s->in_arity == 0 &&
            d->color == Color::Black)
            return true;
    }
    return false;
}

int black_permutation_sign(const DecoratedGraph& g,
                           const std::vector<int>& from,
                           const std::vector<int>& to) {
    std::vector<int> fb, tb;
    for (int id : from) {
        const VertexSpec* v = g.find_vertex(id);
        if (v && v->color == Color::Black)
            fb.push_back(id);
    }
    for (int id : to) {
        const VertexSpec* v = g.find_vertex(id);
        if (v && v->color == Color::Black)
            tb.push_back(id);
    }
    if (fb.size() != tb.size())
        throw InvalidGraph("orientation sequences disagree on black set");
    // parity of the permutation mapping fb onto tb
    std::map<int, int> pos;
    for (size_t i = 0; i < tb.size(); ++i)
        pos[tb[i]] = static_cast<int>(i);
    std::vector<int> perm(fb.size());
    for (size_t i = 0; i < fb.size(); ++i) {
        auto it = pos.find(fb[i]);
        if (it == pos.end())
            throw InvalidGraph("orientation sequences disagree on black set");
        perm[i] = it->second;
    }
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        int j = static_cast<int>(i), len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

}  // namespace qgraph

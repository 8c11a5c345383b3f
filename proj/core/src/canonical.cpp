#include "qgraph/canonical.hpp"

#include "qgraph/errors.hpp"
#include "qgraph/limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qgraph {

namespace {

struct Filler {
    bool is_leg = false;
    int value = 0;  // src vertex id, or leg label
};

struct View {
    VertexSpec spec;
    std::vector<Filler> slot;  // index 0 .. in_arity-1
    bool out_is_leg = false;
    int out_value = 0;  // out-leg label, or dst id
    int out_slot = 0;   // dst slot when edge
};

// Slot symmetry group at a vertex, 1-based slot s: 0 = fully symmetric block
// (all black slots; white slots 1..a-3), 1 = the fixed white slot a-2 (or the
// single slot of an in_arity-1 white), 2 = the antisymmetric pair {a-1, a}.
int slot_group(const VertexSpec& v, int s) {
    if (v.color == Color::Black)
        return 0;
    if (v.in_arity == 1)
        return 1;
    if (s <= v.in_arity - 3)
        return 0;
    if (s == v.in_arity - 2)
        return 1;
    return 2;
}

std::map<int, View> build_views(const DecoratedGraph& g) {
    std::map<int, View> views;
    for (const auto& v : g.vertices) {
        View w;
        w.spec = v;
        w.slot.resize(v.in_arity);
        views[v.id] = std::move(w);
    }
    for (const auto& e : g.edges) {
        views[e.dst].slot[e.slot - 1] = {false, e.src};
        views[e.src].out_is_leg = false;
        views[e.src].out_value = e.dst;
        views[e.src].out_slot = e.slot;
    }
    for (const auto& [label, target] : g.in_legs)
        views[target.first].slot[target.second - 1] = {true, label};
    for (const auto& [label, vid] : g.out_legs) {
        views[vid].out_is_leg = true;
        views[vid].out_value = label;
    }
    return views;
}

using Key = std::vector<long long>;

// Refinement key of a vertex under the current class assignment; an
// isomorphism invariant of the rooted neighborhood that respects the slot
// symmetries (symmetric blocks and the antisymmetric pair enter as multisets).
Key vertex_key(int id, const std::map<int, View>& views,
               const std::map<int, int>& cls) {
    const View& w = views.at(id);
    Key k;
    k.push_back(cls.at(id));
    k.push_back(w.spec.color == Color::Black ? 0 : 1);
    k.push_back(w.spec.in_arity);
    if (w.out_is_leg) {
        k.push_back(1);
        k.push_back(w.out_value);
        k.push_back(-1);
    } else {
        k.push_back(0);
        k.push_back(cls.at(w.out_value));
        k.push_back(slot_group(views.at(w.out_value).spec, w.out_slot));
    }
    auto filler_key = [&](const Filler& f) -> std::pair<long long, long long> {
        if (f.is_leg)
            return {1, f.value};
        return {0, cls.at(f.value)};
    };
    std::vector<std::pair<long long, long long>> g0, g2;
    std::pair<long long, long long> g1{-2, -2};
    for (int s = 1; s <= w.spec.in_arity; ++s) {
        auto fk = filler_key(w.slot[s - 1]);
        switch (slot_group(w.spec, s)) {
            case 0: g0.push_back(fk); break;
            case 1: g1 = fk; break;
            default: g2.push_back(fk); break;
        }
    }
    std::sort(g0.begin(), g0.end());
    std::sort(g2.begin(), g2.end());
    for (auto& p : g0) {
        k.push_back(p.first);
        k.push_back(p.second);
    }
    k.push_back(g1.first);
    k.push_back(g1.second);
    for (auto& p : g2) {
        k.push_back(p.first);
        k.push_back(p.second);
    }
    return k;
}

// Refine to a stable partition; classes are renumbered 0..c-1 in key order.
std::map<int, int> refine(const std::map<int, View>& views,
                          std::map<int, int> cls) {
    while (true) {
        std::map<Key, std::vector<int>> buckets;
        for (const auto& [id, w] : views)
            buckets[vertex_key(id, views, cls)].push_back(id);
        std::map<int, int> next;
        int c = 0;
        for (const auto& [key, ids] : buckets) {
            for (int id : ids)
                next[id] = c;
            ++c;
        }
        bool stable = next == cls;
        cls = std::move(next);
        if (stable)
            return cls;
    }
}

struct Candidate {
    DecoratedGraph graph;
    int sign = 1;
};

// Rename by the candidate sequence (old ids in canonical-position order),
// canonicalize the slot layout per vertex, and track the sign: the parity of
// the induced black permutation times one factor of -1 per antisymmetric
// pair put in order by a swap.
Candidate realize(const DecoratedGraph& g, const std::map<int, View>& views,
                  const std::vector<int>& seq) {
    std::map<int, int> pos;
    for (size_t i = 0; i < seq.size(); ++i)
        pos[seq[i]] = static_cast<int>(i);

    Candidate cand;
    cand.sign = black_permutation_sign(g, g.ordering, seq);

    const int V = static_cast<int>(seq.size());
    cand.graph.vertices.resize(V);
    cand.graph.ordering.resize(V);
    std::iota(cand.graph.ordering.begin(), cand.graph.ordering.end(), 0);

    for (int p = 0; p < V; ++p) {
        const View& w = views.at(seq[p]);
        cand.graph.vertices[p] = {p, w.spec.color, w.spec.in_arity};
    }
    for (int p = 0; p < V; ++p) {
        const View& w = views.at(seq[p]);
        auto fkey = [&](const Filler& f) -> std::pair<long long, long long> {
            if (f.is_leg)
                return {1, f.value};
            return {0, pos.at(f.value)};
        };
        std::vector<int> g0slots, g2slots;
        int g1slot = 0;
        for (int s = 1; s <= w.spec.in_arity; ++s) {
            switch (slot_group(w.spec, s)) {
                case 0: g0slots.push_back(s); break;
                case 1: g1slot = s; break;
                default: g2slots.push_back(s); break;
            }
        }
        std::vector<Filler> block;
        for (int s : g0slots)
            block.push_back(w.slot[s - 1]);
        std::sort(block.begin(), block.end(),
                  [&](const Filler& a, const Filler& b) {
                      return fkey(a) < fkey(b);
                  });
        std::vector<std::pair<int, Filler>> layout;
        for (size_t i = 0; i < block.size(); ++i)
            layout.push_back({g0slots[i], block[i]});
        if (g1slot)
            layout.push_back({g1slot, w.slot[g1slot - 1]});
        if (!g2slots.empty()) {
            Filler a = w.slot[g2slots[0] - 1];
            Filler b = w.slot[g2slots[1] - 1];
            if (fkey(a) > fkey(b)) {
                std::swap(a, b);
                cand.sign = -cand.sign;
            }
            layout.push_back({g2slots[0], a});
            layout.push_back({g2slots[1], b});
        }
        for (auto& [s, f] : layout) {
            if (f.is_leg)
                cand.graph.in_legs[f.value] = {p, s};
            else
                cand.graph.edges.push_back({pos.at(f.value), p, s});
        }
        if (w.out_is_leg)
            cand.graph.out_legs[w.out_value] = p;
    }
    std::sort(cand.graph.edges.begin(), cand.graph.edges.end());
    return cand;
}

struct Search {
    const DecoratedGraph& g;
    const std::map<int, View>& views;
    GraphKey best_key;
    DecoratedGraph best_graph;
    std::set<int> best_signs;
    long long leaves = 0;

    // Individualization-refinement: branch on every member of the first
    // non-singleton class; all leaves are visited so every automorphism of
    // the winning labeling is seen and sign 0 is detected reliably.
    void run(std::map<int, int> cls) {
        cls = refine(views, cls);
        std::map<int, std::vector<int>> groups;
        for (const auto& [id, c] : cls)
            groups[c].push_back(id);
        const std::vector<int>* branch = nullptr;
        for (const auto& [c, ids] : groups)
            if (ids.size() > 1) {
                branch = &ids;
                break;
            }
        if (!branch) {
            if (++leaves > soft_limit())
                throw LimitExceeded("canonicalization search leaves");
            std::vector<int> seq(groups.size());
            for (const auto& [c, ids] : groups)
                seq[c] = ids.front();
            Candidate cand = realize(g, views, seq);
            GraphKey key = graph_key(cand.graph);
            if (best_key.empty() || key < best_key) {
                best_key = std::move(key);
                best_graph = std::move(cand.graph);
                best_signs = {cand.sign};
            } else if (key == best_key) {
                best_signs.insert(cand.sign);
            }
            return;
        }
        for (int v : *branch) {
            std::map<int, int> split = cls;
            for (auto& [id, c] : split)
                c = 2 * c + (c == cls.at(v) && id != v ? 1 : 0);
            run(std::move(split));
        }
    }
};

}  // namespace

GraphKey graph_key(const DecoratedGraph& g) {
    GraphKey k;
    k.push_back(static_cast<long long>(g.vertices.size()));
    for (const auto& v : g.vertices) {
        k.push_back(v.color == Color::Black ? 0 : 1);
        k.push_back(v.in_arity);
    }
    k.push_back(static_cast<long long>(g.edges.size()));
    for (const auto& e : g.edges) {
        k.push_back(e.src);
        k.push_back(e.dst);
        k.push_back(e.slot);
    }
    k.push_back(static_cast<long long>(g.in_legs.size()));
    for (const auto& [label, t] : g.in_legs) {
        k.push_back(label);
        k.push_back(t.first);
        k.push_back(t.second);
    }
    k.push_back(static_cast<long long>(g.out_legs.size()));
    for (const auto& [label, v] : g.out_legs) {
        k.push_back(label);
        k.push_back(v);
    }
    return k;
}

CanonicalGraph canonical_form(const DecoratedGraph& g) {
    require_valid(g);
    auto views = build_views(g);

    Search search{g, views, {}, {}, {}, 0};
    std::map<int, int> cls;
    for (const auto& v : g.vertices)
        cls[v.id] = 0;
    search.run(std::move(cls));

    CanonicalGraph out;
    out.graph = std::move(search.best_graph);
    out.sign = search.best_signs.size() == 2 ? 0 : *search.best_signs.begin();
    return out;
}

DecoratedGraph relabeled(const DecoratedGraph& g,
                         const std::vector<int>& new_ids,
                         const std::vector<int>& new_ordering) {
    if (new_ids.size() != g.vertices.size())
        throw InvalidGraph("relabeling size mismatch");
    std::map<int, int> m;
    for (size_t i = 0; i < g.vertices.size(); ++i)
        m[g.vertices[i].id] = new_ids[i];
    DecoratedGraph out;
    for (const auto& v : g.vertices)
        out.vertices.push_back({m.at(v.id), v.color, v.in_arity});
    for (const auto& e : g.edges)
        out.edges.push_back({m.at(e.src), m.at(e.dst), e.slot});
    for (const auto& [label, t] : g.in_legs)
        out.in_legs[label] = {m.at(t.first), t.second};
    for (const auto& [label, v] : g.out_legs)
        out.out_legs[label] = m.at(v);
    out.ordering = new_ordering;
    return out;
}

}  // namespace qgraph

#include "qgraph/evaluate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

struct SlotRef {
    int vertex;
    int slot;  // 0 the outgoing line, 1..n the input slots
    bool operator==(const SlotRef& o) const {
        return vertex == o.vertex && slot == o.slot;
    }
};

// Partial product with named slots; component keys follow `slots`.
struct Assembly {
    std::vector<int> parities;
    std::vector<SlotRef> slots;
    std::map<std::vector<int>, SuperFunction> comp;
};

void accumulate(std::map<std::vector<int>, SuperFunction>& into,
                const std::vector<int>& key, const SuperFunction& f) {
    if (f.zero()) return;
    auto it = into.find(key);
    if (it == into.end()) {
        into.emplace(key, f);
    } else {
        it->second += f;
        if (it->second.zero()) into.erase(it);
    }
}

std::pair<SuperFunction, SuperFunction> parity_split(const SuperFunction& f) {
    const auto& parities = f.coordinate_parities();
    SuperFunction even(parities);
    SuperFunction odd(parities);
    for (const auto& [mono, coeff] : f.terms()) {
        int p = 0;
        for (std::size_t i = 0; i < mono.size(); ++i)
            p += mono[i] * parities[i];
        if (p & 1)
            odd.add_term(mono, coeff);
        else
            even.add_term(mono, coeff);
    }
    return {even, odd};
}

void fold_vertex(Assembly& a, const SuperTensor& vt, int vertex_id) {
    const int n = vt.lower_count();
    std::map<std::vector<int>, SuperFunction> result;
    for (const auto& [ka, fa] : a.comp) {
        int ka_parity = 0;
        for (int i : ka) ka_parity += a.parities[i];
        ka_parity &= 1;
        for (const auto& [kb, fb] : vt.components()) {
            auto [even, odd] = parity_split(fb);
            std::vector<int> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            if (!even.zero()) accumulate(result, key, fa * even);
            if (!odd.zero()) {
                SuperFunction term = fa * odd;
                if (ka_parity) term.scale(Rat(-1));
                accumulate(result, key, term);
            }
        }
    }
    a.comp = std::move(result);
    for (int s = 1; s <= n; ++s) a.slots.push_back({vertex_id, s});
    a.slots.push_back({vertex_id, 0});
}

int position_of(const Assembly& a, const SlotRef& ref) {
    for (std::size_t t = 0; t < a.slots.size(); ++t)
        if (a.slots[t] == ref) return static_cast<int>(t);
    throw std::logic_error("evaluation lost track of a tensor slot");
}

// Delta between the upper slot at pa and the lower slot at pb. The pair is
// first brought together past what sits between them, then evaluated with
// the canonical pairing, which reads the lower (form) factor first; when the
// upper factor comes first the pair is braided at a further (-1)^eps.
void contract(Assembly& a, int pa, int pb) {
    const int lo = std::min(pa, pb);
    const int hi = std::max(pa, pb);
    std::map<std::vector<int>, SuperFunction> result;
    for (const auto& [key, f] : a.comp) {
        if (key[pa] != key[pb]) continue;
        int between = 0;
        for (int t = lo + 1; t < hi; ++t) between += a.parities[key[t]];
        if (pa < pb) between += a.parities[key[pa]];
        SuperFunction term = f;
        if ((a.parities[key[pa]] * between) & 1) term.scale(Rat(-1));
        std::vector<int> newkey;
        newkey.reserve(key.size() - 2);
        for (std::size_t t = 0; t < key.size(); ++t)
            if (static_cast<int>(t) != pa && static_cast<int>(t) != pb)
                newkey.push_back(key[t]);
        accumulate(result, newkey, term);
    }
    a.comp = std::move(result);
    a.slots.erase(a.slots.begin() + hi);
    a.slots.erase(a.slots.begin() + lo);
}

SuperTensor evaluate_one(const DecoratedGraph& g, const OddVectorField& q,
                         WhitePolicy policy) {
    require_valid(g);
    const auto& parities = q.field.coordinate_parities();
    SuperTensor shape(parities, g.m_out(), g.n_in());
    for (const auto& v : g.vertices) {
        if (v.color == Color::White) {
            if (policy == WhitePolicy::reject)
                throw WhiteVertexPresent("graph has a white vertex");
            return shape;
        }
    }

    std::map<int, SuperTensor> jets;
    Assembly a;
    a.parities = parities;
    a.comp.emplace(std::vector<int>{}, SuperFunction::constant(parities, 1));

    std::set<int> absorbed;
    std::vector<char> contracted(g.edges.size(), 0);
    for (int vid : g.ordering) {
        const VertexSpec* v = g.find_vertex(vid);
        auto it = jets.find(v->in_arity);
        if (it == jets.end())
            it = jets.emplace(v->in_arity,
                              derivative_tensor(q.field, v->in_arity))
                     .first;
        fold_vertex(a, it->second, vid);
        if (a.comp.empty()) return shape;
        absorbed.insert(vid);
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            if (contracted[e]) continue;
            const Edge& ed = g.edges[e];
            if (!absorbed.count(ed.src) || !absorbed.count(ed.dst)) continue;
            contract(a, position_of(a, {ed.src, 0}),
                     position_of(a, {ed.dst, ed.slot}));
            contracted[e] = 1;
            if (a.comp.empty()) return shape;
        }
    }

    std::vector<SlotRef> target;
    for (const auto& [label, vs] : g.in_legs)
        target.push_back({vs.first, vs.second});
    for (const auto& [label, v] : g.out_legs) target.push_back({v, 0});
    std::vector<int> perm(target.size());
    for (std::size_t t = 0; t < target.size(); ++t)
        perm[t] = position_of(a, target[t]);

    SuperTensor out = shape;
    for (const auto& [key, f] : a.comp) {
        int exponent = 0;
        for (std::size_t s = 0; s < perm.size(); ++s)
            for (std::size_t t = s + 1; t < perm.size(); ++t)
                if (perm[s] > perm[t])
                    exponent +=
                        parities[key[perm[s]]] * parities[key[perm[t]]];
        std::vector<int> newkey(perm.size());
        for (std::size_t s = 0; s < perm.size(); ++s) newkey[s] = key[perm[s]];
        SuperFunction term = f;
        if (exponent & 1) term.scale(Rat(-1));
        out.add_component(newkey, term);
    }
    return out;
}

}  // namespace

SuperTensor evaluate_graph(const DecoratedGraph& g, const OddVectorField& q,
                           WhitePolicy policy) {
    return evaluate_one(g, q, policy);
}

SuperTensor evaluate_graph(const Cochain& c, const OddVectorField& q,
                           WhitePolicy policy) {
    SuperTensor out;
    for (const auto& [key, term] : c.terms()) {
        SuperTensor t = evaluate_one(term.first, q, policy);
        t.scale(term.second);
        out += t;
    }
    return out;
}

SuperTensor evaluate_graph(const DecoratedGraph& g, const LieAlgebraData& L,
                           WhitePolicy policy) {
    return evaluate_one(g, q_from_lie(L), policy);
}

SuperTensor evaluate_graph(const Cochain& c, const LieAlgebraData& L,
                           WhitePolicy policy) {
    return evaluate_graph(c, q_from_lie(L), policy);
}

}  // namespace qgraph

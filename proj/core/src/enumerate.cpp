#include "qgraph/enumerate.hpp"

#include "qgraph/errors.hpp"
#include "qgraph/filtration.hpp"
#include "qgraph/limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qgraph {

namespace {

// Non-increasing sequences of `parts` integers in [lo, hi] summing to total.
void arity_multisets(int total, int parts, int lo, int hi,
                     std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0)
            out.push_back(current);
        return;
    }
    for (int a = std::min(hi, total); a >= lo; --a) {
        if (a * parts < total)
            break;
        current.push_back(a);
        arity_multisets(total - a, parts - 1, lo, a, current, out);
        current.pop_back();
    }
}

struct Generator {
    std::vector<VertexSpec> vertices;
    std::vector<std::pair<int, int>> slots;  // (vertex, slot), fill order
    int n_in = 0;
    int m_out = 0;
    Subcomplex target = Subcomplex::G4;

    std::vector<bool> output_used;
    std::vector<bool> leg_used;
    std::vector<Edge> edges;
    std::map<int, std::pair<int, int>> in_legs;
    long long visited = 0;
    std::map<GraphKey, CanonicalGraph> found;

    bool univalent_black(int vid) const {
        const VertexSpec& v = vertices[vid];
        return v.color == Color::Black && v.in_arity == 0;
    }

    void emit() {
        DecoratedGraph g;
        g.vertices = vertices;
        g.edges = edges;
        g.in_legs = in_legs;
        std::vector<int> free_outputs;
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (!output_used[v])
                free_outputs.push_back(static_cast<int>(v));
        if (static_cast<int>(free_outputs.size()) != m_out)
            return;
        g.ordering.resize(vertices.size());
        std::iota(g.ordering.begin(), g.ordering.end(), 0);

        std::sort(free_outputs.begin(), free_outputs.end());
        do {
            for (int i = 0; i < m_out; ++i)
                g.out_legs[i + 1] = free_outputs[i];
            if (!is_connected(g))
                continue;
            if (classify(g) != target)
                continue;
            if (target == Subcomplex::G4) {
                bool composite_free = true;
                for (const auto& v : g.vertices)
                    if (v.color == Color::White && v.in_arity == 1)
                        composite_free = false;
                if (composite_free && laplacian_weight(g) == 0)
                    continue;
            }
            CanonicalGraph cg = canonical_form(g);
            if (cg.sign != 0) {
                // census entries are the representatives themselves; the
                // sign against the search orientation is not meaningful
                cg.sign = 1;
                found.emplace(graph_key(cg.graph), std::move(cg));
            }
        } while (std::next_permutation(free_outputs.begin(),
                                       free_outputs.end()));
    }

    void fill(std::size_t i) {
        if (++visited > soft_limit())
            throw LimitExceeded("graph enumeration search");
        if (i == slots.size()) {
            emit();
            return;
        }
        int legs_left = 0;
        for (int l = 1; l <= n_in; ++l)
            if (!leg_used[l])
                ++legs_left;
        if (legs_left > static_cast<int>(slots.size() - i))
            return;

        auto [vid, slot] = slots[i];
        for (int l = 1; l <= n_in; ++l) {
            if (leg_used[l])
                continue;
            leg_used[l] = true;
            in_legs[l] = {vid, slot};
            fill(i + 1);
            in_legs.erase(l);
            leg_used[l] = false;
        }
        const bool dst_black = vertices[vid].color == Color::Black;
        for (std::size_t u = 0; u < vertices.size(); ++u) {
            if (output_used[u])
                continue;
            if (dst_black && univalent_black(static_cast<int>(u)))
                continue;
            output_used[u] = true;
            edges.push_back({static_cast<int>(u), vid, slot});
            fill(i + 1);
            edges.pop_back();
            output_used[u] = false;
        }
    }
};

}  // namespace

std::vector<CanonicalGraph> enumerate_basis(
    int n_in, int m_out, int k_black, const std::vector<int>& white_profile,
    Subcomplex subcomplex) {
    for (int a : white_profile)
        if (a != 1 && a < 3)
            throw InvalidGraph("white in_arity must be 1 or >= 3");
    const int W = static_cast<int>(white_profile.size());
    const int V = k_black + W;
    if (V == 0 || n_in < 0 || m_out < 0 || m_out > V)
        return {};

    const int E = V - m_out;
    const int white_arity = std::accumulate(white_profile.begin(),
                                            white_profile.end(), 0);
    const int black_arity = E + n_in - white_arity;
    if (black_arity < 0)
        return {};

    int lo = 0, hi = black_arity;
    switch (subcomplex) {
        case Subcomplex::G1:
            if (n_in != 0 || m_out != 1 || k_black != 1 || W != 0)
                return {};
            hi = 0;
            break;
        case Subcomplex::G2:
            lo = hi = 1;
            break;
        case Subcomplex::G3:
            if (W != 0)
                return {};
            lo = 2;
            break;
        case Subcomplex::G4:
            break;
    }

    std::vector<std::vector<int>> multisets;
    std::vector<int> current;
    arity_multisets(black_arity, k_black, lo, hi, current, multisets);

    std::map<GraphKey, CanonicalGraph> found;
    for (const auto& arities : multisets) {
        Generator gen;
        gen.n_in = n_in;
        gen.m_out = m_out;
        gen.target = subcomplex;
        int id = 0;
        for (int a : arities)
            gen.vertices.push_back({id++, Color::Black, a});
        for (int a : white_profile)
            gen.vertices.push_back({id++, Color::White, a});
        for (const auto& v : gen.vertices)
            for (int s = 1; s <= v.in_arity; ++s)
                gen.slots.push_back({v.id, s});
        gen.output_used.assign(gen.vertices.size(), false);
        gen.leg_used.assign(n_in + 1, false);
        gen.fill(0);
        for (auto& [key, cg] : gen.found)
            found.emplace(key, std::move(cg));
    }

    std::vector<CanonicalGraph> out;
    out.reserve(found.size());
    for (auto& [key, cg] : found)
        out.push_back(std::move(cg));
    return out;
}

}  // namespace qgraph

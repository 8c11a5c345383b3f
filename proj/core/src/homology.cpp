#include "qgraph/homology.hpp"

#include "qgraph/coboundary.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/filtration.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace qgraph {

namespace {

void profile_rec(int whites, int budget, int hi, std::vector<int>& current,
                 std::vector<std::vector<int>>& out) {
    if (whites == 0) {
        out.push_back(current);
        return;
    }
    const int top = std::min(hi, budget - 3 * (whites - 1));
    for (int a = top; a >= 3; --a) {
        current.push_back(a);
        profile_rec(whites - 1, budget - a, a, current, out);
        current.pop_back();
    }
}

// White profiles of in_arity >= 3 fitting the slot budget of a G4 sector
// with k black vertices (the empty profile covers black-only graphs).
std::vector<std::vector<int>> g4_profiles(int n_in, int m_out, int k) {
    std::vector<std::vector<int>> out;
    const int top = std::max(0, (k + n_in - m_out) / 2);
    for (int w = 0; w <= top; ++w) {
        const int budget = k + w + n_in - m_out;
        if (budget < 3 * w)
            continue;
        std::vector<int> current;
        profile_rec(w, budget, budget, current, out);
    }
    return out;
}

void sort_by_key(std::vector<CanonicalGraph>& basis) {
    std::sort(basis.begin(), basis.end(),
              [](const CanonicalGraph& a, const CanonicalGraph& b) {
                  return graph_key(a.graph) < graph_key(b.graph);
              });
}

std::map<GraphKey, std::size_t> index_of(
    const std::vector<CanonicalGraph>& basis) {
    std::map<GraphKey, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index.emplace(graph_key(basis[i].graph), i);
    return index;
}

std::vector<Rat> coordinates(const Cochain& c,
                             const std::map<GraphKey, std::size_t>& index,
                             std::size_t dim, const char* what) {
    std::vector<Rat> v(dim);
    for (const auto& [key, term] : c.terms()) {
        auto it = index.find(key);
        if (it == index.end())
            throw BasisNotClosed(what);
        v[it->second] = term.second;
    }
    return v;
}

// Renumber the input slots of one vertex: the filler of slot s moves to
// slot perm[s], slots absent from perm stay put.
DecoratedGraph reslotted(const DecoratedGraph& g, int vertex,
                         const std::map<int, int>& perm) {
    DecoratedGraph out = g;
    auto mapped = [&](int s) {
        auto it = perm.find(s);
        return it == perm.end() ? s : it->second;
    };
    for (auto& e : out.edges)
        if (e.dst == vertex)
            e.slot = mapped(e.slot);
    for (auto& [label, at] : out.in_legs)
        if (at.first == vertex)
            at.second = mapped(at.second);
    return out;
}

}  // namespace

std::vector<CanonicalGraph> sector_basis(Subcomplex sc, int n_in, int m_out,
                                         int k) {
    std::vector<CanonicalGraph> out;
    if (k < 0)
        return out;
    auto collect = [&](int blacks, const std::vector<int>& profile) {
        auto part = enumerate_basis(n_in, m_out, blacks, profile, sc);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    };
    switch (sc) {
        case Subcomplex::G1:
            if (n_in == 0 && m_out == 1 && k == 1)
                collect(1, {});
            break;
        case Subcomplex::G2:
            for (int w = 0; 2 * w <= k; ++w)
                collect(k - 2 * w, std::vector<int>(w, 1));
            break;
        case Subcomplex::G3:
            collect(k, {});
            break;
        case Subcomplex::G4:
            for (const auto& profile : g4_profiles(n_in, m_out, k))
                collect(k, profile);
            break;
    }
    sort_by_key(out);
    return out;
}

RatMatrix relation_matrix(const std::vector<CanonicalGraph>& basis) {
    const auto index = index_of(basis);
    RatMatrix rows(0, basis.size());
    for (const auto& cg : basis) {
        const DecoratedGraph& g = cg.graph;
        for (const auto& v : g.vertices) {
            if (v.color != Color::White || v.in_arity < 3)
                continue;
            const int r = v.in_arity;
            auto add_relation = [&](const std::map<int, int>& p1,
                                    const std::map<int, int>& p2) {
                Cochain rel;
                rel.add(g, 1);
                rel.add(reslotted(g, v.id, p1), 1);
                rel.add(reslotted(g, v.id, p2), 1);
                if (rel.zero())
                    return;
                rows.append_row(coordinates(
                    rel, index, basis.size(),
                    "relation term outside the basis"));
            };
            // cyclic 3-term relation in the last three slots
            add_relation({{r - 2, r - 1}, {r - 1, r}, {r, r - 2}},
                         {{r - 2, r}, {r - 1, r - 2}, {r, r - 1}});
            // for in_arity >= 4 also the cyclic relation on slots
            // (r-3, r-1, r), keeping slot r-2 fixed
            if (r >= 4)
                add_relation({{r - 3, r}, {r - 1, r - 3}, {r, r - 1}},
                             {{r - 3, r - 1}, {r - 1, r}, {r, r - 3}});
        }
    }
    return rows;
}

RatMatrix operator_matrix(
    const std::vector<CanonicalGraph>& source,
    const std::vector<CanonicalGraph>& target,
    const std::function<Cochain(const DecoratedGraph&)>& op) {
    const auto index = index_of(target);
    RatMatrix m(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        const Cochain image = op(source[j].graph);
        for (const auto& [key, term] : image.terms()) {
            auto it = index.find(key);
            if (it == index.end())
                throw BasisNotClosed("operator image outside the target basis");
            m.at(it->second, j) = term.second;
        }
    }
    return m;
}

BettiBreakdown betti_breakdown(Subcomplex sc, int n_in, int m_out, int k) {
    std::function<Cochain(const DecoratedGraph&)> op;
    if (sc == Subcomplex::G4)
        op = [](const DecoratedGraph& g) { return coboundary_d0(g); };
    else
        op = [](const DecoratedGraph& g) { return coboundary(g); };
    const auto below = sector_basis(sc, n_in, m_out, k - 1);
    const auto here = sector_basis(sc, n_in, m_out, k);
    const auto above = sector_basis(sc, n_in, m_out, k + 1);
    BettiBreakdown b;
    b.dim_space = static_cast<long long>(here.size());
    if (!here.empty()) {
        if (!below.empty())
            b.rank_in =
                static_cast<long long>(rank(operator_matrix(below, here, op)));
        b.rank_out =
            static_cast<long long>(rank(operator_matrix(here, above, op)));
    }
    b.betti = b.dim_space - b.rank_in - b.rank_out;
    return b;
}

long long betti(Subcomplex sc, int n_in, int m_out, int k) {
    return betti_breakdown(sc, n_in, m_out, k).betti;
}

namespace {

// Census of one subcomplex sector at effective degree kstar, for the exact
// coboundary solve.  For G4 the white arities are 1 and 3 on the source
// side; the target side adds arity 4 since the coboundary grows a
// three-slot white by one slot.
std::vector<CanonicalGraph> solve_sector(Subcomplex sc, int n_in, int m_out,
                                         int kstar, bool target) {
    if (sc != Subcomplex::G4)
        return sector_basis(sc, n_in, m_out, kstar);
    std::vector<CanonicalGraph> out;
    for (int w1 = 0; 2 * w1 <= kstar; ++w1) {
        const int b = kstar - 2 * w1;
        const int budget = b + n_in - m_out;  // slots left for arity >= 3
        for (int w3 = 0; 2 * w3 <= budget; ++w3) {
            const int w4_top = target ? (budget - 2 * w3) / 3 : 0;
            for (int w4 = 0; w4 <= std::max(0, w4_top); ++w4) {
                if (2 * w3 + 3 * w4 > budget)
                    continue;
                std::vector<int> profile(w4, 4);
                profile.insert(profile.end(), w3, 3);
                profile.insert(profile.end(), w1, 1);
                auto part = enumerate_basis(n_in, m_out, b, profile,
                                            Subcomplex::G4);
                out.insert(out.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
            }
        }
    }
    sort_by_key(out);
    return out;
}

std::vector<CanonicalGraph> solve_union(const std::set<Subcomplex>& sectors,
                                        int n_in, int m_out, int kstar,
                                        bool target) {
    std::vector<CanonicalGraph> out;
    for (Subcomplex sc : sectors) {
        auto part = solve_sector(sc, n_in, m_out, kstar, target);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    sort_by_key(out);
    return out;
}

}  // namespace

CoboundaryCertificate is_coboundary(const Cochain& z) {
    CoboundaryCertificate cert;
    if (z.zero()) {
        cert.is_coboundary = true;
        return cert;
    }
    const int kstar = z.homogeneous_degree();
    if (kstar < 0)
        throw InvalidGraph("is_coboundary needs a homogeneous cochain");
    if (!coboundary(z).zero())
        throw NotACocycle("the cochain has a nonzero coboundary");

    const DecoratedGraph& first = z.terms().begin()->second.first;
    const int n_in = first.n_in();
    const int m_out = first.m_out();
    std::set<Subcomplex> sectors;
    for (const auto& [key, term] : z.terms())
        sectors.insert(classify(term.first));

    const auto lower = solve_union(sectors, n_in, m_out, kstar - 1, false);
    const auto upper = solve_union(sectors, n_in, m_out, kstar, true);
    const auto upper_index = index_of(upper);

    const RatMatrix bound = operator_matrix(
        lower, upper, [](const DecoratedGraph& g) { return coboundary(g); });
    const RatMatrix upper_rel = relation_matrix(upper);

    // the lower relations must map into the span of the upper ones
    const RatMatrix lower_rel = relation_matrix(lower);
    if (lower_rel.rows()) {
        RatMatrix check = upper_rel;
        const std::size_t base = rank(check);
        for (std::size_t i = 0; i < lower_rel.rows(); ++i) {
            Cochain image;
            for (std::size_t j = 0; j < lower.size(); ++j)
                if (lower_rel.at(i, j) != 0)
                    image += coboundary(lower[j].graph, lower_rel.at(i, j));
            check.append_row(coordinates(image, upper_index, upper.size(),
                                         "relation image outside the basis"));
        }
        if (rank(check) != base)
            throw std::logic_error(
                "white slot relations are not preserved by the coboundary");
    }

    // solve  bound * x + transpose(upper_rel) * y = z
    const std::size_t unknowns = lower.size() + upper_rel.rows();
    RatMatrix system(upper.size(), unknowns);
    for (std::size_t i = 0; i < upper.size(); ++i) {
        for (std::size_t j = 0; j < lower.size(); ++j)
            system.at(i, j) = bound.at(i, j);
        for (std::size_t t = 0; t < upper_rel.rows(); ++t)
            system.at(i, lower.size() + t) = upper_rel.at(t, i);
    }
    const auto zvec = coordinates(z, upper_index, upper.size(),
                                  "cochain term outside the sector basis");

    cert.rank_without = static_cast<long long>(rank(system));
    RatMatrix augmented(upper.size(), unknowns + 1);
    for (std::size_t i = 0; i < upper.size(); ++i) {
        for (std::size_t j = 0; j < unknowns; ++j)
            augmented.at(i, j) = system.at(i, j);
        augmented.at(i, unknowns) = zvec[i];
    }
    cert.rank_with = static_cast<long long>(rank(augmented));

    if (cert.rank_with != cert.rank_without)
        return cert;

    const auto solution = solve(system, zvec);
    if (!solution)
        throw std::logic_error("rank computation disagrees with the solver");
    cert.is_coboundary = true;
    for (std::size_t j = 0; j < lower.size(); ++j)
        if ((*solution)[j] != 0)
            cert.primitive.add_canonical(lower[j], (*solution)[j]);
    return cert;
}

}  // namespace qgraph

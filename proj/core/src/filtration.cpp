#include "qgraph/filtration.hpp"

#include "qgraph/errors.hpp"

#include <algorithm>
#include <set>

namespace qgraph {

namespace {

int coefficient_d0(const Branch& b) {
    int a = mark_degree(b.alpha), bb = mark_degree(b.beta);
    int sign_a = a % 2 ? -1 : 1;
    int osc = (b.k() + a + bb) % 2 ? -1 : 1;
    return sign_a * (1 - osc) / 2;
}

int coefficient_h(const Branch& b) {
    int a = mark_degree(b.alpha), bb = mark_degree(b.beta);
    int sign_a = a % 2 ? -1 : 1;
    int osc = (b.k() + a + bb) % 2 ? -1 : 1;
    return sign_a * (1 + osc) / 2;
}

// Orientation with the branch interior rotated to the front in flow order;
// the sign of the rotation is charged to the coefficient.
std::vector<int> branch_reference(const DecoratedGraph& g, const Branch& b) {
    std::set<int> interior(b.interior.begin(), b.interior.end());
    std::vector<int> ref = b.interior;
    for (int id : g.ordering)
        if (!interior.count(id))
            ref.push_back(id);
    return ref;
}

DecoratedGraph lengthen(const DecoratedGraph& g, const Branch& b, int c) {
    DecoratedGraph h = g;
    h.vertices.push_back({c, Color::Black, 1});

    if (b.k() == 0 && b.start.is_leg) {
        h.in_legs[b.start.leg] = {c, 1};
        h.edges.push_back({c, b.end.vertex, b.end.slot});
    } else {
        int tail = b.k() ? b.interior.back() : b.start.vertex;
        if (b.end.is_leg) {
            h.out_legs[b.end.leg] = c;
            h.edges.push_back({tail, c, 1});
        } else {
            for (auto& e : h.edges)
                if (e.src == tail && e.dst == b.end.vertex &&
                    e.slot == b.end.slot) {
                    e.dst = c;
                    e.slot = 1;
                    break;
                }
            h.edges.push_back({c, b.end.vertex, b.end.slot});
        }
    }

    std::vector<int> front = b.interior;
    front.push_back(c);
    std::set<int> moved(front.begin(), front.end());
    h.ordering = front;
    for (int id : g.ordering)
        if (!moved.count(id))
            h.ordering.push_back(id);
    return h;
}

DecoratedGraph shorten(const DecoratedGraph& g, const Branch& b) {
    const int gone = b.interior.back();
    DecoratedGraph h;
    for (const auto& v : g.vertices)
        if (v.id != gone)
            h.vertices.push_back(v);

    // the removed vertex's output target, as edge target or out-leg label
    bool out_is_leg = false;
    int out_leg = 0, out_dst = -1, out_slot = 0;
    for (const auto& e : g.edges)
        if (e.src == gone) {
            out_dst = e.dst;
            out_slot = e.slot;
        }
    for (const auto& [label, vid] : g.out_legs)
        if (vid == gone) {
            out_is_leg = true;
            out_leg = label;
        }

    for (const auto& e : g.edges) {
        if (e.src == gone)
            continue;
        if (e.dst == gone) {
            if (!out_is_leg)
                h.edges.push_back({e.src, out_dst, out_slot});
            continue;
        }
        h.edges.push_back(e);
    }
    // an in-leg into the removed vertex moves to its output target; the
    // leg-to-leg case cannot occur, a lone bivalent vertex is not G4
    h.in_legs = g.in_legs;
    for (auto& [label, t] : h.in_legs)
        if (t.first == gone)
            t = {out_dst, out_slot};
    h.out_legs = g.out_legs;
    if (out_is_leg) {
        int feeder = b.k() >= 2 ? b.interior[b.k() - 2] : b.start.vertex;
        h.out_legs[out_leg] = feeder;
    }

    std::vector<int> front(b.interior.begin(), b.interior.end() - 1);
    std::set<int> moved(front.begin(), front.end());
    h.ordering = front;
    for (int id : g.ordering)
        if (id != gone && !moved.count(id))
            h.ordering.push_back(id);
    return h;
}

void d0_into(const DecoratedGraph& g, const Rat& coeff, Cochain& out) {
    int next_id = 0;
    for (const auto& v : g.vertices)
        next_id = std::max(next_id, v.id + 1);
    for (const Branch& b : branches(g)) {
        int coefficient = coefficient_d0(b);
        if (coefficient == 0)
            continue;
        int sigma = black_permutation_sign(g, g.ordering,
                                           branch_reference(g, b));
        DecoratedGraph term = lengthen(g, b, next_id);
        if (violates_a_rule(term))
            continue;
        out.add(term, coeff * coefficient * sigma);
    }
}

void h_into(const DecoratedGraph& g, const Rat& coeff, Cochain& out) {
    for (const Branch& b : branches(g)) {
        if (b.k() == 0)
            continue;
        int coefficient = coefficient_h(b);
        if (coefficient == 0)
            continue;
        int sigma = black_permutation_sign(g, g.ordering,
                                           branch_reference(g, b));
        out.add(shorten(g, b), coeff * coefficient * sigma);
    }
}

}  // namespace

Cochain coboundary_d0(const Cochain& c) {
    Cochain out;
    for (const auto& [key, term] : c.terms())
        d0_into(term.first, term.second, out);
    return out;
}

Cochain coboundary_d0(const DecoratedGraph& g, const Rat& coeff) {
    Cochain out;
    d0_into(g, coeff, out);
    return out;
}

Cochain homotopy_h(const Cochain& c) {
    Cochain out;
    for (const auto& [key, term] : c.terms())
        h_into(term.first, term.second, out);
    return out;
}

Cochain homotopy_h(const DecoratedGraph& g, const Rat& coeff) {
    Cochain out;
    h_into(g, coeff, out);
    return out;
}

long long laplacian_weight(const DecoratedGraph& g) {
    long long n1 = 0, n2 = 0, n3 = 0;
    for (const Branch& b : branches(g)) {
        if (b.k() > 0) {
            ++n1;
            continue;
        }
        bool leg = b.alpha == Mark::Leg || b.beta == Mark::Leg;
        bool white = b.alpha == Mark::White || b.beta == Mark::White;
        bool multi_black = (b.alpha == Mark::Black && !b.alpha_univalent) ||
                           b.beta == Mark::Black;
        if (white && multi_black)
            ++n2;
        else if (white && leg)
            ++n3;
    }
    return n1 + n2 + n3;
}

LaplacianResult laplacian(const DecoratedGraph& g) {
    long long predicted = laplacian_weight(g);
    Cochain image = coboundary_d0(homotopy_h(g));
    image += homotopy_h(coboundary_d0(g));
    Cochain expected;
    expected.add(g, predicted);
    if (!(image == expected))
        throw NotDiagonal("h d0 + d0 h is not the predicted multiple");
    return {predicted, true};
}

}  // namespace qgraph

#include "qgraph/cochain.hpp"

#include "qgraph/errors.hpp"

namespace qgraph {

void Cochain::add(const DecoratedGraph& g, const Rat& coeff) {
    if (coeff == 0)
        return;
    add_canonical(canonical_form(g), coeff);
}

void Cochain::add_canonical(const CanonicalGraph& cg, const Rat& coeff) {
    if (coeff == 0 || cg.sign == 0)
        return;
    if (!terms_.empty()) {
        const DecoratedGraph& ref = terms_.begin()->second.first;
        if (ref.n_in() != cg.graph.n_in() || ref.m_out() != cg.graph.m_out())
            throw InvalidGraph("cochain mixes leg gradings");
    }
    GraphKey key = graph_key(cg.graph);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{cg.graph, coeff * cg.sign});
        return;
    }
    it->second.second += coeff * cg.sign;
    if (it->second.second == 0)
        terms_.erase(it);
}

Cochain& Cochain::operator+=(const Cochain& other) {
    for (const auto& [key, term] : other.terms_)
        add_canonical({term.first, 1}, term.second);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
    for (const auto& [key, term] : other.terms_)
        add_canonical({term.first, 1}, -term.second);
    return *this;
}

void Cochain::scale(const Rat& factor) {
    if (factor == 0) {
        terms_.clear();
        return;
    }
    for (auto& [key, term] : terms_)
        term.second *= factor;
}

Rat Cochain::coefficient(const DecoratedGraph& g) const {
    CanonicalGraph cg = canonical_form(g);
    if (cg.sign == 0)
        return 0;
    auto it = terms_.find(graph_key(cg.graph));
    if (it == terms_.end())
        return 0;
    return it->second.second * cg.sign;
}

int Cochain::homogeneous_degree() const {
    int degree = -1;
    for (const auto& [key, term] : terms_) {
        int d = term.first.effective_degree();
        if (degree == -1)
            degree = d;
        else if (degree != d)
            return -1;
    }
    return degree;
}

}  // namespace qgraph

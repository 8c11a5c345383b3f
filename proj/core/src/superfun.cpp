#include "qgraph/superfun.hpp"

#include "qgraph/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qgraph {

namespace {

int monomial_parity(const std::vector<int>& parities,
                    const SuperFunction::Monomial& m) {
    int p = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        p += m[i] * parities[i];
    return p & 1;
}

int monomial_degree(const SuperFunction::Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

}  // namespace

SuperFunction SuperFunction::constant(std::vector<int> coordinate_parities,
                                      const Rat& value) {
    SuperFunction f(std::move(coordinate_parities));
    f.add_term(Monomial(f.parities_.size(), 0), value);
    return f;
}

SuperFunction SuperFunction::coordinate(std::vector<int> coordinate_parities,
                                        int index) {
    SuperFunction f(std::move(coordinate_parities));
    Monomial m(f.parities_.size(), 0);
    m.at(index) = 1;
    f.add_term(m, 1);
    return f;
}

void SuperFunction::add_term(const Monomial& monomial, const Rat& coeff) {
    if (monomial.size() != parities_.size())
        throw ParityMismatch("monomial length does not match the coordinates");
    if (coeff == 0)
        return;
    for (std::size_t i = 0; i < monomial.size(); ++i)
        if (parities_[i] % 2 != 0 && monomial[i] > 1)
            return;  // odd coordinate squared
    auto [it, fresh] = terms_.emplace(monomial, coeff);
    if (!fresh && (it->second += coeff) == 0)
        terms_.erase(it);
}

SuperFunction& SuperFunction::operator+=(const SuperFunction& other) {
    if (other.zero() && other.parities_.empty())
        return *this;
    if (zero() && parities_.empty())
        return *this = other;
    if (parities_ != other.parities_)
        throw ParityMismatch("mixed coordinate contexts");
    for (const auto& [m, coeff] : other.terms_)
        add_term(m, coeff);
    return *this;
}

SuperFunction& SuperFunction::operator-=(const SuperFunction& other) {
    SuperFunction negated = other;
    negated.scale(-1);
    return *this += negated;
}

SuperFunction SuperFunction::operator*(const SuperFunction& other) const {
    if (zero() && parities_.empty())
        return *this;
    if (other.zero() && other.parities_.empty())
        return other;
    if (parities_ != other.parities_)
        throw ParityMismatch("mixed coordinate contexts");
    SuperFunction out(parities_);
    const std::size_t d = parities_.size();
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : other.terms_) {
            // move each factor of b past the higher-index factors of a
            int cross = 0;
            for (std::size_t i = 0; i < d; ++i) {
                if (b[i] == 0 || parities_[i] % 2 == 0)
                    continue;
                for (std::size_t j = i + 1; j < d; ++j)
                    if (parities_[j] % 2 != 0)
                        cross += b[i] * a[j];
            }
            Monomial m(d);
            for (std::size_t i = 0; i < d; ++i)
                m[i] = a[i] + b[i];
            Rat coeff = ca * cb;
            if (cross % 2 != 0)
                coeff = -coeff;
            out.add_term(m, coeff);
        }
    }
    return out;
}

void SuperFunction::scale(const Rat& factor) {
    if (factor == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= factor;
}

int SuperFunction::parity() const {
    int p = 0;
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
        const int mp = monomial_parity(parities_, m);
        if (first) {
            p = mp;
            first = false;
        } else if (mp != p) {
            return -1;
        }
    }
    return p;
}

std::map<int, SuperFunction> SuperFunction::degree_parts() const {
    std::map<int, SuperFunction> parts;
    for (const auto& [m, coeff] : terms_) {
        auto [it, fresh] = parts.emplace(monomial_degree(m),
                                         SuperFunction(parities_));
        it->second.add_term(m, coeff);
    }
    return parts;
}

SuperFunction SuperFunction::left_derivative(int index) const {
    SuperFunction out(parities_);
    for (const auto& [m, coeff] : terms_) {
        if (m[index] == 0)
            continue;
        int before = 0;
        for (int j = 0; j < index; ++j)
            before += m[j] * parities_[j];
        Monomial reduced = m;
        --reduced[index];
        const Rat value = coeff * m[index];
        out.add_term(reduced, (parities_[index] * before) % 2 == 0 ? value
                                                                   : -value);
    }
    return out;
}

Rat SuperFunction::coefficient(const Monomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<SuperFunction::Monomial> monomials_of_degree(
    const std::vector<int>& parities, int degree) {
    std::vector<SuperFunction::Monomial> out;
    SuperFunction::Monomial current(parities.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i,
                                                    int remaining) {
        if (i == parities.size()) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        const int cap = parities[i] ? std::min(1, remaining) : remaining;
        for (int e = 0; e <= cap; ++e) {
            current[i] = e;
            rec(i + 1, remaining - e);
        }
        current[i] = 0;
    };
    rec(0, degree);
    return out;
}

}  // namespace qgraph

#include "qgraph/tensor.hpp"

#include <functional>
#include <string>
#include <utility>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

int monomial_parity(const SuperFunction::Monomial& m,
                    const std::vector<int>& parities) {
    int p = 0;
    for (std::size_t i = 0; i < m.size(); ++i) p += m[i] * parities[i];
    return p & 1;
}

}  // namespace

SuperTensor::SuperTensor(std::vector<int> coordinate_parities, int upper,
                         int lower)
    : parities_(std::move(coordinate_parities)), upper_(upper), lower_(lower) {
    if (upper < 0 || lower < 0) throw SlotMismatch("negative slot count");
}

void SuperTensor::add_component(const std::vector<int>& key,
                                const SuperFunction& f) {
    if (static_cast<int>(key.size()) != lower_ + upper_)
        throw SlotMismatch("component key has " + std::to_string(key.size()) +
                           " indices, expected " +
                           std::to_string(lower_ + upper_));
    for (int i : key)
        if (i < 0 || i >= dim())
            throw SlotMismatch("component index out of range");
    if (f.zero()) return;
    if (f.coordinate_parities() != parities_)
        throw ParityMismatch(
            "component function disagrees with the tensor coordinates");
    auto it = components_.find(key);
    if (it == components_.end()) {
        components_.emplace(key, f);
    } else {
        it->second += f;
        if (it->second.zero()) components_.erase(it);
    }
}

SuperFunction SuperTensor::component(const std::vector<int>& key) const {
    auto it = components_.find(key);
    if (it != components_.end()) return it->second;
    return SuperFunction(parities_);
}

SuperTensor& SuperTensor::operator+=(const SuperTensor& other) {
    if (other.parities_.empty() && other.components_.empty() &&
        other.upper_ == 0 && other.lower_ == 0)
        return *this;
    if (parities_.empty() && components_.empty() && upper_ == 0 &&
        lower_ == 0) {
        *this = other;
        return *this;
    }
    if (upper_ != other.upper_ || lower_ != other.lower_)
        throw SlotMismatch("tensor types differ");
    if (parities_ != other.parities_)
        throw ParityMismatch("tensor coordinate parities differ");
    for (const auto& [key, f] : other.components_) add_component(key, f);
    return *this;
}

SuperTensor& SuperTensor::operator-=(const SuperTensor& other) {
    SuperTensor negated = other;
    negated.scale(Rat(-1));
    return *this += negated;
}

void SuperTensor::scale(const Rat& factor) {
    if (factor == 0) {
        components_.clear();
        return;
    }
    for (auto& [key, f] : components_) f.scale(factor);
}

int SuperTensor::total_parity() const {
    int result = 0;
    bool first = true;
    for (const auto& [key, f] : components_) {
        int fp = f.parity();
        if (fp < 0) return -1;
        int p = fp;
        for (int i : key) p += parities_[i];
        p &= 1;
        if (first) {
            result = p;
            first = false;
        } else if (p != result) {
            return -1;
        }
    }
    return result;
}

OddVectorField q_from_lie(const LieAlgebraData& L) {
    validate_algebra(L);
    std::vector<int> parities(L.dim);
    for (int i = 0; i < L.dim; ++i) parities[i] = (L.parities[i] + 1) & 1;
    SuperTensor field(parities, 1, 0);
    for (const auto& [abc, value] : L.f) {
        SuperFunction term = SuperFunction::coordinate(parities, abc[1]) *
                             SuperFunction::coordinate(parities, abc[0]);
        term.scale(value / 2);
        field.add_component({abc[2]}, term);
    }
    return OddVectorField{std::move(field)};
}

SuperFunction apply_field(const OddVectorField& q, const SuperFunction& f) {
    SuperFunction out;
    for (const auto& [key, qd] : q.field.components()) {
        SuperFunction df = f.left_derivative(key[0]);
        if (df.zero()) continue;
        out += qd * df;
    }
    return out;
}

bool square_zero(const OddVectorField& q) {
    for (int i = 0; i < q.field.dim(); ++i)
        if (!apply_field(q, q.field.component({i})).zero()) return false;
    return true;
}

SuperTensor derivative_tensor(const SuperTensor& field, int order) {
    if (field.upper_count() != 1 || field.lower_count() != 0)
        throw SlotMismatch("derivative_tensor expects a (1,0) tensor");
    if (order < 0) throw SlotMismatch("negative derivative order");
    const int d = field.dim();
    SuperTensor out(field.coordinate_parities(), 1, order);
    std::vector<int> key(order + 1, 0);
    std::function<void(int, const SuperFunction&)> descend =
        [&](int pos, const SuperFunction& f) {
            if (pos == 0) {
                out.add_component(key, f);
                return;
            }
            for (int j = 0; j < d; ++j) {
                SuperFunction df = f.left_derivative(j);
                if (df.zero()) continue;
                key[pos - 1] = j;
                descend(pos - 1, df);
            }
        };
    for (int up = 0; up < d; ++up) {
        SuperFunction base = field.component({up});
        if (base.zero()) continue;
        key[order] = up;
        descend(order, base);
    }
    return out;
}

SuperTensor lie_derivative(const OddVectorField& q, const SuperTensor& t) {
    const auto& parities = t.coordinate_parities();
    if (q.field.coordinate_parities() != parities)
        throw ParityMismatch("field and tensor coordinates differ");
    const int d = t.dim();
    const int lower = t.lower_count();
    const int slots = lower + t.upper_count();
    SuperTensor out(parities, t.upper_count(), lower);

    std::vector<std::vector<SuperFunction>> dq(
        d, std::vector<SuperFunction>(d));
    for (int i = 0; i < d; ++i) {
        SuperFunction qi = q.field.component({i});
        for (int j = 0; j < d; ++j) dq[j][i] = qi.left_derivative(j);
    }

    for (const auto& [key, f] : t.components()) {
        SuperFunction qf = apply_field(q, f);
        if (!qf.zero()) out.add_component(key, qf);

        for (const auto& [mono, coeff] : f.terms()) {
            const int fp = monomial_parity(mono, parities);
            SuperFunction piece(parities);
            piece.add_term(mono, coeff);
            int pre = 0;
            for (int s = 0; s < slots; ++s) {
                const int held = key[s];
                std::vector<int> newkey = key;
                if (s < lower) {
                    // covector slot: dc^held -> (d_j field^held) dc^j
                    for (int j = 0; j < d; ++j) {
                        const SuperFunction& g = dq[j][held];
                        if (g.zero()) continue;
                        int exponent = parities[held] * parities[j] +
                                       parities[held] + parities[j] +
                                       pre * (parities[held] + parities[j]) +
                                       fp;
                        SuperFunction term = piece * g;
                        if (exponent & 1) term.scale(Rat(-1));
                        newkey[s] = j;
                        out.add_component(newkey, term);
                    }
                } else {
                    // vector slot: d_held -> -(-1)^{e_held} (d_held field^k) d_k
                    for (int k = 0; k < d; ++k) {
                        const SuperFunction& g = dq[held][k];
                        if (g.zero()) continue;
                        int exponent = 1 + parities[held] +
                                       pre * (parities[held] + parities[k]) +
                                       fp;
                        SuperFunction term = piece * g;
                        if (exponent & 1) term.scale(Rat(-1));
                        newkey[s] = k;
                        out.add_component(newkey, term);
                    }
                }
                pre = (pre + parities[held]) & 1;
            }
        }
    }
    return out;
}

SuperTensor supertrace(const SuperTensor& t) {
    if (t.upper_count() != 1 || t.lower_count() < 1)
        throw SlotMismatch("supertrace expects a (1, q >= 1) tensor");
    const auto& parities = t.coordinate_parities();
    const int lower = t.lower_count();
    SuperTensor out(parities, 0, lower - 1);
    for (const auto& [key, f] : t.components()) {
        const int i = key[lower];
        if (key[lower - 1] != i) continue;
        SuperFunction g = f;
        if (parities[i]) g.scale(Rat(-1));
        std::vector<int> newkey(key.begin(), key.begin() + (lower - 1));
        out.add_component(newkey, g);
    }
    return out;
}

}  // namespace qgraph

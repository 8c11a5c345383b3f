#include "qgraph/classes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "qgraph/errors.hpp"
#include "qgraph/linalg.hpp"

namespace qgraph {

namespace {

std::vector<int> ghost_parities(const LieAlgebraData& L) {
    std::vector<int> parities(L.dim);
    for (int i = 0; i < L.dim; ++i) parities[i] = (L.parities[i] + 1) & 1;
    return parities;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

Rat mat_trace(const RatMatrix& m) {
    Rat t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

// labels (1, perm...) where perm permutes 2..count; identity when empty
std::vector<int> display_labels(const std::vector<int>& perm, int count) {
    std::vector<int> labels;
    labels.push_back(1);
    if (perm.empty()) {
        for (int v = 2; v <= count; ++v) labels.push_back(v);
        return labels;
    }
    if (static_cast<int>(perm.size()) != count - 1)
        throw BadPermutation("expected a permutation of 2.." +
                             std::to_string(count));
    std::set<int> seen;
    for (int v : perm) {
        if (v < 2 || v > count || !seen.insert(v).second)
            throw BadPermutation("expected a permutation of 2.." +
                                 std::to_string(count));
        labels.push_back(v);
    }
    return labels;
}

void all_keys(int dim, int slots, std::vector<int>& current,
              const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(current.size()) == slots) {
        visit(current);
        return;
    }
    for (int i = 0; i < dim; ++i) {
        current.push_back(i);
        all_keys(dim, slots, current, visit);
        current.pop_back();
    }
}

}  // namespace

SuperTensor bc_class(ClassSeries series, int n, const LieAlgebraData& L,
                     const std::vector<int>& perm) {
    if (n < 1) throw BadPermutation("series index must be at least 1");
    validate_algebra(L);
    const int d = L.dim;
    const int lowers = series == ClassSeries::B ? n + 1 : n;
    const std::vector<int> labels = display_labels(perm, lowers);
    const std::vector<int> parities = ghost_parities(L);

    std::vector<RatMatrix> ad(d);
    for (int a = 0; a < d; ++a) ad[a] = ad_matrix(L, a);
    RatMatrix identity(d, d);
    for (int i = 0; i < d; ++i) identity.at(i, i) = 1;

    SuperTensor out(parities, series == ClassSeries::B ? 1 : 0, lowers);
    // formula arguments a_1..a_n drive the matrix product; display slot i
    // holds the argument labelled labels[i]
    std::vector<int> args(lowers, 0);
    auto emit = [&](const RatMatrix& product) {
        std::vector<int> key(lowers, 0);
        if (series == ClassSeries::C) {
            for (int i = 0; i < lowers; ++i) key[i] = args[labels[i] - 1];
            const Rat value = mat_trace(product);
            if (value != 0)
                out.add_component(key,
                                  SuperFunction::constant(parities, value));
            return;
        }
        key.push_back(0);
        for (int last = 0; last < d; ++last) {
            args[n] = last;
            for (int i = 0; i < lowers; ++i) key[i] = args[labels[i] - 1];
            for (int b = 0; b < d; ++b) {
                const Rat value = product.at(b, last);
                if (value == 0) continue;
                key[lowers] = b;
                out.add_component(key,
                                  SuperFunction::constant(parities, value));
            }
        }
    };
    std::function<void(int, const RatMatrix&)> rec = [&](int depth,
                                                         const RatMatrix& m) {
        if (depth == n) {
            emit(m);
            return;
        }
        for (int a = 0; a < d; ++a) {
            args[depth] = a;
            rec(depth + 1, mat_mul(m, ad[a]));
        }
    };
    rec(0, identity);
    return out;
}

SuperFunction a_class(int n, const LieAlgebraData& L) {
    if (n < 1) throw std::invalid_argument("a_class needs n >= 1");
    const OddVectorField q = q_from_lie(L);
    const std::vector<int> parities = ghost_parities(L);
    const int d = L.dim;

    using FnMatrix = std::vector<std::vector<SuperFunction>>;
    FnMatrix lambda(d, std::vector<SuperFunction>(d, SuperFunction(parities)));
    for (const auto& [abc, value] : L.f) {
        SuperFunction term = SuperFunction::coordinate(parities, abc[1]);
        term.scale(value);
        lambda[abc[2]][abc[0]] += term;
    }

    const int power = 4 * n - 3;
    FnMatrix acc = lambda;
    for (int step = 1; step < power; ++step) {
        FnMatrix next(d, std::vector<SuperFunction>(d, SuperFunction(parities)));
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                if (acc[i][k].zero()) continue;
                for (int j = 0; j < d; ++j) {
                    if (lambda[k][j].zero()) continue;
                    next[i][j] += acc[i][k] * lambda[k][j];
                }
            }
        acc = std::move(next);
    }

    SuperFunction trace(parities);
    for (int i = 0; i < d; ++i) {
        SuperFunction term = acc[i][i];
        if (parities[i]) term.scale(Rat(-1));
        trace += term;
    }
    if (!apply_field(q, trace).zero())
        throw std::logic_error("a-class is not closed");
    return trace;
}

SuperFunction primitive_ce_class(int k, const LieAlgebraData& L) {
    if (k < 1) throw std::invalid_argument("primitive_ce_class needs k >= 1");
    validate_algebra(L);
    const int d = L.dim;
    const std::vector<int> parities = ghost_parities(L);

    std::vector<RatMatrix> ad(d);
    for (int a = 0; a < d; ++a) ad[a] = ad_matrix(L, a);
    RatMatrix identity(d, d);
    for (int i = 0; i < d; ++i) identity.at(i, i) = 1;

    SuperFunction total(parities);
    std::function<void(int, const RatMatrix&, const SuperFunction&)> rec =
        [&](int depth, const RatMatrix& m, const SuperFunction& fn) {
            if (depth == k) {
                const Rat value = mat_trace(m);
                if (value == 0) return;
                SuperFunction term = fn;
                term.scale(value);
                total += term;
                return;
            }
            for (int a = 0; a < d; ++a) {
                SuperFunction next =
                    fn * SuperFunction::coordinate(parities, a);
                if (next.zero()) continue;
                rec(depth + 1, mat_mul(m, ad[a]), next);
            }
        };
    rec(0, identity, SuperFunction::constant(parities, 1));
    return total;
}

ExactnessResult is_exact(const SuperTensor& t, const LieAlgebraData& L) {
    const OddVectorField q = q_from_lie(L);
    ExactnessResult result;
    if (t.zero()) {
        result.exact = true;
        result.primitive = t;
        return result;
    }
    if (t.coordinate_parities() != q.field.coordinate_parities())
        throw ParityMismatch("tensor coordinates do not match the algebra");
    if (!lie_derivative(q, t).zero())
        throw NotACocycle("is_exact needs a closed tensor");

    const auto& parities = t.coordinate_parities();
    const int slots = t.lower_count() + t.upper_count();
    std::map<int, SuperTensor> parts;
    for (const auto& [key, f] : t.components())
        for (const auto& [degree, part] : f.degree_parts()) {
            auto it = parts.find(degree);
            if (it == parts.end())
                it = parts
                         .emplace(degree,
                                  SuperTensor(parities, t.upper_count(),
                                              t.lower_count()))
                         .first;
            it->second.add_component(key, part);
        }

    result.primitive =
        SuperTensor(parities, t.upper_count(), t.lower_count());
    for (const auto& [degree, part] : parts) {
        if (part.zero()) continue;
        if (degree == 0) return ExactnessResult{};

        // candidate primitives: one degree lower, same type
        struct Candidate {
            std::vector<int> key;
            SuperFunction::Monomial mono;
            SuperTensor image;
        };
        std::vector<Candidate> candidates;
        const auto monomials = monomials_of_degree(parities, degree - 1);
        std::vector<int> current;
        all_keys(L.dim, slots, current, [&](const std::vector<int>& key) {
            for (const auto& mono : monomials) {
                SuperFunction f(parities);
                f.add_term(mono, 1);
                if (f.zero()) continue;
                SuperTensor basis(parities, t.upper_count(),
                                  t.lower_count());
                basis.add_component(key, f);
                SuperTensor image = lie_derivative(q, basis);
                if (image.zero()) continue;
                candidates.push_back({key, mono, std::move(image)});
            }
        });

        std::map<std::pair<std::vector<int>, SuperFunction::Monomial>, int>
            row_index;
        auto row_of = [&](const std::vector<int>& key,
                          const SuperFunction::Monomial& mono) {
            return row_index
                .emplace(std::make_pair(key, mono),
                         static_cast<int>(row_index.size()))
                .first->second;
        };
        for (const auto& c : candidates)
            for (const auto& [key, f] : c.image.components())
                for (const auto& [mono, coeff] : f.terms()) row_of(key, mono);
        for (const auto& [key, f] : part.components())
            for (const auto& [mono, coeff] : f.terms()) row_of(key, mono);

        const int rows = static_cast<int>(row_index.size());
        const int cols = static_cast<int>(candidates.size());
        RatMatrix system(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (const auto& [key, f] : candidates[j].image.components())
                for (const auto& [mono, coeff] : f.terms())
                    system.at(row_of(key, mono), j) = coeff;
        std::vector<Rat> rhs(rows, Rat(0));
        for (const auto& [key, f] : part.components())
            for (const auto& [mono, coeff] : f.terms())
                rhs[row_of(key, mono)] = coeff;

        auto solution = solve(system, rhs);
        if (!solution) return ExactnessResult{};
        for (int j = 0; j < cols; ++j) {
            if ((*solution)[j] == 0) continue;
            SuperFunction f(parities);
            f.add_term(candidates[j].mono, (*solution)[j]);
            result.primitive.add_component(candidates[j].key, f);
        }
    }
    result.exact = true;
    return result;
}

ExactnessResult is_exact(const SuperFunction& f, const LieAlgebraData& L) {
    SuperTensor scalar(ghost_parities(L), 0, 0);
    if (!f.zero()) scalar.add_component({}, f);
    return is_exact(scalar, L);
}

}  // namespace qgraph

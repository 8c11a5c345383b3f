#include "qgraph/lie.hpp"

#include "qgraph/errors.hpp"

#include <json.hpp>

#include <stdexcept>

namespace qgraph {

Rat LieAlgebraData::structure(int a, int b, int c) const {
    auto it = f.find({a, b, c});
    return it == f.end() ? Rat(0) : it->second;
}

namespace {

int generator_parity(const LieAlgebraData& L, int a) {
    return L.parities[a] & 1;
}

int sign_pow(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

void validate_algebra(const LieAlgebraData& L) {
    if (L.dim < 0 || static_cast<int>(L.parities.size()) != L.dim)
        throw JacobiFailure("parity table does not match the dimension");
    for (const auto& [key, value] : L.f) {
        for (int idx : key)
            if (idx < 0 || idx >= L.dim)
                throw JacobiFailure("structure constant index out of range");
        if (value == 0)
            throw JacobiFailure("explicit zero stored in structure constants");
    }
    const int d = L.dim;
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                const Rat lhs = L.structure(a, b, c);
                const Rat rhs =
                    -sign_pow(generator_parity(L, a) * generator_parity(L, b)) *
                    L.structure(b, a, c);
                if (lhs != rhs)
                    throw JacobiFailure(
                        "constants are not graded-antisymmetric at (" +
                        std::to_string(a) + ", " + std::to_string(b) + ")");
            }
    // [a,[b,c]] = [[a,b],c] + (-1)^{e_a e_b} [b,[a,c]]
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int t = 0; t < d; ++t) {
                    Rat total = 0;
                    for (int e = 0; e < d; ++e) {
                        total += L.structure(b, c, e) * L.structure(a, e, t);
                        total -= L.structure(a, b, e) * L.structure(e, c, t);
                        total -= sign_pow(generator_parity(L, a) *
                                          generator_parity(L, b)) *
                                 L.structure(a, c, e) * L.structure(b, e, t);
                    }
                    if (total != 0)
                        throw JacobiFailure(
                            "Jacobi identity fails at (" + std::to_string(a) +
                            ", " + std::to_string(b) + ", " +
                            std::to_string(c) + ")");
                }
}

RatMatrix ad_matrix(const LieAlgebraData& L, int a) {
    RatMatrix m(L.dim, L.dim);
    for (int b = 0; b < L.dim; ++b)
        for (int c = 0; c < L.dim; ++c)
            m.at(c, b) = L.structure(a, b, c);
    return m;
}

RatMatrix killing_form(const LieAlgebraData& L) {
    RatMatrix k(L.dim, L.dim);
    for (int a = 0; a < L.dim; ++a) {
        const RatMatrix ada = ad_matrix(L, a);
        for (int b = 0; b < L.dim; ++b) {
            const RatMatrix adb = ad_matrix(L, b);
            Rat total = 0;
            for (int c = 0; c < L.dim; ++c) {
                Rat entry = 0;
                for (int e = 0; e < L.dim; ++e)
                    entry += ada.at(c, e) * adb.at(e, c);
                total += sign_pow(generator_parity(L, c)) * entry;
            }
            k.at(a, b) = total;
        }
    }
    return k;
}

namespace {

void set_pair(LieAlgebraData& L, int a, int b, int c, const Rat& value) {
    L.f[{a, b, c}] = value;
    L.f[{b, a, c}] = -value;
}

}  // namespace

LieAlgebraData abelian_algebra(int dim) {
    if (dim < 0)
        throw std::invalid_argument("abelian_algebra needs dim >= 0");
    return {dim, std::vector<int>(dim, 0), {}};
}

LieAlgebraData affine2_algebra() {
    LieAlgebraData L = abelian_algebra(2);
    set_pair(L, 0, 1, 1, 1);
    validate_algebra(L);
    return L;
}

LieAlgebraData heisenberg3_algebra() {
    LieAlgebraData L = abelian_algebra(3);
    set_pair(L, 0, 1, 2, 1);
    validate_algebra(L);
    return L;
}

LieAlgebraData so3_algebra() {
    LieAlgebraData L = abelian_algebra(3);
    set_pair(L, 0, 1, 2, 1);
    set_pair(L, 1, 2, 0, 1);
    set_pair(L, 2, 0, 1, 1);
    validate_algebra(L);
    return L;
}

LieAlgebraData sl_algebra(int n) {
    if (n < 2)
        throw std::invalid_argument("sl_algebra needs n >= 2");
    // basis: E_ij for i != j in row-major order, then H_k = E_kk - E_k+1,k+1
    using Mat = std::vector<Rat>;  // n*n row-major
    std::vector<Mat> basis;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            Mat m(n * n);
            m[i * n + j] = 1;
            basis.push_back(m);
        }
    for (int k = 0; k + 1 < n; ++k) {
        Mat m(n * n);
        m[k * n + k] = 1;
        m[(k + 1) * n + (k + 1)] = -1;
        basis.push_back(m);
    }
    const int d = n * n - 1;

    std::map<std::pair<int, int>, int> offdiag_index;
    {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    offdiag_index[{i, j}] = idx++;
    }
    auto decompose = [&](const Mat& m) {
        std::vector<Rat> coeff(d);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    coeff[offdiag_index.at({i, j})] = m[i * n + j];
        Rat running = 0;
        for (int k = 0; k + 1 < n; ++k) {
            running += m[k * n + k];
            coeff[n * (n - 1) + k] = running;
        }
        return coeff;
    };

    LieAlgebraData L = abelian_algebra(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Mat comm(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rat entry = 0;
                    for (int k = 0; k < n; ++k)
                        entry += basis[a][i * n + k] * basis[b][k * n + j] -
                                 basis[b][i * n + k] * basis[a][k * n + j];
                    comm[i * n + j] = entry;
                }
            const auto coeff = decompose(comm);
            for (int c = 0; c < d; ++c)
                if (coeff[c] != 0)
                    L.f[{a, b, c}] = coeff[c];
        }
    validate_algebra(L);
    return L;
}

LieAlgebraData builtin_algebra(const std::string& name) {
    if (name == "sl2")
        return sl_algebra(2);
    if (name == "sl3")
        return sl_algebra(3);
    if (name == "so3")
        return so3_algebra();
    if (name == "heisenberg3")
        return heisenberg3_algebra();
    if (name == "affine2")
        return affine2_algebra();
    if (name.rfind("abelian", 0) == 0) {
        const std::string tail = name.substr(7);
        if (!tail.empty() &&
            tail.find_first_not_of("0123456789") == std::string::npos)
            return abelian_algebra(std::stoi(tail));
    }
    throw std::invalid_argument("unknown algebra: " + name);
}

std::string algebra_to_json(const LieAlgebraData& L) {
    nlohmann::json v;
    v["dim"] = L.dim;
    v["parities"] = L.parities;
    v["f"] = nlohmann::json::array();
    for (const auto& [key, value] : L.f)
        v["f"].push_back({key[0], key[1], key[2], rat_to_string(value)});
    return v.dump(2);
}

LieAlgebraData algebra_from_json(const std::string& text) {
    nlohmann::json v;
    try {
        v = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("bad algebra JSON: ") +
                                    err.what());
    }
    LieAlgebraData L;
    try {
        L.dim = v.at("dim").get<int>();
        L.parities = v.at("parities").get<std::vector<int>>();
        for (const auto& entry : v.at("f")) {
            if (!entry.is_array() || entry.size() != 4)
                throw std::invalid_argument(
                    "structure constant entry is not [a, b, c, value]");
            L.f[{entry[0].get<int>(), entry[1].get<int>(),
                 entry[2].get<int>()}] =
                rat_from_string(entry[3].get<std::string>());
        }
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("bad algebra JSON: ") +
                                    err.what());
    }
    validate_algebra(L);
    return L;
}

}  // namespace qgraph

#include "qgraph/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qgraph {

void RatMatrix::append_row(const std::vector<Rat>& row) {
    if (cols_ == 0 && rows_ == 0)
        cols_ = row.size();
    if (row.size() != cols_)
        throw std::invalid_argument("appended row has wrong width");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> RatMatrix::echelonize() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && at(p, c) == 0)
            ++p;
        if (p == rows_)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols_; ++j)
                std::swap(at(p, j), at(r, j));
        const Rat inv = Rat(1) / at(r, c);
        for (std::size_t j = c; j < cols_; ++j)
            at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0)
                continue;
            const Rat f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) {
    return m.echelonize().size();
}

std::vector<std::vector<Rat>> kernel_basis(RatMatrix m) {
    auto pivots = m.echelonize();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> x(m.cols(), Rat(0));
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -m.at(i, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(RatMatrix m, std::vector<Rat> b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("right-hand side has wrong length");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = aug.echelonize();
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    std::vector<Rat> x(m.cols(), Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.at(i, m.cols());
    return x;
}

}  // namespace qgraph

#ifndef QGRAPH_LINALG_HPP
#define QGRAPH_LINALG_HPP

#include "qgraph/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qgraph {

// Dense rational matrix, row major.  Small enough sectors make exact
// Gaussian elimination the whole story.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    void append_row(const std::vector<Rat>& row);

    // Reduce in place to row echelon form; returns the pivot columns.
    std::vector<std::size_t> echelonize();

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

std::size_t rank(RatMatrix m);

// Basis of the right null space {x : Mx = 0}.
std::vector<std::vector<Rat>> kernel_basis(RatMatrix m);

// One solution of Mx = b with free variables set to zero, or nullopt when
// the system is inconsistent.
std::optional<std::vector<Rat>> solve(RatMatrix m, std::vector<Rat> b);

}  // namespace qgraph

#endif  // QGRAPH_LINALG_HPP

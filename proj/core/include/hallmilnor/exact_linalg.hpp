#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hallmilnor/integer.hpp"

namespace hallmilnor {

// Dense integer matrix, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Exact rank over the integers (equivalently over the rationals), computed
// by fraction-free (Bareiss) elimination. No rounding anywhere.
int bareiss_rank(IntMatrix m);

// One column of a sparse system: (row, value) pairs with distinct rows.
using SparseColumn = std::vector<std::pair<std::size_t, Int>>;

// Solver for A x = b with a fixed full-column-rank integer matrix A and
// many right hand sides. Preparation runs fraction-free elimination once;
// each solve is integer back-substitution on the cached echelon form plus
// a full consistency check of the remaining rows.
class ExactSolver {
public:
    // columns[j] holds the sparse column j; row indices < row_count.
    ExactSolver(std::size_t row_count, std::vector<SparseColumn> columns);

    std::size_t row_count() const noexcept { return row_count_; }
    std::size_t column_count() const noexcept { return columns_.size(); }

    // Exact integer solution of A x = b. Throws DomainError if the system
    // is inconsistent or the solution is not integral.
    std::vector<Int> solve(const SparseColumn& b) const;

private:
    std::size_t row_count_;
    std::vector<SparseColumn> columns_;
    std::vector<std::size_t> pivot_rows_; // m rows forming an invertible square subsystem
    IntMatrix upper_;                     // U = T * A_pivot, upper triangular
    IntMatrix transform_;                 // T, the recorded row operations
};

} // namespace hallmilnor

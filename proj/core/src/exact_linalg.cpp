#include "hallmilnor/exact_linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hallmilnor/errors.hpp"

namespace hallmilnor {

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

namespace {

bool abs_less(const Int& a, const Int& b) {
    using boost::multiprecision::abs;
    return abs(a) < abs(b);
}

// One Bareiss sweep. Entries stay minors of the input, so every division
// by the previous pivot is exact. Pivots are chosen with the smallest
// nonzero magnitude to slow entry growth. Returns the pivot (row, column)
// pairs in elimination order; `row_origin`, when given, tracks original
// row indices through swaps.
std::vector<std::pair<std::size_t, std::size_t>>
fraction_free_eliminate(IntMatrix& m, std::vector<std::size_t>* row_origin) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = rows;
        for (std::size_t i = row; i < rows; ++i) {
            if (m(i, col) == 0)
                continue;
            if (p == rows || abs_less(m(i, col), m(p, col)))
                p = i;
            if (m(p, col) == 1 || m(p, col) == -1)
                break;
        }
        if (p == rows)
            continue;
        m.swap_rows(row, p);
        if (row_origin && row != p)
            std::swap((*row_origin)[row], (*row_origin)[p]);
        const Int& pivot = m(row, col);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m(i, j) = (pivot * m(i, j) - m(i, col) * m(row, j)) / prev;
            m(i, col) = 0;
        }
        prev = pivot;
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

} // namespace

int bareiss_rank(IntMatrix m) {
    return static_cast<int>(fraction_free_eliminate(m, nullptr).size());
}

ExactSolver::ExactSolver(std::size_t row_count, std::vector<SparseColumn> columns)
    : row_count_(row_count), columns_(std::move(columns)) {
    const std::size_t m = columns_.size();
    for (const SparseColumn& col : columns_) {
        for (const auto& [row, value] : col) {
            if (row >= row_count_)
                throw DomainError("sparse column row index out of range");
            (void)value;
        }
    }

    IntMatrix a(row_count_, m);
    for (std::size_t j = 0; j < m; ++j) {
        for (const auto& [row, value] : columns_[j])
            a(row, j) += value;
    }

    std::vector<std::size_t> origin(row_count_);
    for (std::size_t i = 0; i < row_count_; ++i)
        origin[i] = i;
    auto pivots = fraction_free_eliminate(a, &origin);
    if (pivots.size() != m)
        throw DomainError("columns are not linearly independent");

    pivot_rows_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (pivots[k].second != k)
            throw DomainError("columns are not linearly independent");
        pivot_rows_[k] = origin[pivots[k].first];
    }

    // Square subsystem on the pivot rows, eliminated together with the
    // identity to record the row operations. The pivot-row choice makes
    // every leading principal minor nonzero, so no swaps are needed here.
    IntMatrix aug(m, 2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        for (const auto& [row, value] : columns_[j]) {
            auto it = std::find(pivot_rows_.begin(), pivot_rows_.end(), row);
            if (it != pivot_rows_.end())
                aug(static_cast<std::size_t>(it - pivot_rows_.begin()), j) += value;
        }
    }
    for (std::size_t k = 0; k < m; ++k)
        aug(k, m + k) = 1;

    Int prev = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (aug(k, k) == 0)
            throw std::logic_error("pivot-row subsystem lost its pivot");
        const Int& pivot = aug(k, k);
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < 2 * m; ++j)
                aug(i, j) = (pivot * aug(i, j) - aug(i, k) * aug(k, j)) / prev;
            aug(i, k) = 0;
        }
        prev = pivot;
    }

    upper_ = IntMatrix(m, m);
    transform_ = IntMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            upper_(i, j) = aug(i, j);
            transform_(i, j) = aug(i, m + j);
        }
    }
}

std::vector<Int> ExactSolver::solve(const SparseColumn& b) const {
    const std::size_t m = columns_.size();
    std::map<std::size_t, Int> rhs;
    for (const auto& [row, value] : b) {
        if (row >= row_count_)
            throw DomainError("right hand side row index out of range");
        rhs[row] += value;
    }

    // y = T * b restricted to the pivot rows.
    std::vector<Int> y(m, Int(0));
    for (std::size_t j = 0; j < m; ++j) {
        auto it = rhs.find(pivot_rows_[j]);
        if (it == rhs.end() || it->second == 0)
            continue;
        for (std::size_t i = 0; i < m; ++i) {
            if (transform_(i, j) != 0)
                y[i] += transform_(i, j) * it->second;
        }
    }

    // Back substitution; the solution must be integral, so every division
    // is checked for a zero remainder.
    std::vector<Int> x(m, Int(0));
    for (std::size_t k = m; k-- > 0;) {
        Int num = y[k];
        for (std::size_t j = k + 1; j < m; ++j) {
            if (x[j] != 0 && upper_(k, j) != 0)
                num -= upper_(k, j) * x[j];
        }
        Int quotient, remainder;
        boost::multiprecision::divide_qr(num, upper_(k, k), quotient, remainder);
        if (remainder != 0)
            throw DomainError("system has no integral solution");
        x[k] = quotient;
    }

    // The square subsystem only used the pivot rows; check all of them.
    std::map<std::size_t, Int> residual = rhs;
    for (std::size_t j = 0; j < m; ++j) {
        if (x[j] == 0)
            continue;
        for (const auto& [row, value] : columns_[j])
            residual[row] -= value * x[j];
    }
    for (const auto& [row, value] : residual) {
        if (value != 0)
            throw DomainError("inconsistent system: row " + std::to_string(row) +
                              " has nonzero residual");
    }
    return x;
}

} // namespace hallmilnor

#include <vector>

#include <doctest.h>

#include "hallmilnor/errors.hpp"
#include "hallmilnor/exact_linalg.hpp"
#include "hallmilnor/tensor.hpp"

using namespace hallmilnor;

TEST_CASE("tensor arithmetic") {
    const TensorElement x = TensorElement::generator(1);
    const TensorElement y = TensorElement::generator(2);

    const TensorElement xy = x * y;
    CHECK(xy.coefficient({1, 2}) == 1);
    CHECK(xy.coefficient({2, 1}) == 0);

    TensorElement comm = x * y - y * x;
    CHECK(comm.coefficient({1, 2}) == 1);
    CHECK(comm.coefficient({2, 1}) == -1);
    CHECK((comm - comm).is_zero());
    CHECK((comm * Int(0)).is_zero());
    CHECK((Int(3) * comm).coefficient({1, 2}) == 3);
    CHECK((-comm).coefficient({2, 1}) == 1);

    // (xy - yx) * x distributes over concatenation.
    const TensorElement t = comm * x;
    CHECK(t.coefficient({1, 2, 1}) == 1);
    CHECK(t.coefficient({2, 1, 1}) == -1);
    CHECK(t.degrees() == std::vector<int>{3});

    TensorElement mixed = x + t;
    CHECK(mixed.degrees() == std::vector<int>{1, 3});
    CHECK(mixed.homogeneous_part(3) == t);
    CHECK(mixed.homogeneous_part(2).is_zero());
}

TEST_CASE("tensor cancellation drops entries") {
    TensorElement a;
    a.add_term({1, 2}, Int(5));
    a.add_term({1, 2}, Int(-5));
    CHECK(a.is_zero());
    CHECK(a.terms().empty());
}

TEST_CASE("rank of small matrices") {
    IntMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        id(i, i) = 1;
    CHECK(bareiss_rank(id) == 3);

    // Diagonal with non-unit pivots: exercises the full fraction-free
    // update including rows whose eliminated entry is already zero.
    IntMatrix diag(3, 3);
    diag(0, 0) = 2;
    diag(1, 1) = 3;
    diag(2, 2) = 5;
    CHECK(bareiss_rank(diag) == 3);

    IntMatrix dependent(3, 3);
    // Row 2 = row 0 + row 1.
    const int rows[3][3] = {{1, 2, 3}, {4, 5, 6}, {5, 7, 9}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            dependent(i, j) = rows[i][j];
    CHECK(bareiss_rank(dependent) == 2);

    CHECK(bareiss_rank(IntMatrix(4, 2)) == 0);
    CHECK(bareiss_rank(IntMatrix()) == 0);

    IntMatrix wide(2, 4);
    wide(0, 2) = 7;
    wide(1, 2) = 14;
    wide(1, 3) = -1;
    CHECK(bareiss_rank(wide) == 2);
}

TEST_CASE("solver round trips integral systems") {
    // A = [[1, 0], [2, 1], [0, 3]] (full column rank, 3 rows).
    std::vector<SparseColumn> columns = {
        {{0, Int(1)}, {1, Int(2)}},
        {{1, Int(1)}, {2, Int(3)}},
    };
    const ExactSolver solver(3, columns);
    CHECK(solver.row_count() == 3);
    CHECK(solver.column_count() == 2);

    // b = A * (4, -1).
    const SparseColumn b = {{0, Int(4)}, {1, Int(7)}, {2, Int(-3)}};
    const std::vector<Int> sol = solver.solve(b);
    REQUIRE(sol.size() == 2);
    CHECK(sol[0] == 4);
    CHECK(sol[1] == -1);

    CHECK(solver.solve({}).empty() == false); // zero rhs -> zero solution
    const std::vector<Int> zero = solver.solve({});
    CHECK(zero[0] == 0);
    CHECK(zero[1] == 0);
}

TEST_CASE("solver rejects inconsistent and fractional systems") {
    std::vector<SparseColumn> columns = {{{0, Int(2)}}};
    const ExactSolver solver(2, columns);

    CHECK_THROWS_AS(solver.solve({{0, Int(1)}}), DomainError);            // 2x = 1
    CHECK_THROWS_AS(solver.solve({{0, Int(2)}, {1, Int(1)}}), DomainError); // residual row
    CHECK(solver.solve({{0, Int(-4)}})[0] == -2);
}

TEST_CASE("solver rejects dependent columns") {
    std::vector<SparseColumn> columns = {
        {{0, Int(1)}, {1, Int(2)}},
        {{0, Int(2)}, {1, Int(4)}},
    };
    CHECK_THROWS_AS(ExactSolver(2, columns), DomainError);
}

TEST_CASE("solver validates row indices") {
    CHECK_THROWS_AS(ExactSolver(1, {{{5, Int(1)}}}), DomainError);
    const ExactSolver solver(1, {{{0, Int(1)}}});
    CHECK_THROWS_AS(solver.solve({{7, Int(1)}}), DomainError);
}

TEST_CASE("solver with no columns") {
    const ExactSolver solver(2, {});
    CHECK(solver.solve({}).empty());
    CHECK_THROWS_AS(solver.solve({{0, Int(1)}}), DomainError);
}

TEST_CASE("solver handles a permuted system") {
    // Columns chosen so the first usable pivot is not in row 0.
    std::vector<SparseColumn> columns = {
        {{2, Int(3)}},
        {{0, Int(1)}, {2, Int(5)}},
    };
    const ExactSolver solver(3, columns);
    // b = A * (2, -1) = (-1, 0, 1).
    const std::vector<Int> sol = solver.solve({{0, Int(-1)}, {2, Int(1)}});
    CHECK(sol[0] == 2);
    CHECK(sol[1] == -1);
}

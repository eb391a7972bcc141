#include <climits>
#include <random>

#include <doctest.h>

#include "hallmilnor/errors.hpp"
#include "hallmilnor/hall.hpp"
#include "hallmilnor/series.hpp"

using namespace hallmilnor;

namespace {

MultiSeries random_series(std::mt19937& rng, int num_vars, int truncation, int max_terms,
                          bool t_only) {
    MultiSeries f(num_vars, truncation);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(0, truncation);
    const int terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
    for (int i = 0; i < terms; ++i) {
        MultiSeries::Exponents e(static_cast<std::size_t>(num_vars) + 1, 0);
        if (!t_only)
            e[0] = std::uniform_int_distribution<int>(0, 2)(rng);
        int total = 0;
        for (int v = 1; v <= num_vars; ++v) {
            e[static_cast<std::size_t>(v)] = exp(rng) / num_vars;
            total += e[static_cast<std::size_t>(v)];
        }
        if (total == 0)
            e[1] = 1; // keep the constant term zero
        f.add_term(e, Int(coeff(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("series construction and truncation") {
    MultiSeries f(2, 3);
    CHECK(f.is_zero());
    CHECK(f.num_vars() == 2);
    CHECK(f.truncation() == 3);
    CHECK(f.order() == INT_MAX);
    CHECK(f.constant_term_is_zero());

    f.add_term({0, 1, 0}, Int(2));
    f.add_term({0, 1, 3}, Int(5)); // t-degree 4 > 3: dropped
    f.add_term({4, 1, 0}, Int(5)); // s exponent beyond the bound: dropped
    f.add_term({3, 1, 2}, Int(7));
    CHECK(f.coefficient({0, 1, 0}) == 2);
    CHECK(f.coefficient({0, 1, 3}) == 0);
    CHECK(f.coefficient({4, 1, 0}) == 0);
    CHECK(f.coefficient({3, 1, 2}) == 7);
    CHECK(f.order() == 1);

    f.add_term({0, 1, 0}, Int(-2)); // cancels
    CHECK(f.coefficient({0, 1, 0}) == 0);
    CHECK(f.terms().size() == 1);

    CHECK_THROWS_AS(f.add_term({0, 1}, Int(1)), DomainError);     // arity
    CHECK_THROWS_AS(f.add_term({0, -1, 0}, Int(1)), DomainError); // negative exponent
    CHECK_THROWS_AS(MultiSeries(-1, 3), DomainError);
    CHECK_THROWS_AS(MultiSeries(2, -1), DomainError);

    const MultiSeries g = MultiSeries::generator(2, 3, 1);
    CHECK(g.coefficient({0, 0, 1}) == 1);
    CHECK(g.order() == 1);
    CHECK_THROWS_AS(MultiSeries::generator(2, 3, 2), DomainError);

    const MultiSeries cut = f.truncated(2);
    CHECK(cut.truncation() == 2);
    CHECK(cut.is_zero()); // the surviving term had t-degree 3
    CHECK_THROWS_AS(f.truncated(4), DomainError);
}

TEST_CASE("ring arithmetic") {
    const int N = 4;
    const MultiSeries t1 = MultiSeries::generator(2, N, 0);
    const MultiSeries t2 = MultiSeries::generator(2, N, 1);

    const MultiSeries sum = series_add(t1, t2);
    CHECK(sum.coefficient({0, 1, 0}) == 1);
    CHECK(sum.coefficient({0, 0, 1}) == 1);

    const MultiSeries sq = series_mul(sum, sum);
    CHECK(sq.coefficient({0, 2, 0}) == 1);
    CHECK(sq.coefficient({0, 1, 1}) == 2);
    CHECK(sq.coefficient({0, 0, 2}) == 1);

    CHECK(series_eq(series_pow(sum, 2), sq));
    const MultiSeries cube = series_pow(sum, 3);
    CHECK(cube.coefficient({0, 2, 1}) == 3);
    CHECK(series_eq(series_pow(sum, 0), series_pow(sum, 0)));
    CHECK(series_pow(sum, 0).coefficient({0, 0, 0}) == 1);

    CHECK(series_eq(series_sub(sum, sum), MultiSeries::zero(2, N)));
    CHECK(series_scale(sum, Int(-3)).coefficient({0, 1, 0}) == -3);

    CHECK_THROWS_AS(series_add(t1, MultiSeries::generator(3, N, 0)), DomainError);
    CHECK_THROWS_AS(series_pow(sum, -1), DomainError);
}

TEST_CASE("squaring at the truncation bound keeps every degree-2 term") {
    const int N = 2;
    const MultiSeries sum =
        series_add(MultiSeries::generator(2, N, 0), MultiSeries::generator(2, N, 1));
    const MultiSeries sq = series_mul(sum, sum);
    CHECK(sq.coefficient({0, 2, 0}) == 1);
    CHECK(sq.coefficient({0, 1, 1}) == 2);
    CHECK(sq.coefficient({0, 0, 2}) == 1);
    CHECK(sq.terms().size() == 3);
}

TEST_CASE("randomized ring identities") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const MultiSeries a = random_series(rng, 2, 5, 4, false);
        const MultiSeries b = random_series(rng, 2, 5, 4, false);
        const MultiSeries c = random_series(rng, 2, 5, 4, false);
        CHECK(series_eq(series_mul(a, b), series_mul(b, a)));
        CHECK(series_eq(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c))));
        CHECK(series_eq(series_mul(series_add(a, b), c),
                        series_add(series_mul(a, c), series_mul(b, c))));
    }
}

TEST_CASE("truncation is a ring map") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiSeries a = random_series(rng, 2, 6, 4, false);
        const MultiSeries b = random_series(rng, 2, 6, 4, false);
        const MultiSeries whole = series_mul(a, b).truncated(3);
        const MultiSeries parts = series_mul(a.truncated(3), b.truncated(3));
        CHECK(series_eq(whole, parts));
    }
}

TEST_CASE("mismatch reporting") {
    MultiSeries a(1, 3), b(1, 3);
    a.add_term({0, 1}, Int(2));
    b.add_term({0, 1}, Int(5));
    b.add_term({0, 2}, Int(1));
    SeriesMismatch mismatch;
    CHECK(!series_eq(a, b, &mismatch));
    CHECK(mismatch.exponents == std::vector<int>{0, 1});
    CHECK(mismatch.left == 2);
    CHECK(mismatch.right == 5);
    CHECK_THROWS_AS(series_eq(a, MultiSeries(2, 3)), DomainError);
}

TEST_CASE("geometric sum") {
    const int N = 4;
    const MultiSeries t = MultiSeries::generator(1, N, 0);
    const MultiSeries g = geom_sum(t);
    for (int k = 1; k <= N; ++k)
        CHECK(g.coefficient({0, k}) == 1);
    CHECK(g.coefficient({0, 0}) == 0);

    // Defining identity: g - g*f = f, i.e. g = f/(1-f).
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiSeries f = random_series(rng, 2, 6, 4, false);
        const MultiSeries sum = geom_sum(f);
        CHECK(series_eq(series_sub(sum, series_mul(sum, f)), f));
    }

    CHECK(geom_sum(MultiSeries::zero(2, N)).is_zero());

    MultiSeries with_constant(1, 3);
    with_constant.add_term({0, 0}, Int(1));
    CHECK_THROWS_AS(geom_sum(with_constant), DomainError);

    // A pure-s series is admissible: s has zero constant term.
    MultiSeries pure_s(1, 3);
    pure_s.add_term({1, 0}, Int(1));
    const MultiSeries gs = geom_sum(pure_s);
    CHECK(gs.coefficient({1, 0}) == 1);
    CHECK(gs.coefficient({3, 0}) == 1);
}

TEST_CASE("pointed-object series constructions") {
    const int N = 3;
    const MultiSeries a = MultiSeries::generator(2, N, 0); // t1
    const MultiSeries b = MultiSeries::generator(2, N, 1); // t2

    CHECK(series_eq(wedge_series(a, b), series_add(a, b)));

    const MultiSeries prod = product_series(a, b);
    CHECK(prod.coefficient({0, 1, 0}) == 1);
    CHECK(prod.coefficient({0, 0, 1}) == 1);
    CHECK(prod.coefficient({0, 1, 1}) == 1);
    CHECK(prod.coefficient({0, 0, 0}) == 0);

    CHECK(smash_series(a, b).coefficient({0, 1, 1}) == 1);
    CHECK(suspend_series(a).coefficient({1, 1, 0}) == 1);
    CHECK(join_series(a, b).coefficient({1, 1, 1}) == 1);

    const MultiSeries half = half_smash_series(a, b); // t2 + t1 t2
    CHECK(half.coefficient({0, 0, 1}) == 1);
    CHECK(half.coefficient({0, 1, 1}) == 1);
    CHECK(half.coefficient({0, 1, 0}) == 0);

    const MultiSeries cof = cof_null_series(a, b); // s t1 + t2
    CHECK(cof.coefficient({1, 1, 0}) == 1);
    CHECK(cof.coefficient({0, 0, 1}) == 1);

    // Degenerate arguments collapse the constructions.
    const MultiSeries zero = MultiSeries::zero(2, N);
    CHECK(series_eq(product_series(a, zero), a));
    CHECK(series_eq(product_series(zero, b), b));
    CHECK(series_eq(cof_null_series(zero, b), b));
    CHECK(series_eq(cof_null_series(a, zero), suspend_series(a)));
    CHECK(series_eq(half_smash_series(zero, a), a));

    // Joining is suspending the smash.
    CHECK(series_eq(join_series(a, b), suspend_series(smash_series(a, b))));
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        const MultiSeries f = random_series(rng, 2, N, 4, true);
        const MultiSeries g = random_series(rng, 2, N, 4, true);
        CHECK(series_eq(join_series(f, g), suspend_series(smash_series(f, g))));
    }

    MultiSeries bad(2, N);
    bad.add_term({0, 0, 0}, Int(1));
    CHECK_THROWS_AS(wedge_series(a, bad), DomainError);
    CHECK_THROWS_AS(smash_series(bad, b), DomainError);
    CHECK_THROWS_AS(suspend_series(bad), DomainError);
}

TEST_CASE("connectivity combinators") {
    CHECK(conn_susp(-1) == 0);
    CHECK(conn_susp(3) == 4);
    CHECK(conn_loop(0) == -1);
    CHECK(conn_loop(5) == 4);
    CHECK(conn_smash(0, 0) == 1);
    CHECK(conn_smash(2, 3) == 6);
    CHECK(conn_smash_power(0, 3) == 2);
    CHECK(conn_smash_power(1, 0) == -1); // empty smash: the sphere S^0
    CHECK(conn_wedge(2, 5) == 2);
    CHECK(conn_product(4, 1) == 1);

    for (int k = -1; k <= 5; ++k)
        CHECK(conn_loop(conn_susp(k)) == k); // looping undoes suspending

    CHECK_THROWS_AS(conn_susp(-2), DomainError);
    CHECK_THROWS_AS(conn_loop(-1), DomainError);
    CHECK_THROWS_AS(conn_smash(-2, 0), DomainError);
    CHECK_THROWS_AS(conn_smash_power(0, -1), DomainError);
    CHECK_THROWS_AS(conn_wedge(-2, -2), DomainError);
}

TEST_CASE("word connectivity") {
    const Alphabet alphabet({"x", "y"});
    const HallWord w = parse_word("[x,[x,y]]", alphabet);
    CHECK(word_connectivity(w, {0, 0}) == 2);        // length - 1
    CHECK(word_connectivity(w, {1, 2}) == 6);        // 2*2 + 1*3 - 1
    CHECK(word_connectivity(w, {1, 3}) == 7);        // 2*2 + 1*4 - 1
    CHECK(word_connectivity(HallWord::leaf(1), {5, 0}) == 5);
    CHECK_THROWS_AS(word_connectivity(w, {0}), DomainError);
    CHECK_THROWS_AS(word_connectivity(w, {-1, 0}), DomainError);
}

TEST_CASE("word connectivity is monotone") {
    const HallBasisTable table = enumerate_hall_basis(2, 5);
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> conn(0, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<int> base = {conn(rng), conn(rng)};
        for (const RankedWord& rw : table.words()) {
            // Raising any generator's connectivity cannot lower the bound.
            for (std::size_t i = 0; i < base.size(); ++i) {
                std::vector<int> raised = base;
                ++raised[i];
                CHECK(word_connectivity(rw.word, raised) >=
                      word_connectivity(rw.word, base));
            }
        }
        // At equal connectivities the bound grows strictly with word length.
        const int c = conn(rng);
        const std::vector<int> uniform = {c, c};
        for (int len = 2; len <= 5; ++len)
            CHECK(word_connectivity(table.words_of_length(len).front().word, uniform) >
                  word_connectivity(table.words_of_length(len - 1).front().word, uniform));
    }
}

TEST_CASE("formal object validation") {
    const MultiSeries t = MultiSeries::generator(1, 4, 0);
    validate_formal_object({"X", 0, t}); // fine

    CHECK_THROWS_WITH_AS(validate_formal_object({"X", -1, t}),
                         doctest::Contains("pointed connected objects"), DomainError);

    MultiSeries with_constant = t;
    with_constant.add_term({0, 0}, Int(1));
    CHECK_THROWS_AS(validate_formal_object({"X", 0, with_constant}), DomainError);

    // Order 1 series cannot claim connectivity 1 (needs order >= 2).
    CHECK_THROWS_AS(validate_formal_object({"X", 1, t}), DomainError);
    MultiSeries sq(1, 4);
    sq.add_term({0, 2}, Int(1));
    validate_formal_object({"X", 1, sq}); // fine
}

TEST_CASE("series formatting") {
    CHECK(format_series(MultiSeries(2, 3)) == "0");

    MultiSeries f(2, 4);
    f.add_term({0, 1, 0}, Int(1));
    f.add_term({1, 1, 2}, Int(2));
    f.add_term({0, 0, 2}, Int(-1));
    CHECK(format_series(f) == "-t2^2 + t1 + 2·s·t1·t2^2");
}

#include <memory>

#include <doctest.h>

#include "hallmilnor/errors.hpp"
#include "hallmilnor/free_lie.hpp"
#include "hallmilnor/hall.hpp"
#include "hallmilnor/hilton_milnor.hpp"
#include "hallmilnor/json_io.hpp"
#include "hallmilnor/series.hpp"

using namespace hallmilnor;

TEST_CASE("table round trip") {
    for (OrderPolicy policy : {OrderPolicy::CreationOrder, OrderPolicy::LexTree}) {
        const HallBasisTable table = enumerate_hall_basis(2, 4, policy);
        const std::string text = to_json_string(table);
        const HallBasisTable back = table_from_json(text);
        CHECK(back.size() == table.size());
        CHECK(back.policy() == table.policy());
        CHECK(back.max_len() == table.max_len());
        for (int s = 1; s <= table.size(); ++s) {
            CHECK(back.at_serial(s).word == table.at_serial(s).word);
            CHECK(back.at_serial(s).rank == table.at_serial(s).rank);
        }
        CHECK(to_json_string(back) == text); // byte stable
    }
}

TEST_CASE("tensor round trip") {
    TensorElement e;
    e.add_term({1, 2, 1}, Int("123456789012345678901234567890"));
    e.add_term({2}, Int(-7));
    const std::string text = to_json_string(e);
    const TensorElement back = tensor_from_json(text);
    CHECK(back == e);
    CHECK(to_json_string(back) == text);
}

TEST_CASE("lie element round trip") {
    const auto table =
        std::make_shared<const HallBasisTable>(enumerate_hall_basis(Alphabet({"x", "y"}), 3));
    const LieElement e = rewrite_to_hall(
        BracketExpr::from_word(parse_word("[[x,y],y]", table->alphabet())), table);
    REQUIRE(!e.is_zero());
    const std::string text = to_json_string(e);
    const LieElement back = lie_element_from_json(text);
    CHECK(back.terms() == e.terms());
    CHECK(back.table().max_len() == 3);
    CHECK(to_json_string(back) == text);
}

TEST_CASE("series round trip") {
    MultiSeries f(2, 5);
    f.add_term({1, 2, 0}, Int(-3));
    f.add_term({0, 1, 1}, Int("99999999999999999999"));
    const std::string text = to_json_string(f);
    const MultiSeries back = series_from_json(text);
    CHECK(series_eq(back, f));
    CHECK(back.truncation() == 5);
    CHECK(to_json_string(back) == text);
}

TEST_CASE("formal object round trip") {
    MultiSeries f(1, 4);
    f.add_term({0, 2}, Int(4));
    const FormalObject object{"Sph", 1, f};
    const std::string text = to_json_string(object);
    const FormalObject back = formal_object_from_json(text);
    CHECK(back.name == "Sph");
    CHECK(back.connectivity == 1);
    CHECK(series_eq(back.reduced_series, f));
    CHECK(to_json_string(back) == text);
}

TEST_CASE("basis report round trip") {
    const BasisReport report = verify_hall_basis(enumerate_hall_basis(2, 3), 3);
    const std::string text = to_json_string(report);
    const BasisReport back = basis_report_from_json(text);
    CHECK(back.independent == report.independent);
    CHECK(back.spans == report.spans);
    REQUIRE(back.degrees.size() == report.degrees.size());
    for (std::size_t i = 0; i < back.degrees.size(); ++i) {
        CHECK(back.degrees[i].witt == report.degrees[i].witt);
        CHECK(back.degrees[i].independent_rank == report.degrees[i].independent_rank);
    }
    CHECK(to_json_string(back) == text);
}

TEST_CASE("decomposition round trip") {
    std::vector<FormalObject> objects;
    for (int i = 0; i < 2; ++i)
        objects.push_back(FormalObject{i == 0 ? "x" : "y", 0,
                                       MultiSeries::generator(2, 6, i)});

    for (DecomposeBound bound :
         {DecomposeBound(MaxWordLength{4}), DecomposeBound(MinOmittedConnectivity{3})}) {
        const Decomposition d = decompose(objects, bound);
        const std::string text = to_json_string(d);
        const Decomposition back = decomposition_from_json(text);
        REQUIRE(back.factors.size() == d.factors.size());
        for (std::size_t i = 0; i < back.factors.size(); ++i) {
            CHECK(back.factors[i].word.word == d.factors[i].word.word);
            CHECK(back.factors[i].conn_bound == d.factors[i].conn_bound);
            CHECK(series_eq(back.factors[i].factor_series, d.factors[i].factor_series));
        }
        CHECK(back.residual_conn == d.residual_conn);
        CHECK(to_json_string(back) == text);
    }

    const Decomposition single =
        decompose({FormalObject{"x", 0, MultiSeries::generator(1, 6, 0)}}, MaxWordLength{3});
    CHECK(!single.residual_conn.has_value());
    const Decomposition back = decomposition_from_json(to_json_string(single));
    CHECK(!back.residual_conn.has_value());
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(table_from_json("not json"), ParseError);
    CHECK_THROWS_AS(table_from_json("{}"), ParseError);
    CHECK_THROWS_AS(series_from_json("{\"variables\": 1}"), ParseError);
    CHECK_THROWS_AS(tensor_from_json("{\"terms\": [{\"sequence\": [1], \"coefficient\": \"x\"}]}"),
                    ParseError);
    CHECK_THROWS_AS(formal_object_from_json(
                        "{\"name\": \"X\", \"connectivity\": -2, \"reduced_series\": "
                        "{\"variables\": 1, \"truncation\": 3, \"terms\": []}}"),
                    ParseError);

    // Tampered table: the listed word does not match the enumeration.
    const std::string good = to_json_string(enumerate_hall_basis(Alphabet({"x", "y"}), 2));
    std::string bad = good;
    const std::string needle = "\"[x,y]\"";
    bad.replace(bad.find(needle), needle.size(), "\"[y,y]\"");
    CHECK_THROWS_AS(table_from_json(bad), ParseError);
}

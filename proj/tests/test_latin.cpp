#include <doctest.h>

#include "framekit/io.hpp"
#include "framekit/latin.hpp"

#include "helpers.hpp"

using namespace framekit;

TEST_CASE("mols_pair across the supported spectrum") {
    for (int s : {1, 3, 4, 5, 7, 8, 9, 11, 12, 15, 16, 20, 21, 24}) {
        CAPTURE(s);
        auto pair = latin::mols_pair(s);
        CHECK(pair.first.order == s);
        CHECK(latin::verify_orthogonal_pair(pair).valid());
    }
}

TEST_CASE("mols_pair rejects nonexistent and unsupported orders") {
    CHECK_THROWS_WITH_AS(latin::mols_pair(2), doctest::Contains("no pair"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(latin::mols_pair(6), doctest::Contains("no pair"), std::invalid_argument);
    CHECK_THROWS_AS(latin::mols_pair(10), std::invalid_argument);
    CHECK_THROWS_AS(latin::mols_pair(0), std::invalid_argument);
}

TEST_CASE("sols_diagonal gives an idempotent self-orthogonal square") {
    for (int u : {5, 7, 9, 11, 13, 25}) {
        CAPTURE(u);
        auto pair = latin::sols_diagonal(u);
        REQUIRE(pair.first.order == u);
        CHECK(latin::verify_orthogonal_pair(pair).valid());
        for (int i = 0; i < u; ++i) {
            CHECK(pair.first.at(i, i) == i);
            for (int j = 0; j < u; ++j) {
                CHECK(pair.second.at(i, j) == pair.first.at(j, i));
                if (i != j) CHECK(pair.first.at(i, j) != pair.second.at(i, j));
            }
        }
    }
    CHECK_THROWS_AS(latin::sols_diagonal(3), std::invalid_argument);
    CHECK_THROWS_AS(latin::sols_diagonal(6), std::invalid_argument);
}

TEST_CASE("verify_latin flags broken squares") {
    auto pair = latin::mols_pair(4);
    CHECK(latin::verify_latin(pair.first).valid());
    auto broken = pair.first;
    broken.grid[0][0] = broken.grid[0][1];
    CHECK_FALSE(latin::verify_latin(broken).valid());
    auto not_orthogonal = latin::OrthogonalPair{pair.first, pair.first};
    CHECK_FALSE(latin::verify_orthogonal_pair(not_orthogonal).valid());
}

TEST_CASE("direct product preserves orthogonality") {
    auto a = latin::mols_pair(3);
    auto b = latin::mols_pair(4);
    auto prod = latin::direct_product(a, b);
    CHECK(prod.first.order == 12);
    CHECK(latin::verify_orthogonal_pair(prod).valid());
}

TEST_CASE("the bundled incomplete pair fixture verifies") {
    auto file = io::read_latin(testhelpers::read_fixture("euler-iols6.latin"));
    auto pair = file.as_incomplete_pair();
    CHECK(pair.order == 6);
    CHECK(pair.hole == 2);
    CHECK(latin::verify_incomplete_pair(pair).valid());
}

TEST_CASE("incomplete pair verifier rejects mutations") {
    auto file = io::read_latin(testhelpers::read_fixture("euler-iols6.latin"));
    auto pair = file.as_incomplete_pair();
    auto broken = pair;
    std::swap(broken.first[0][0], broken.first[0][1]);
    CHECK_FALSE(latin::verify_incomplete_pair(broken).valid());
    auto hole_filled = pair;
    hole_filled.first[5][5] = 0;
    CHECK_FALSE(latin::verify_incomplete_pair(hole_filled).valid());
}

TEST_CASE("transversal check") {
    auto pair = latin::sols_diagonal(7);
    latin::Transversal diag;
    for (int i = 0; i < 7; ++i) diag.cells.emplace_back(i, i);
    CHECK(latin::is_transversal(pair.first, diag));
    latin::Transversal row;
    for (int i = 0; i < 7; ++i) row.cells.emplace_back(0, i);
    CHECK_FALSE(latin::is_transversal(pair.first, row));
}

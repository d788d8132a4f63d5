#include <doctest.h>

#include "framekit/group.hpp"

using namespace framekit::algebra;

TEST_CASE("cyclic group arithmetic") {
    FiniteAbelianGroup g({7});
    CHECK(g.order() == 7);
    CHECK(g.add(g.parse_element("3"), g.parse_element("5")) == g.parse_element("1"));
    CHECK(g.negate(g.parse_element("2")) == g.parse_element("5"));
    CHECK(g.subtract(g.parse_element("1"), g.parse_element("4")) == g.parse_element("4"));
    CHECK(g.identity() == g.parse_element("0"));
}

TEST_CASE("product group arithmetic and indexing") {
    FiniteAbelianGroup g({4, 4});
    CHECK(g.order() == 16);
    auto e = g.parse_element("3,2");
    CHECK(g.add(e, g.parse_element("1,3")) == g.parse_element("0,1"));
    CHECK(g.negate(e) == g.parse_element("1,2"));
    for (int i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
    CHECK(e.to_string() == "3,2");
}

TEST_CASE("elements come out in canonical order") {
    FiniteAbelianGroup g({2, 3});
    auto elems = g.elements();
    REQUIRE(elems.size() == 6);
    for (std::size_t i = 1; i < elems.size(); ++i) CHECK(elems[i - 1] < elems[i]);
}

TEST_CASE("subgroup construction validates closure") {
    FiniteAbelianGroup g({10});
    Subgroup h(g, {g.parse_element("0"), g.parse_element("5")});
    CHECK(h.order() == 2);
    CHECK_THROWS(Subgroup(g, {g.parse_element("0"), g.parse_element("3")}));
    CHECK_THROWS(Subgroup(g, {g.parse_element("5")}));  // missing identity
}

TEST_CASE("cosets partition the parent") {
    FiniteAbelianGroup g({10});
    Subgroup h(g, {g.parse_element("0"), g.parse_element("5")});
    auto cosets = h.cosets();
    REQUIRE(cosets.size() == 5);
    CHECK(cosets[0][0] == g.parse_element("0"));
    CHECK(cosets[0][1] == g.parse_element("5"));
    int count = 0;
    for (const auto& coset : cosets) count += static_cast<int>(coset.size());
    CHECK(count == 10);
}

TEST_CASE("subgroup generated by elements") {
    FiniteAbelianGroup g({12});
    auto h = subgroup_from(g, {g.parse_element("4")});
    CHECK(h.order() == 3);
    auto h2 = subgroup_from(g, {g.parse_element("4"), g.parse_element("6")});
    CHECK(h2.order() == 6);
}

TEST_CASE("parse errors") {
    FiniteAbelianGroup g({4, 4});
    CHECK_THROWS(g.parse_element("7"));
    CHECK_THROWS(g.parse_element("1,2,3"));
    CHECK_THROWS((void)FiniteAbelianGroup({0}));
}

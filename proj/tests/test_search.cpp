#include <doctest.h>

#include "framekit/search.hpp"

using namespace framekit;
using namespace framekit::algebra;

TEST_CASE("hillclimb finds an orthogonal starter pair in Z9") {
    // no skew-orthogonal starter pair exists over a group of order 9
    FiniteAbelianGroup g({9});
    Subgroup h(g, {g.identity()});
    search::SearchConfig cfg;
    cfg.seed = 1;
    cfg.skew_required = false;
    auto result = search::hillclimb_starter_pair(g, h, cfg);
    REQUIRE(result.success());
    auto frame = starters::develop(*result.pair);
    auto square = room::frame_to_square(frame, "oo");
    CHECK(room::verify_room_square(square).valid());
}

TEST_CASE("hillclimb finds a skew starter pair in Z11") {
    FiniteAbelianGroup g({11});
    Subgroup h(g, {g.identity()});
    search::SearchConfig cfg;
    cfg.seed = 1;
    cfg.skew_required = true;
    auto result = search::hillclimb_starter_pair(g, h, cfg);
    REQUIRE(result.success());
    CHECK(starters::is_skew_orthogonal(*result.pair));
    auto frame = starters::develop(*result.pair);
    auto square = room::frame_to_square(frame, "oo");
    CHECK(room::verify_room_square(square).valid());
    CHECK(room::is_skew(square).skew);
}

TEST_CASE("hillclimb is deterministic for a fixed seed") {
    FiniteAbelianGroup g({11});
    Subgroup h(g, {g.identity()});
    search::SearchConfig cfg;
    cfg.seed = 42;
    auto a = search::hillclimb_starter_pair(g, h, cfg);
    auto b = search::hillclimb_starter_pair(g, h, cfg);
    REQUIRE(a.success());
    REQUIRE(b.success());
    CHECK(a.pair->s1.pairs == b.pair->s1.pairs);
    CHECK(a.pair->s2.pairs == b.pair->s2.pairs);
    CHECK(a.pair->adder == b.pair->adder);
    CHECK(a.failure.iterations == b.failure.iterations);
}

TEST_CASE("hillclimb reports failure where no starter exists") {
    FiniteAbelianGroup g({12});
    Subgroup h(g, {g.parse_element("0"), g.parse_element("6")});
    search::SearchConfig cfg;
    cfg.seed = 3;
    cfg.max_iterations = 2000;
    cfg.restarts = 2;
    auto result = search::hillclimb_starter_pair(g, h, cfg);
    CHECK_FALSE(result.success());
    CHECK_FALSE(result.failure.reason.empty());
}

TEST_CASE("hillclimb rejects impossible shapes") {
    FiniteAbelianGroup g({7});
    Subgroup h(g, {g.parse_element("0")});
    FiniteAbelianGroup g8({8});
    Subgroup h2(g8, {g8.identity()});  // |G \ H| = 7, odd
    CHECK_THROWS_AS(search::hillclimb_starter_pair(g8, h2, {}), std::invalid_argument);
    (void)h;
}

TEST_CASE("find_room_square handles the existence spectrum") {
    CHECK_THROWS_AS(search::find_room_square(3), search::NonexistentError);
    CHECK_THROWS_AS(search::find_room_square(5), search::NonexistentError);
    CHECK_THROWS_AS(search::find_room_square(4), search::NonexistentError);
    search::SearchConfig cfg;
    cfg.seed = 7;
    auto square = search::find_room_square(7, cfg);
    CHECK(square.side() == 7);
    CHECK(room::verify_room_square(square).valid());
}

TEST_CASE("frame starter search in Z10 mod H={0,5}") {
    FiniteAbelianGroup g({10});
    Subgroup h(g, {g.parse_element("0"), g.parse_element("5")});
    search::SearchConfig cfg;
    cfg.seed = 5;
    cfg.skew_required = true;
    auto result = search::hillclimb_starter_pair(g, h, cfg);
    REQUIRE(result.success());
    auto frame = starters::develop(*result.pair);
    CHECK(room::verify_room_frame(frame).valid());
    CHECK(room::is_skew(frame).skew);
}

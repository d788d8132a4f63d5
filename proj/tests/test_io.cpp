#include <doctest.h>

#include "framekit/io.hpp"

#include "helpers.hpp"

using namespace framekit;

TEST_CASE("room files round-trip byte-exactly") {
    for (const char* name : {"fig1.room", "fig1-broken.room", "fig2.room", "fig2-broken.room", "fig3.room",
                             "fig4.room", "fig5.room"}) {
        CAPTURE(name);
        auto text = testhelpers::read_fixture(name);
        CHECK(io::write_room(io::read_room(text)) == text);
    }
}

TEST_CASE("starter files round-trip byte-exactly") {
    for (const char* name :
         {"z7-pair.starter", "z10-pair.starter", "z15-pair.starter", "z4z4-pair.starter"}) {
        CAPTURE(name);
        auto text = testhelpers::read_fixture(name);
        auto file = io::read_starter(text);
        REQUIRE(file.s1.has_value());
        CHECK(io::write_starter(*file.s1, file.s2) == text);
    }
    auto text = testhelpers::read_fixture("intransitive-2x6.starter");
    auto file = io::read_starter(text);
    REQUIRE(file.quad.has_value());
    CHECK(io::write_starter(*file.quad) == text);
}

TEST_CASE("bd files round-trip byte-exactly") {
    for (const char* name : {"cayley-kts15.bd", "cayley-frame27.bd", "kts15-completed.bd"}) {
        CAPTURE(name);
        auto text = testhelpers::read_fixture(name);
        auto file = io::read_bd(text);
        if (file.resolved)
            CHECK(io::write_bd(*file.resolved) == text);
        else
            CHECK(io::write_bd(file.design) == text);
    }
}

TEST_CASE("latin files round-trip byte-exactly") {
    auto text = testhelpers::read_fixture("euler-iols6.latin");
    CHECK(io::write_latin(io::read_latin(text)) == text);
}

TEST_CASE("parse errors carry messages") {
    CHECK_THROWS_AS(io::read_room("room v2\n"), io::ParseError);
    CHECK_THROWS_AS(io::read_room("room v1\nside: 2\nsymbols: a\n"), io::ParseError);
    CHECK_THROWS_AS(io::read_room("room v1\nside: 1\nsymbols: a\nsquare-symbol: x\ncell a a: a q\n"),
                    io::ParseError);
    CHECK_THROWS_AS(io::read_starter("starter v1\npairs: {1 2}\n"), io::ParseError);
    CHECK_THROWS_AS(io::read_bd("bd v1\nlambda: 1\n"), io::ParseError);
    CHECK_THROWS_AS(io::read_latin("latin v1 3\n0 1 2\n"), io::ParseError);
    CHECK_THROWS_AS(io::read_bd("bd v1\npoints: a b\nblock: a q\n"), io::ParseError);
}

TEST_CASE("constructed arrays survive a write/read cycle") {
    auto fig2 = io::read_room(testhelpers::read_fixture("fig2.room"));
    auto again = io::read_room(io::write_room(fig2));
    CHECK(room::cells_identical(fig2, again));
    CHECK(again.partition == fig2.partition);
}

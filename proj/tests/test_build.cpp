#include <doctest.h>

#include <map>

#include "framekit/io.hpp"
#include "framekit/room_build.hpp"
#include "framekit/search.hpp"

#include "helpers.hpp"

using namespace framekit;

namespace {

room::RoomArray fixture_room(const std::string& name) {
    return io::read_room(testhelpers::read_fixture(name));
}

// Relabels `square` (side n, symbols 0..n-1) so its rows become the given
// tokens and its square symbol becomes `x`.
room::RoomArray fit_square(const room::RoomArray& square, const std::vector<std::string>& tokens,
                           const std::string& x) {
    std::map<std::string, std::string> names;
    for (int i = 0; i < square.side(); ++i) names[square.symbols[i]] = tokens[i];
    names[*square.square_symbol] = x;
    return room::relabel(square, names);
}

}  // namespace

TEST_CASE("doubling figure 1 yields a valid skew 2^7 frame") {
    auto fig1 = fixture_room("fig1.room");
    auto sols = latin::sols_diagonal(7).first;
    auto frame = build::double_square(fig1, sols);
    CHECK(frame.partition.size() == 7);
    for (const auto& hole : frame.partition) CHECK(hole.size() == 2);
    CHECK(room::verify_room_frame(frame).valid());
}

TEST_CASE("doubling rejects non-skew or mismatched ingredients") {
    auto fig1 = fixture_room("fig1.room");
    CHECK_THROWS_AS(build::double_square(fig1, latin::sols_diagonal(11).first), std::invalid_argument);
    auto not_idempotent = latin::sols_diagonal(7).first;
    std::swap(not_idempotent.grid[0], not_idempotent.grid[1]);
    CHECK_THROWS_AS(build::double_square(fig1, not_idempotent), std::invalid_argument);
}

TEST_CASE("inflating figure 2 by 3 yields a valid 6^5 frame") {
    auto fig2 = fixture_room("fig2.room");
    auto frame = build::inflate(fig2, 3);
    CHECK(frame.side() == 30);
    CHECK(frame.partition.size() == 5);
    for (const auto& hole : frame.partition) CHECK(hole.size() == 6);
    CHECK(room::verify_room_frame(frame).valid());
}

TEST_CASE("inflation by 2 or 6 needs an explicit pair") {
    auto fig2 = fixture_room("fig2.room");
    CHECK_THROWS_AS(build::inflate(fig2, 6), std::invalid_argument);
}

TEST_CASE("filling the 6^5 frame with RS(7) ingredients gives RS(31)") {
    auto fig2 = fixture_room("fig2.room");
    auto frame = build::inflate(fig2, 3);
    auto rs7 = fixture_room("fig1.room");
    std::vector<std::string> extra = {"w"};
    std::vector<room::RoomArray> ingredients;
    for (const auto& hole : frame.partition) {
        std::vector<std::string> tokens;
        for (int s : hole) tokens.push_back(frame.symbols[s]);
        tokens.push_back("w");
        ingredients.push_back(fit_square(rs7, tokens, "x"));
    }
    auto square = build::fill_frame(frame, extra, ingredients, 0);
    CHECK(square.side() == 31);
    CHECK(room::verify_room_square(square).valid());
}

TEST_CASE("filling a 1^7 frame with side-1 ingredients is rejected") {
    auto fig4 = fixture_room("fig4.room");
    std::vector<room::RoomArray> ingredients;
    for (int i = 0; i < 7; ++i) {
        auto ing = room::make_square({fig4.symbols[i]}, "x");
        ing.set(0, 0, 0, 1);
        ingredients.push_back(ing);
    }
    CHECK_THROWS_WITH_AS(build::fill_frame(fig4, {}, ingredients), doctest::Contains("frame-to-square"),
                         std::invalid_argument);
}

TEST_CASE("fill rejects ingredients whose trailing block is not a subsquare on the extras") {
    auto fig4 = fixture_room("fig4.room");
    auto frame = build::inflate(fig4, 3);  // 3^7
    search::SearchConfig cfg;
    cfg.seed = 11;
    auto rs7 = search::find_room_square(7, cfg);
    // an RS(7) has no RS(4) subsquare, so these ingredients must be rejected
    std::vector<std::string> extra = {"w1", "w2", "w3", "w4"};
    std::vector<room::RoomArray> ingredients;
    for (const auto& hole : frame.partition) {
        std::vector<std::string> tokens;
        for (int s : hole) tokens.push_back(frame.symbols[s]);
        for (const auto& w : extra) tokens.push_back(w);
        ingredients.push_back(fit_square(rs7, tokens, "x"));
    }
    CHECK_THROWS_AS(build::fill_frame(frame, extra, ingredients, 2), std::invalid_argument);
}

TEST_CASE("w = 0 filling of a 7^7 frame gives RS(49)") {
    auto fig4 = fixture_room("fig4.room");
    auto frame = build::inflate(fig4, 7);  // 7^7
    auto rs7 = fixture_room("fig1.room");
    std::vector<room::RoomArray> ingredients;
    for (const auto& hole : frame.partition) {
        std::vector<std::string> tokens;
        for (int s : hole) tokens.push_back(frame.symbols[s]);
        ingredients.push_back(fit_square(rs7, tokens, "x"));
    }
    auto square = build::fill_frame(frame, {}, ingredients);
    CHECK(square.side() == 49);
    CHECK(room::verify_room_square(square).valid());
}

TEST_CASE("fill rejects ingredients that disagree on the square symbol") {
    auto fig2 = fixture_room("fig2.room");
    auto frame = build::inflate(fig2, 3);
    auto rs7 = fixture_room("fig1.room");
    std::vector<room::RoomArray> ingredients;
    for (std::size_t h = 0; h < frame.partition.size(); ++h) {
        std::vector<std::string> tokens;
        for (int s : frame.partition[h]) tokens.push_back(frame.symbols[s]);
        tokens.push_back("w");
        ingredients.push_back(fit_square(rs7, tokens, h == 0 ? "x" : "y"));
    }
    CHECK_THROWS_AS(build::fill_frame(frame, {"w"}, ingredients, 0), std::invalid_argument);
}

#include <doctest.h>

#include "framekit/io.hpp"
#include "framekit/room.hpp"

#include "helpers.hpp"

using namespace framekit;

namespace {

room::RoomArray fixture_room(const std::string& name) {
    return io::read_room(testhelpers::read_fixture(name));
}

}  // namespace

TEST_CASE("figure fixtures verify with their declared types") {
    auto fig1 = fixture_room("fig1.room");
    CHECK(fig1.side() == 7);
    CHECK(room::verify_room_square(fig1).valid());
    CHECK(room::is_skew(fig1).skew);

    auto fig2 = fixture_room("fig2.room");
    CHECK(fig2.partition.size() == 5);
    CHECK(room::verify_room_frame(fig2).valid());

    auto fig3 = fixture_room("fig3.room");
    CHECK(fig3.partition.size() == 6);
    CHECK(room::verify_room_frame(fig3).valid());

    auto fig4 = fixture_room("fig4.room");
    CHECK(fig4.partition.size() == 7);
    CHECK(room::verify_room_frame(fig4).valid());
    CHECK(room::is_skew(fig4).skew);

    auto fig5 = fixture_room("fig5.room");
    CHECK(fig5.partition.size() == 7);
    CHECK(room::verify_room_frame(fig5).valid());
}

TEST_CASE("broken fixtures are rejected with named violations") {
    auto fig1b = fixture_room("fig1-broken.room");
    auto report = room::verify_room_square(fig1b);
    CHECK_FALSE(report.valid());

    auto fig2b = fixture_room("fig2-broken.room");
    auto report2 = room::verify_room_frame(fig2b);
    CHECK_FALSE(report2.valid());
    bool row_violation = false, col_violation = false, pair_violation = false;
    for (const auto& v : report2.violations) {
        if (v.location.find("row") != std::string::npos) row_violation = true;
        if (v.location.find("column") != std::string::npos) col_violation = true;
        if (v.kind.find("pair") != std::string::npos) pair_violation = true;
    }
    CHECK(row_violation);
    CHECK(col_violation);
    CHECK(pair_violation);
}

TEST_CASE("degenerate side-1 square") {
    auto square = room::make_square({"a"}, "b");
    square.set(0, 0, 0, 1);
    CHECK(room::verify_room_square(square).valid());
    auto frame = room::square_to_frame(square, "b");
    CHECK(frame.filled_count() == 0);
    CHECK(room::verify_room_frame(frame).valid());
}

TEST_CASE("standardize is idempotent and label-stable on figure 1") {
    auto fig1 = fixture_room("fig1.room");
    auto std1 = room::standardize(fig1, "7");
    CHECK(room::cells_identical(std1, fig1));  // already standardized
    auto std2 = room::standardize(std1, "7");
    CHECK(room::cells_identical(std2, std1));
}

TEST_CASE("standardize by a non-square symbol stays valid") {
    auto fig1 = fixture_room("fig1.room");
    auto alt = room::standardize(fig1, "3");
    CHECK(room::verify_room_square(alt).valid());
    for (int s = 0; s < alt.side(); ++s) {
        REQUIRE(alt.at(s, s).has_value());
        auto cell = *alt.at(s, s);
        CHECK((alt.token(cell.first) == "3" || alt.token(cell.second) == "3"));
    }
}

TEST_CASE("square_to_frame(figure 1) equals figure 4 cell-exactly") {
    auto fig1 = fixture_room("fig1.room");
    auto fig4 = fixture_room("fig4.room");
    auto converted = room::square_to_frame(fig1, "7");
    CHECK(room::cells_identical(converted, fig4));
}

TEST_CASE("frame_to_square(figure 4) recovers figure 1") {
    auto fig4 = fixture_room("fig4.room");
    auto square = room::frame_to_square(fig4, "7");
    CHECK(room::verify_room_square(square).valid());
    CHECK(room::cells_identical(square, fixture_room("fig1.room")));
    auto fig2 = fixture_room("fig2.room");
    CHECK_THROWS(room::frame_to_square(fig2, "x"));
}

TEST_CASE("transpose involution and invariants") {
    auto fig4 = fixture_room("fig4.room");
    auto t = room::transpose(fig4);
    CHECK(room::verify_room_frame(t).valid());
    CHECK(room::is_skew(t).skew == room::is_skew(fig4).skew);
    CHECK(room::cells_identical(room::transpose(t), fig4));
    auto pairs_a = fig4.pair_multiset();
    auto pairs_b = t.pair_multiset();
    CHECK(pairs_a == pairs_b);
}

TEST_CASE("skew fails on a symmetric placement") {
    auto fig4 = fixture_room("fig4.room");
    room::RoomArray bad = fig4;
    // find a filled cell and fill its mirror
    for (int r = 0; r < bad.side(); ++r)
        for (int c = 0; c < bad.side(); ++c)
            if (bad.at(r, c) && !bad.at(c, r)) {
                bad.set(c, r, bad.at(r, c)->first, bad.at(r, c)->second);
                goto done;
            }
done:
    auto result = room::is_skew(bad);
    CHECK_FALSE(result.skew);
    CHECK(result.witness.has_value());
}

TEST_CASE("filled cell count formula for frames") {
    auto fig2 = fixture_room("fig2.room");
    CHECK(fig2.filled_count() == (10 * 9 / 2 - 5) / 1);  // 40 cross-hole pairs
    auto fig3 = fixture_room("fig3.room");
    CHECK(fig3.filled_count() == 12 * 11 / 2 - 6);  // 60
}

TEST_CASE("relabel renames symbols consistently") {
    auto fig1 = fixture_room("fig1.room");
    std::map<std::string, std::string> names;
    for (int i = 0; i < 7; ++i) names[std::to_string(i)] = "s" + std::to_string(i);
    names["7"] = "x";
    auto renamed = room::relabel(fig1, names);
    CHECK(room::verify_room_square(renamed).valid());
    CHECK(renamed.symbols[0] == "s0");
    CHECK(*renamed.square_symbol == "x");
}

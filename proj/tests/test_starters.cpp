#include <doctest.h>

#include <algorithm>

#include "framekit/io.hpp"
#include "framekit/room.hpp"
#include "framekit/starter.hpp"

#include "helpers.hpp"

using namespace framekit;
using namespace framekit::algebra;

namespace {

io::StarterFile fixture_starter(const std::string& name) {
    return io::read_starter(testhelpers::read_fixture(name));
}

struct PairCase {
    const char* file;
    int type_t;  // hole size of the developed frame
    int type_u;
};

const PairCase kPairCases[] = {
    {"z10-pair.starter", 2, 5},
    {"z7-pair.starter", 1, 7},
    {"z15-pair.starter", 3, 5},
    {"z4z4-pair.starter", 4, 4},
};

}  // namespace

TEST_CASE("the four example starter pairs are skew-orthogonal and develop") {
    for (const auto& pc : kPairCases) {
        CAPTURE(pc.file);
        auto file = fixture_starter(pc.file);
        REQUIRE(file.s1.has_value());
        REQUIRE(file.s2.has_value());
        CHECK(starters::verify_frame_starter(*file.s1).valid());
        CHECK(starters::verify_frame_starter(*file.s2).valid());
        auto pair = starters::pair_starters(*file.s1, *file.s2);
        CHECK(starters::is_skew_orthogonal(pair));
        auto frame = starters::develop(pair);
        CHECK(static_cast<int>(frame.partition.size()) == pc.type_u);
        for (const auto& hole : frame.partition) CHECK(static_cast<int>(hole.size()) == pc.type_t);
        CHECK(room::verify_room_frame(frame).valid());
        CHECK(room::is_skew(frame).skew);
    }
}

TEST_CASE("verify_frame_starter itemizes violations") {
    FiniteAbelianGroup g({7});
    Subgroup h(g, {g.identity()});
    starters::FrameStarter bad{g, h, {}};
    for (auto [a, b] : {std::pair{3, 4}, {2, 5}, {1, 5}})
        bad.pairs.emplace_back(g.parse_element(std::to_string(a)), g.parse_element(std::to_string(b)));
    auto report = starters::verify_frame_starter(bad);
    CHECK_FALSE(report.valid());
    bool five_repeated = false, six_missing = false;
    for (const auto& v : report.violations) {
        if (v.location == "5" && v.detail.find("2 times") != std::string::npos) five_repeated = true;
        if (v.location == "6" && v.detail.find("0 times") != std::string::npos) six_missing = true;
    }
    CHECK(five_repeated);
    CHECK(six_missing);
}

TEST_CASE("z7 adder is {1,4,2} under difference matching") {
    auto file = fixture_starter("z7-pair.starter");
    auto pair = starters::pair_starters(*file.s1, *file.s2);
    FiniteAbelianGroup g({7});
    // S1 pairs in file order: {3,4},{2,5},{1,6}
    REQUIRE(pair.adder.size() == 3);
    CHECK(pair.adder[0] == g.parse_element("1"));
    CHECK(pair.adder[1] == g.parse_element("4"));
    CHECK(pair.adder[2] == g.parse_element("2"));
    CHECK(pair.matching == std::vector<int>{0, 1, 2});
}

TEST_CASE("pairing a starter with itself fails: zero adder in H") {
    auto file = fixture_starter("z10-pair.starter");
    CHECK_THROWS_AS(starters::pair_starters(*file.s1, *file.s1), std::invalid_argument);
}

TEST_CASE("development convention: row g holds S1+g, column c holds S2+c") {
    auto file = fixture_starter("z10-pair.starter");
    auto pair = starters::pair_starters(*file.s1, *file.s2);
    auto frame = starters::develop(pair);
    FiniteAbelianGroup g({10});
    for (int gi : {0, 3, 7}) {
        auto shift = g.element_at(gi);
        std::vector<std::pair<std::string, std::string>> expected_row, actual_row;
        for (const auto& [x, y] : pair.s1.pairs) {
            auto a = g.add(x, shift).to_string();
            auto b = g.add(y, shift).to_string();
            expected_row.emplace_back(std::min(a, b), std::max(a, b));
        }
        for (int c = 0; c < frame.side(); ++c)
            if (const auto& cell = frame.at(gi, c)) {
                auto a = frame.token(cell->first);
                auto b = frame.token(cell->second);
                actual_row.emplace_back(std::min(a, b), std::max(a, b));
            }
        std::sort(expected_row.begin(), expected_row.end());
        std::sort(actual_row.begin(), actual_row.end());
        CHECK(expected_row == actual_row);
    }
}

TEST_CASE("developed cells avoid hole columns: c - r outside H") {
    auto file = fixture_starter("z15-pair.starter");
    auto pair = starters::pair_starters(*file.s1, *file.s2);
    auto frame = starters::develop(pair);
    CHECK(frame.filled_count() == 15 * 6);
    FiniteAbelianGroup g({15});
    for (int r = 0; r < 15; ++r)
        for (int c = 0; c < 15; ++c)
            if (frame.at(r, c)) {
                auto diff = g.subtract(g.element_at(c), g.element_at(r));
                CHECK_FALSE(pair.s1.subgroup.contains(diff));
            }
}

TEST_CASE("intransitive development reproduces figure 3 cell-exactly") {
    auto file = fixture_starter("intransitive-2x6.starter");
    REQUIRE(file.quad.has_value());
    auto frame = starters::develop_intransitive(*file.quad);
    CHECK(room::verify_room_frame(frame).valid());
    CHECK(frame.partition.size() == 6);
    CHECK(frame.filled_count() == 60);
    auto fig3 = io::read_room(testhelpers::read_fixture("fig3.room"));
    CHECK(room::cells_identical(frame, fig3));
}

TEST_CASE("intransitive development rejects broken quadruples") {
    auto file = fixture_starter("intransitive-2x6.starter");
    auto quad = *file.quad;
    quad.s1[0].first = quad.s1[1].first;  // coverage now fails
    CHECK_THROWS_AS(starters::develop_intransitive(quad), std::invalid_argument);
}

TEST_CASE("exhaustive enumeration: Z12 with H of order 2 has no starter") {
    FiniteAbelianGroup g({12});
    Subgroup h(g, {g.parse_element("0"), g.parse_element("6")});
    CHECK(starters::exhaustive_frame_starters(g, h).empty());
}

TEST_CASE("exhaustive enumeration: Z10 has starters including none in H") {
    FiniteAbelianGroup g({10});
    Subgroup h(g, {g.parse_element("0"), g.parse_element("5")});
    auto all = starters::exhaustive_frame_starters(g, h);
    CHECK_FALSE(all.empty());
    for (const auto& s : all) CHECK(starters::verify_frame_starter(s).valid());
}

TEST_CASE("exhaustive enumeration: Z7 contains the example starter") {
    FiniteAbelianGroup g({7});
    Subgroup h(g, {g.identity()});
    auto all = starters::exhaustive_frame_starters(g, h);
    auto canonical = [&](const starters::FrameStarter& s) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [x, y] : s.pairs) {
            auto a = x.to_string();
            auto b = y.to_string();
            pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    };
    auto target = canonical(*fixture_starter("z7-pair.starter").s1);
    bool found = false;
    for (const auto& s : all) found = found || canonical(s) == target;
    CHECK(found);
}

TEST_CASE("exhaustive enumeration: degenerate and bound cases") {
    FiniteAbelianGroup z2({2});
    Subgroup full(z2, {z2.parse_element("0"), z2.parse_element("1")});
    auto trivial = starters::exhaustive_frame_starters(z2, full);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].pairs.empty());

    FiniteAbelianGroup big({18});
    Subgroup h(big, {big.identity()});
    CHECK_THROWS_AS(starters::exhaustive_frame_starters(big, h), std::invalid_argument);
}

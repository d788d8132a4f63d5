#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "framekit/designs.hpp"
#include "framekit/latin.hpp"
#include "framekit/room.hpp"
#include "framekit/starter.hpp"

namespace framekit::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "room v1": side / symbols / optional square-symbol / optional holes
// headers, then one `cell <row> <col>: <a> <b>` line per filled cell in
// row-major order. Reading a canonical file and writing it back is
// byte-identical.
std::string write_room(const room::RoomArray& array);
room::RoomArray read_room(const std::string& text);

// "starter v1": group / H / pairs, a pair file adds S2, a quadruple file
// instead carries fixed / pairs / C / S2 / R.
struct StarterFile {
    std::optional<starters::FrameStarter> s1;
    std::optional<starters::FrameStarter> s2;
    std::optional<starters::IntransitiveStarterQuad> quad;
};
std::string write_starter(const starters::FrameStarter& s1, const std::optional<starters::FrameStarter>& s2);
std::string write_starter(const starters::IntransitiveStarterQuad& quad);
StarterFile read_starter(const std::string& text);

// "bd v1": points / optional groups / optional holes / lambda / optional k,
// then `class <hole-token|full>: {a b c} ...` or `block: a b c` lines.
// The hole token is the hole's points joined by commas.
struct BdFile {
    designs::BlockDesign design;
    std::optional<designs::ResolvedBlockDesign> resolved;
};
std::string write_bd(const designs::BlockDesign& design);
std::string write_bd(const designs::ResolvedBlockDesign& design);
BdFile read_bd(const std::string& text);

// "latin v1 <order>": one or more grids, each introduced by the header
// line, one row per line of space-separated symbol tokens, "." for empty.
struct LatinFile {
    int order = 0;
    std::vector<std::vector<std::vector<std::string>>> grids;  // grid -> row -> tokens

    latin::LatinSquare as_square(int grid) const;
    /// Interprets two grids with a common trailing empty subarray; the hole
    /// symbols of each grid are the ones absent from its hole rows.
    latin::IncompleteOLSPair as_incomplete_pair() const;
};
std::string write_latin(const LatinFile& file);
LatinFile read_latin(const std::string& text);
LatinFile latin_file(const latin::LatinSquare& square);
LatinFile latin_file(const latin::OrthogonalPair& pair);

}  // namespace framekit::io

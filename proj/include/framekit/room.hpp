#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framekit/report.hpp"

namespace framekit::room {

/// Unordered symbol pair inside a cell, stored with first < second.
struct CellPair {
    int first = 0;
    int second = 0;

    friend bool operator==(const CellPair&, const CellPair&) = default;
    friend auto operator<=>(const CellPair&, const CellPair&) = default;
};

/// Square array of optional symbol pairs with a declared hole partition.
/// Rows and columns are indexed by `symbols`. Models both Room squares
/// (singleton partition plus a square_symbol outside the row/column set)
/// and Room frames. Pair entries are symbol indices; the index
/// symbols.size() denotes the square symbol when present.
struct RoomArray {
    std::vector<std::string> symbols;
    std::optional<std::string> square_symbol;
    std::vector<std::vector<int>> partition;
    std::vector<std::optional<CellPair>> cells;  // row-major, side() x side()

    int side() const { return static_cast<int>(symbols.size()); }
    int symbol_count() const { return side() + (square_symbol ? 1 : 0); }

    const std::optional<CellPair>& at(int r, int c) const { return cells[r * side() + c]; }
    void set(int r, int c, int a, int b);
    void clear(int r, int c) { cells[r * side() + c].reset(); }

    /// Token for a pair index (covers the square symbol index).
    const std::string& token(int index) const;
    /// Index of a token among symbols + square symbol; -1 if unknown.
    int index_of(const std::string& token) const;

    /// Hole index of each row/column symbol.
    std::vector<int> hole_of() const;

    int filled_count() const;

    /// Multiset of contained pairs as token pairs, canonically sorted.
    std::vector<std::pair<std::string, std::string>> pair_multiset() const;
};

/// Room square on `symbols` + `square_symbol` with the singleton partition.
RoomArray make_square(std::vector<std::string> symbols, std::string square_symbol);

/// Room frame shell with the given hole partition (by symbol token).
RoomArray make_frame(std::vector<std::string> symbols, std::vector<std::vector<std::string>> holes);

ValidityReport verify_room_square(const RoomArray& array);
ValidityReport verify_room_frame(const RoomArray& array);

struct SkewResult {
    bool skew = false;
    std::optional<std::pair<int, int>> witness;  // first violating mirror cell pair
};

/// True iff for every pair of symbols in different holes exactly one of the
/// two mirror cells is filled.
SkewResult is_skew(const RoomArray& array);

/// Permutes rows/columns of a valid Room square so that every cell
/// containing x lies on the main diagonal as {x, s} at (s, s). The chosen
/// symbol becomes the square symbol of the result.
RoomArray standardize(const RoomArray& square, const std::string& x);

/// Standardizes by x, deletes the diagonal pairs, and returns the Room
/// frame of type 1^n with singleton holes.
RoomArray square_to_frame(const RoomArray& square, const std::string& x);

/// Inverse conversion: places {x, s} at (s, s) of a type-1^n frame.
RoomArray frame_to_square(const RoomArray& frame, const std::string& x);

RoomArray transpose(const RoomArray& array);

/// Renames symbols (including the square symbol) via the given map;
/// symbols not in the map keep their names.
RoomArray relabel(const RoomArray& array, const std::map<std::string, std::string>& names);

/// Cell-exact equality: same symbols, same holes, and identical pair
/// content at every (row symbol, column symbol) position.
bool cells_identical(const RoomArray& a, const RoomArray& b);

}  // namespace framekit::room

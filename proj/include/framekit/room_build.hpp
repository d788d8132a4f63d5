#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framekit/latin.hpp"
#include "framekit/room.hpp"

namespace framekit::build {

/// Doubling: from a skew Room square of side n and an idempotent
/// self-orthogonal latin square of order n on the same symbols, builds a
/// skew Room frame of type 2^n. Each symbol s gains a partner s' (token
/// s + prime_suffix); the holes are {s, s'}. Throws if the inputs do not
/// qualify (square not skew, latin square not idempotent SOLS, symbol
/// mismatch).
room::RoomArray double_square(const room::RoomArray& square, const latin::LatinSquare& sols,
                              const std::string& prime_suffix = "'");

/// Inflation: multiplies a Room frame of type t^u by s using a pair of
/// orthogonal latin squares of order s, giving a frame of type (st)^u.
/// New symbols are "<old>.<j>" for j in 0..s-1. s must not be 2 or 6
/// unless an explicit pair is supplied.
room::RoomArray inflate(const room::RoomArray& frame, int s,
                        const std::optional<latin::OrthogonalPair>& mols = std::nullopt);

/// Frame filling: from a Room frame of type t^u, w extra symbols, and for
/// each hole a Room square of side t + w whose rows/columns are the hole
/// symbols followed by the extra symbols, builds a Room square of side
/// tu + w. All ingredient squares must share the same square symbol and
/// agree on their trailing (w+1) x (w+1) subsquare content; that subsquare
/// is kept only from ingredient keep_index. With w = 0 the ingredients are
/// side-t squares and keep_index is ignored.
room::RoomArray fill_frame(const room::RoomArray& frame, const std::vector<std::string>& extra,
                           const std::vector<room::RoomArray>& ingredients, int keep_index = 0);

}  // namespace framekit::build

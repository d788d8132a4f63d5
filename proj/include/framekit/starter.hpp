#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "framekit/group.hpp"
#include "framekit/report.hpp"
#include "framekit/room.hpp"

namespace framekit::starters {

using algebra::FiniteAbelianGroup;
using algebra::GroupElement;
using algebra::Subgroup;

/// Frame starter in G \ H: (g-h)/2 unordered pairs whose elements, and
/// whose +- differences, each partition G \ H.
struct FrameStarter {
    FiniteAbelianGroup group;
    Subgroup subgroup;
    std::vector<std::pair<GroupElement, GroupElement>> pairs;
};

/// Two frame starters matched pair-by-pair by difference, with the adder
/// t_i = y_i - v_i. Produced by pair_starters, which enforces the
/// orthogonality conditions (t_i outside H, t_i pairwise distinct).
struct OrthogonalStarterPair {
    FrameStarter s1;
    FrameStarter s2;
    std::vector<int> matching;        // s1 pair i is matched with s2 pair matching[i]
    std::vector<GroupElement> adder;  // t_i, aligned with s1.pairs
};

/// Intransitive starter data (S1, C, S2, R) over Z_m plus two fixed
/// symbols. Finite elements are 0..m-1; kFixedA / kFixedB denote the fixed
/// symbols (encode as m and m+1 in pair entries).
struct IntransitiveStarterQuad {
    int modulus = 0;                       // even m
    std::array<std::string, 2> fixed{};    // fixed symbol tokens
    std::vector<std::pair<int, int>> s1;   // (m-2)/2 pairs
    std::vector<std::pair<int, int>> c;    // one pair, both elements finite
    std::vector<std::pair<int, int>> s2;
    std::vector<std::pair<int, int>> r;

    int fixed_a() const { return modulus; }
    int fixed_b() const { return modulus + 1; }
};

ValidityReport verify_frame_starter(const FrameStarter& starter);

/// Matches the two starters by difference class, orients, and computes the
/// adder. Throws std::invalid_argument when the starters are not orthogonal
/// (adder in H, duplicated adder) or the difference multisets do not match.
OrthogonalStarterPair pair_starters(const FrameStarter& s1, const FrameStarter& s2);

/// True iff the adders and their negatives are precisely G \ H.
bool is_skew_orthogonal(const OrthogonalStarterPair& pair);

/// Develops the pair into a Room frame of type h^(g/h): the holes are the
/// cosets of H and cell (g, g + t_i) holds {x_i + g, y_i + g}.
room::RoomArray develop(const OrthogonalStarterPair& pair);

/// Develops an intransitive quadruple into a Room frame of type
/// 2^((m+2)/2). The action is by Z_(m/2) x Z_2 on symbols a + (m/2) b with
/// the two fixed symbols invariant; C translates fill the two fixed
/// columns (first fixed column for translates with zero Z_2 part), R
/// translates the two fixed rows.
room::RoomArray develop_intransitive(const IntransitiveStarterQuad& quad);

/// Complete deterministic enumeration of frame starters in G \ H by
/// backtracking, for |G| up to `bound`.
std::vector<FrameStarter> exhaustive_frame_starters(const FiniteAbelianGroup& group, const Subgroup& subgroup,
                                                    int bound = 16);

}  // namespace framekit::starters

#pragma once

#include <vector>

#include "framekit/report.hpp"

namespace framekit::latin {

/// Latin square of order s; grid entries are symbol indices in [0, s).
struct LatinSquare {
    int order = 0;
    std::vector<std::vector<int>> grid;

    int at(int r, int c) const { return grid[r][c]; }
};

/// Pair of latin squares of equal order intended to be orthogonal: the s^2
/// superposed ordered pairs are all distinct.
struct OrthogonalPair {
    LatinSquare first;
    LatinSquare second;
};

/// Two s x s grids with the trailing m x m subarray empty (entries < 0).
/// The last m symbols of each grid are the hole symbols.
struct IncompleteOLSPair {
    int order = 0;
    int hole = 0;
    std::vector<std::vector<int>> first;
    std::vector<std::vector<int>> second;

    bool in_hole(int r, int c) const { return r >= order - hole && c >= order - hole; }
};

/// Cells (row, col), one per row and one per column, on which a square's
/// values are all distinct.
struct Transversal {
    std::vector<std::pair<int, int>> cells;
};

ValidityReport verify_latin(const LatinSquare& square);
ValidityReport verify_orthogonal_pair(const OrthogonalPair& pair);
ValidityReport verify_incomplete_pair(const IncompleteOLSPair& pair);

bool is_transversal(const LatinSquare& square, const Transversal& t);

/// Pair of orthogonal latin squares of order s. Supported: s = 1, any odd s,
/// and any s with 4 | 2^v(s) part (i.e. s not congruent to 2 mod 4), built
/// from cyclic / finite-field squares and direct products. s = 2 and s = 6
/// are rejected as nonexistent; other s = 2 mod 4 as unsupported.
OrthogonalPair mols_pair(int s);

/// Self-orthogonal latin square L with its transpose: (L, L^T) is an
/// orthogonal pair whose agreement cells form exactly the main diagonal,
/// normalized so L(i,i) = i. Supported: odd u >= 5 coprime to 3, and u = 9.
OrthogonalPair sols_diagonal(int u);

/// Direct (Kronecker) product; orthogonality is preserved componentwise.
LatinSquare direct_product(const LatinSquare& a, const LatinSquare& b);
OrthogonalPair direct_product(const OrthogonalPair& a, const OrthogonalPair& b);

}  // namespace framekit::latin

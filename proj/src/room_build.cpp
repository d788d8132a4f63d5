#include "framekit/room_build.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace framekit::build {

using room::RoomArray;

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

void require_valid(const ValidityReport& report, const std::string& what) {
    if (!report.valid()) throw std::invalid_argument(what + ": " + report.summary());
}

}  // namespace

RoomArray double_square(const RoomArray& input, const latin::LatinSquare& sols, const std::string& prime_suffix) {
    require_valid(room::verify_room_square(input), "doubling input square");
    auto skew = room::is_skew(input);
    require(skew.skew, "doubling requires a skew Room square");
    // Standardize so the square-symbol cells form the main diagonal; they are
    // the cells the construction drops.
    RoomArray square = room::standardize(input, *input.square_symbol);

    const int n = square.side();
    require(sols.order == n, "latin square order does not match the square side");
    require_valid(latin::verify_latin(sols), "doubling latin square");
    for (int i = 0; i < n; ++i) require(sols.at(i, i) == i, "latin square is not idempotent");
    latin::OrthogonalPair pair{sols, sols};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pair.second.grid[i][j] = sols.at(j, i);
    require_valid(latin::verify_orthogonal_pair(pair), "latin square is not self-orthogonal");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            require(i == j || sols.at(i, j) != pair.second.at(i, j),
                    "L and its transpose agree off the diagonal");

    // Symbols s and s' = s + suffix; hole i is {s_i, s_i'}. The first n
    // rows/columns are the original symbols, the last n the primed ones.
    std::vector<std::string> symbols;
    std::vector<std::vector<std::string>> holes;
    for (int i = 0; i < n; ++i) symbols.push_back(square.symbols[i]);
    for (int i = 0; i < n; ++i) symbols.push_back(square.symbols[i] + prime_suffix);
    for (int i = 0; i < n; ++i) holes.push_back({symbols[i], symbols[n + i]});

    auto frame = room::make_frame(symbols, holes);
    const int x = n;  // index of the square symbol inside `square`

    // Top-left n x n block: keep F(r, c) when it does not contain the square
    // symbol; otherwise move the primed reflection (F(c, r))' there. Skewness
    // means exactly one of the two mirror cells is available.
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (r == c) continue;
            const auto& cell = square.at(r, c);
            if (cell && cell->first != x && cell->second != x) {
                frame.set(r, c, cell->first, cell->second);
            } else if (!cell) {
                const auto& mirror = square.at(c, r);
                require(mirror.has_value(), "mirror cell unexpectedly empty");
                require(mirror->first != x && mirror->second != x, "square-symbol cell off the diagonal");
                frame.set(r, c, n + mirror->first, n + mirror->second);
            }
            // cells containing the square symbol sit on the diagonal and are
            // dropped (they would land inside a hole).
        }
    }

    // Bottom-right n x n block on the primed symbols: {L(i,j), L^T(i,j)'}
    // for i != j. The diagonal transversal is removed by the holes.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) frame.set(n + i, n + j, sols.at(i, j), n + sols.at(j, i));

    require_valid(room::verify_room_frame(frame), "doubling output");
    return frame;
}

RoomArray inflate(const RoomArray& frame, int s, const std::optional<latin::OrthogonalPair>& mols) {
    require_valid(room::verify_room_frame(frame), "inflation input frame");
    require(s >= 1, "inflation factor must be positive");
    latin::OrthogonalPair pair = mols ? *mols : latin::mols_pair(s);
    require(pair.first.order == s && pair.second.order == s, "latin square order does not match the factor");
    require_valid(latin::verify_orthogonal_pair(pair), "inflation latin squares");

    const int n = frame.side();
    std::vector<std::string> symbols;
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < s; ++j) symbols.push_back(frame.symbols[a] + "." + std::to_string(j));
    std::vector<std::vector<std::string>> holes;
    for (const auto& hole : frame.partition) {
        std::vector<std::string> expanded;
        for (int a : hole)
            for (int j = 0; j < s; ++j) expanded.push_back(symbols[a * s + j]);
        holes.push_back(std::move(expanded));
    }

    auto out = room::make_frame(symbols, holes);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const auto& cell = frame.at(r, c);
            if (!cell) continue;
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j)
                    out.set(r * s + i, c * s + j, cell->first * s + pair.first.at(i, j),
                            cell->second * s + pair.second.at(i, j));
        }
    }

    require_valid(room::verify_room_frame(out), "inflation output");
    return out;
}

RoomArray fill_frame(const RoomArray& frame, const std::vector<std::string>& extra,
                     const std::vector<room::RoomArray>& ingredients, int keep_index) {
    require_valid(room::verify_room_frame(frame), "frame-filling input frame");
    const int u = static_cast<int>(frame.partition.size());
    const int w = static_cast<int>(extra.size());
    require(static_cast<int>(ingredients.size()) == u, "one ingredient square per hole required");
    require(w == 0 || (0 <= keep_index && keep_index < u), "keep index out of range");

    int t = static_cast<int>(frame.partition[0].size());
    for (const auto& hole : frame.partition)
        require(static_cast<int>(hole.size()) == t, "frame filling needs a uniform hole type");
    require(t + w >= 3, "ingredient side t + w below 3; for type 1^n use the frame-to-square conversion");

    for (const auto& sym : extra) require(frame.index_of(sym) < 0, "extra symbol already used by the frame");
    std::set<std::string> extra_set(extra.begin(), extra.end());
    require(static_cast<int>(extra_set.size()) == w, "repeated extra symbol");

    // Validate the ingredients: square of side t + w on hole symbols followed
    // by the extra symbols, all sharing one square symbol.
    std::string square_symbol;
    for (int h = 0; h < u; ++h) {
        const auto& ing = ingredients[h];
        require_valid(room::verify_room_square(ing), "ingredient " + std::to_string(h));
        require(ing.side() == t + w, "ingredient " + std::to_string(h) + " has the wrong side");
        for (int i = 0; i < t; ++i)
            require(ing.symbols[i] == frame.symbols[frame.partition[h][i]],
                    "ingredient " + std::to_string(h) + " rows must start with the hole symbols in order");
        for (int i = 0; i < w; ++i)
            require(ing.symbols[t + i] == extra[i],
                    "ingredient " + std::to_string(h) + " rows must end with the extra symbols in order");
        if (h == 0)
            square_symbol = *ing.square_symbol;
        else
            require(*ing.square_symbol == square_symbol, "ingredients disagree on the square symbol");
    }
    require(frame.index_of(square_symbol) < 0 && !extra_set.count(square_symbol),
            "square symbol collides with a frame or extra symbol");

    // Ingredients must agree on the trailing w x w subsquare: it has to
    // contain exactly the pairs within W u {x}, and it is kept only once.
    if (w > 0) {
        for (int h = 0; h < u; ++h) {
            std::vector<std::pair<std::string, std::string>> sub_pairs;
            for (int i = 0; i < w; ++i)
                for (int j = 0; j < w; ++j)
                    if (const auto& cell = ingredients[h].at(t + i, t + j)) {
                        auto [lo, hi] =
                            std::minmax(ingredients[h].token(cell->first), ingredients[h].token(cell->second));
                        sub_pairs.emplace_back(lo, hi);
                    }
            std::sort(sub_pairs.begin(), sub_pairs.end());
            std::vector<std::pair<std::string, std::string>> expected;
            for (int i = 0; i < w; ++i) {
                expected.emplace_back(std::min(extra[i], square_symbol), std::max(extra[i], square_symbol));
                for (int j = i + 1; j < w; ++j)
                    expected.emplace_back(std::min(extra[i], extra[j]), std::max(extra[i], extra[j]));
            }
            std::sort(expected.begin(), expected.end());
            require(sub_pairs == expected,
                    "ingredient " + std::to_string(h) + " subsquare must contain exactly the pairs within the extras");
        }
    }

    std::vector<std::string> symbols = frame.symbols;
    for (const auto& sym : extra) symbols.push_back(sym);
    auto out = room::make_square(symbols, square_symbol);
    const int n = frame.side();

    auto copy_cell = [&](const RoomArray& src, int sr, int sc, int dr, int dc) {
        const auto& cell = src.at(sr, sc);
        if (!cell) return;
        auto remap = [&](int idx) { return out.index_of(src.token(idx)); };
        out.set(dr, dc, remap(cell->first), remap(cell->second));
    };

    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) copy_cell(frame, r, c, r, c);

    for (int h = 0; h < u; ++h) {
        const auto& ing = ingredients[h];
        auto dest = [&](int i) { return i < t ? frame.partition[h][i] : n + (i - t); };
        for (int i = 0; i < t + w; ++i) {
            for (int j = 0; j < t + w; ++j) {
                if (i >= t && j >= t && h != keep_index && w > 0) continue;  // subsquare kept once
                copy_cell(ing, i, j, dest(i), dest(j));
            }
        }
    }

    require_valid(room::verify_room_square(out), "frame-filling output");
    return out;
}

}  // namespace framekit::build

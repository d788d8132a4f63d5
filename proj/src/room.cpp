#include "framekit/room.hpp"

#include <algorithm>
#include <stdexcept>

namespace framekit::room {

namespace {

std::string cell_name(const RoomArray& a, int r, int c) {
    return "cell (" + a.symbols[r] + "," + a.symbols[c] + ")";
}

std::string pair_name(const RoomArray& a, const CellPair& p) {
    return "{" + a.token(p.first) + "," + a.token(p.second) + "}";
}

/// Checks that the partition covers the row/column symbols exactly once.
/// Returns the hole index per symbol (-1 where uncovered).
std::vector<int> check_partition(const RoomArray& a, ValidityReport& report) {
    std::vector<int> hole(a.side(), -1);
    for (std::size_t h = 0; h < a.partition.size(); ++h) {
        for (int s : a.partition[h]) {
            if (s < 0 || s >= a.side()) {
                report.add("partition", "hole " + std::to_string(h), "symbol index out of range");
                continue;
            }
            if (hole[s] != -1)
                report.add("partition", "hole " + std::to_string(h), "symbol " + a.symbols[s] + " in two holes");
            hole[s] = static_cast<int>(h);
        }
    }
    for (int s = 0; s < a.side(); ++s)
        if (hole[s] == -1) report.add("partition", "symbol " + a.symbols[s], "not covered by any hole");
    return hole;
}

bool check_cell_shapes(const RoomArray& a, ValidityReport& report) {
    bool ok = true;
    if (static_cast<int>(a.cells.size()) != a.side() * a.side()) {
        report.add("shape", "cells", "cell array is not side x side");
        return false;
    }
    for (int r = 0; r < a.side(); ++r)
        for (int c = 0; c < a.side(); ++c) {
            const auto& cell = a.at(r, c);
            if (!cell) continue;
            if (cell->first < 0 || cell->second >= a.symbol_count() || cell->first >= cell->second) {
                report.add("cell-shape", cell_name(a, r, c), "not an unordered pair of distinct symbols");
                ok = false;
            }
        }
    return ok;
}

void check_pair_coverage(const RoomArray& a, const std::vector<int>& hole, bool with_square_symbol,
                         ValidityReport& report) {
    int m = a.symbol_count();
    auto hole_of = [&](int s) { return s < a.side() ? hole[s] : -2; };  // square symbol: its own "hole"
    std::vector<int> count(m * m, 0);
    for (int r = 0; r < a.side(); ++r)
        for (int c = 0; c < a.side(); ++c) {
            const auto& cell = a.at(r, c);
            if (!cell) continue;
            if (!with_square_symbol && cell->second >= a.side()) {
                report.add("cell-shape", cell_name(a, r, c), "pair uses the square symbol in a frame");
                continue;
            }
            count[cell->first * m + cell->second]++;
            if (hole_of(cell->first) == hole_of(cell->second))
                report.add("pair-in-hole", cell_name(a, r, c),
                           "pair " + pair_name(a, *cell) + " lies within one hole");
        }
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            bool cross = hole_of(x) != hole_of(y);
            int n = count[x * m + y];
            if (cross && n != 1)
                report.add("pair-coverage", "pair {" + a.token(x) + "," + a.token(y) + "}",
                           "occurs " + std::to_string(n) + " times, expected 1");
            else if (!cross && n != 0)
                report.add("pair-coverage", "pair {" + a.token(x) + "," + a.token(y) + "}",
                           "occurs " + std::to_string(n) + " times, expected 0");
        }
}

void check_line_coverage(const RoomArray& a, const std::vector<int>& hole, bool with_square_symbol,
                         ValidityReport& report) {
    int m = a.symbol_count();
    for (int line = 0; line < a.side(); ++line) {
        for (bool column : {false, true}) {
            std::vector<int> count(m, 0);
            for (int k = 0; k < a.side(); ++k) {
                const auto& cell = column ? a.at(k, line) : a.at(line, k);
                if (!cell) continue;
                count[cell->first]++;
                count[cell->second]++;
            }
            std::string where = std::string(column ? "column " : "row ") + a.symbols[line];
            for (int s = 0; s < m; ++s) {
                bool excluded = !with_square_symbol && s < a.side() && hole[s] == hole[line];
                int expected = excluded ? 0 : 1;
                if (count[s] != expected)
                    report.add("line-coverage", where,
                               "symbol " + a.token(s) + " occurs " + std::to_string(count[s]) + " times, expected " +
                                   std::to_string(expected));
            }
        }
    }
}

}  // namespace

void RoomArray::set(int r, int c, int a, int b) {
    if (a == b) throw std::invalid_argument("cell pair must have distinct symbols");
    if (a > b) std::swap(a, b);
    cells[r * side() + c] = CellPair{a, b};
}

const std::string& RoomArray::token(int index) const {
    if (index == side() && square_symbol) return *square_symbol;
    return symbols.at(index);
}

int RoomArray::index_of(const std::string& tok) const {
    for (int i = 0; i < side(); ++i)
        if (symbols[i] == tok) return i;
    if (square_symbol && *square_symbol == tok) return side();
    return -1;
}

std::vector<int> RoomArray::hole_of() const {
    std::vector<int> hole(side(), -1);
    for (std::size_t h = 0; h < partition.size(); ++h)
        for (int s : partition[h])
            if (s >= 0 && s < side()) hole[s] = static_cast<int>(h);
    return hole;
}

int RoomArray::filled_count() const {
    int n = 0;
    for (const auto& cell : cells)
        if (cell) ++n;
    return n;
}

std::vector<std::pair<std::string, std::string>> RoomArray::pair_multiset() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& cell : cells)
        if (cell) {
            std::string a = token(cell->first), b = token(cell->second);
            if (b < a) std::swap(a, b);
            out.emplace_back(std::move(a), std::move(b));
        }
    std::sort(out.begin(), out.end());
    return out;
}

RoomArray make_square(std::vector<std::string> symbols, std::string square_symbol) {
    RoomArray a;
    a.symbols = std::move(symbols);
    a.square_symbol = std::move(square_symbol);
    for (int s = 0; s < a.side(); ++s) a.partition.push_back({s});
    a.cells.assign(static_cast<std::size_t>(a.side()) * a.side(), std::nullopt);
    return a;
}

RoomArray make_frame(std::vector<std::string> symbols, std::vector<std::vector<std::string>> holes) {
    RoomArray a;
    a.symbols = std::move(symbols);
    for (const auto& hole : holes) {
        std::vector<int> indices;
        for (const auto& tok : hole) {
            int i = a.index_of(tok);
            if (i < 0 || i >= a.side()) throw std::invalid_argument("hole symbol '" + tok + "' not among symbols");
            indices.push_back(i);
        }
        a.partition.push_back(std::move(indices));
    }
    a.cells.assign(static_cast<std::size_t>(a.side()) * a.side(), std::nullopt);
    return a;
}

ValidityReport verify_room_square(const RoomArray& a) {
    ValidityReport report;
    if (!a.square_symbol) report.add("square-symbol", "array", "no square symbol declared");
    auto hole = check_partition(a, report);
    for (std::size_t h = 0; h < a.partition.size(); ++h)
        if (a.partition[h].size() != 1)
            report.add("partition", "hole " + std::to_string(h), "Room square partition must be all singletons");
    if (!check_cell_shapes(a, report)) return report;
    // With singleton holes every symbol pair is cross-hole and every symbol
    // (including the square symbol) must appear once per row and column.
    std::vector<int> singleton(a.side());
    for (int s = 0; s < a.side(); ++s) singleton[s] = s;
    check_line_coverage(a, singleton, true, report);
    check_pair_coverage(a, singleton, true, report);
    return report;
}

ValidityReport verify_room_frame(const RoomArray& a) {
    ValidityReport report;
    if (a.square_symbol) report.add("square-symbol", "array", "a Room frame has no square symbol");
    auto hole = check_partition(a, report);
    if (!check_cell_shapes(a, report)) return report;
    for (int r = 0; r < a.side(); ++r)
        for (int c = 0; c < a.side(); ++c)
            if (hole[r] == hole[c] && a.at(r, c))
                report.add("hole-not-empty", cell_name(a, r, c), "cell inside hole " + std::to_string(hole[r]));
    check_line_coverage(a, hole, false, report);
    check_pair_coverage(a, hole, false, report);
    return report;
}

SkewResult is_skew(const RoomArray& a) {
    auto hole = a.hole_of();
    for (int r = 0; r < a.side(); ++r)
        for (int c = r + 1; c < a.side(); ++c) {
            if (hole[r] == hole[c]) continue;
            bool f1 = a.at(r, c).has_value(), f2 = a.at(c, r).has_value();
            if (f1 == f2) return {false, std::make_pair(r, c)};
        }
    return {true, std::nullopt};
}

RoomArray standardize(const RoomArray& square, const std::string& x) {
    int xi = square.index_of(x);
    if (xi < 0) throw std::invalid_argument("symbol '" + x + "' not present");
    int n = square.side();
    // Locate the cell holding {x, s} for every other symbol s.
    std::vector<int> row_of(square.symbol_count(), -1), col_of(square.symbol_count(), -1);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const auto& cell = square.at(r, c);
            if (!cell || (cell->first != xi && cell->second != xi)) continue;
            int other = cell->first == xi ? cell->second : cell->first;
            row_of[other] = r;
            col_of[other] = c;
        }

    std::vector<std::string> new_symbols;
    for (int s = 0; s < square.symbol_count(); ++s)
        if (s != xi) new_symbols.push_back(square.token(s));
    RoomArray out = make_square(new_symbols, x);
    std::vector<int> old_index(n);  // new row/col position -> source row/col
    for (int i = 0, s = 0; s < square.symbol_count(); ++s) {
        if (s == xi) continue;
        if (row_of[s] < 0 || col_of[s] < 0)
            throw std::invalid_argument("array is not a Room square standardizable by '" + x + "'");
        old_index[i++] = s;
    }
    auto remap = [&](int old_sym) { return out.index_of(square.token(old_sym)); };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const auto& cell = square.at(row_of[old_index[r]], col_of[old_index[c]]);
            if (cell) out.set(r, c, remap(cell->first), remap(cell->second));
        }
    return out;
}

RoomArray square_to_frame(const RoomArray& square, const std::string& x) {
    RoomArray std_square = standardize(square, x);
    RoomArray out;
    out.symbols = std_square.symbols;
    for (int s = 0; s < out.side(); ++s) out.partition.push_back({s});
    out.cells = std_square.cells;
    for (int s = 0; s < out.side(); ++s) out.clear(s, s);
    return out;
}

RoomArray frame_to_square(const RoomArray& frame, const std::string& x) {
    for (const auto& hole : frame.partition)
        if (hole.size() != 1) throw std::invalid_argument("frame_to_square requires all holes of size one");
    if (frame.index_of(x) >= 0) throw std::invalid_argument("symbol '" + x + "' already present");
    RoomArray out = make_square(frame.symbols, x);
    out.cells = frame.cells;
    for (int s = 0; s < out.side(); ++s) out.set(s, s, s, out.side());
    return out;
}

RoomArray transpose(const RoomArray& a) {
    RoomArray out = a;
    for (int r = 0; r < a.side(); ++r)
        for (int c = 0; c < a.side(); ++c) out.cells[c * a.side() + r] = a.at(r, c);
    return out;
}

RoomArray relabel(const RoomArray& a, const std::map<std::string, std::string>& names) {
    auto rename = [&](const std::string& tok) {
        auto it = names.find(tok);
        return it == names.end() ? tok : it->second;
    };
    RoomArray out = a;
    for (auto& s : out.symbols) s = rename(s);
    if (out.square_symbol) out.square_symbol = rename(*out.square_symbol);
    return out;
}

bool cells_identical(const RoomArray& a, const RoomArray& b) {
    if (a.side() != b.side()) return false;
    std::vector<int> b_row(a.side());
    for (int s = 0; s < a.side(); ++s) {
        int t = b.index_of(a.symbols[s]);
        if (t < 0 || t >= b.side()) return false;
        b_row[s] = t;
    }
    // Same holes as sets of symbols.
    auto hole_sets = [](const RoomArray& x) {
        std::vector<std::vector<std::string>> hs;
        for (const auto& hole : x.partition) {
            std::vector<std::string> h;
            for (int s : hole) h.push_back(x.symbols[s]);
            std::sort(h.begin(), h.end());
            hs.push_back(std::move(h));
        }
        std::sort(hs.begin(), hs.end());
        return hs;
    };
    if (hole_sets(a) != hole_sets(b)) return false;
    for (int r = 0; r < a.side(); ++r)
        for (int c = 0; c < a.side(); ++c) {
            const auto& ca = a.at(r, c);
            const auto& cb = b.at(b_row[r], b_row[c]);
            if (ca.has_value() != cb.has_value()) return false;
            if (!ca) continue;
            std::string a1 = a.token(ca->first), a2 = a.token(ca->second);
            std::string b1 = b.token(cb->first), b2 = b.token(cb->second);
            if (a1 > a2) std::swap(a1, a2);
            if (b1 > b2) std::swap(b1, b2);
            if (a1 != b1 || a2 != b2) return false;
        }
    return true;
}

}  // namespace framekit::room

#include "framekit/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace framekit::io {

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::string spaced;
    for (char c : line) {
        if (c == '{' || c == '}' || c == ':') {
            spaced += ' ';
            spaced += c;
            spaced += ' ';
        } else {
            spaced += c;
        }
    }
    std::istringstream in(spaced);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// Key/value line reader: "key: a b {c d} ...". Returns tokens after ':'.
struct KeyLine {
    std::string key;
    std::vector<std::string> values;
};

std::optional<KeyLine> parse_key_line(const std::string& line) {
    auto toks = tokens_of(line);
    if (toks.size() < 2) return std::nullopt;
    // key may span several tokens ("cell 0 3"); find the ':'.
    auto colon = std::find(toks.begin(), toks.end(), ":");
    if (colon == toks.end()) return std::nullopt;
    KeyLine kl;
    for (auto it = toks.begin(); it != colon; ++it) {
        if (!kl.key.empty()) kl.key += ' ';
        kl.key += *it;
    }
    kl.values.assign(colon + 1, toks.end());
    return kl;
}

// Parses "{a b} {c d}" token streams into groups.
std::vector<std::vector<std::string>> parse_groups(const std::vector<std::string>& toks, const char* what) {
    std::vector<std::vector<std::string>> out;
    std::optional<std::vector<std::string>> current;
    for (const auto& tok : toks) {
        if (tok == "{") {
            if (current) throw ParseError(std::string("nested brace in ") + what);
            current.emplace();
        } else if (tok == "}") {
            if (!current) throw ParseError(std::string("unmatched brace in ") + what);
            out.push_back(std::move(*current));
            current.reset();
        } else {
            if (!current) throw ParseError(std::string("token outside braces in ") + what);
            current->push_back(tok);
        }
    }
    if (current) throw ParseError(std::string("unclosed brace in ") + what);
    return out;
}

int parse_int(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw ParseError("");
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("bad integer '") + tok + "' in " + what);
    }
}

std::string join(const std::vector<std::string>& toks, const std::string& sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i) out += sep;
        out += toks[i];
    }
    return out;
}

}  // namespace

std::string write_room(const room::RoomArray& array) {
    std::ostringstream out;
    out << "room v1\n";
    out << "side: " << array.side() << "\n";
    out << "symbols: " << join(array.symbols) << "\n";
    if (array.square_symbol) {
        out << "square-symbol: " << *array.square_symbol << "\n";
    } else {
        out << "holes:";
        for (const auto& hole : array.partition) {
            out << " {";
            for (std::size_t i = 0; i < hole.size(); ++i) out << (i ? " " : "") << array.symbols[hole[i]];
            out << "}";
        }
        out << "\n";
    }
    for (int r = 0; r < array.side(); ++r)
        for (int c = 0; c < array.side(); ++c)
            if (const auto& cell = array.at(r, c))
                out << "cell " << array.symbols[r] << " " << array.symbols[c] << ": " << array.token(cell->first)
                    << " " << array.token(cell->second) << "\n";
    return out.str();
}

room::RoomArray read_room(const std::string& text) {
    auto lines = lines_of(text);
    if (lines.empty() || lines[0] != "room v1") throw ParseError("expected 'room v1' header");

    std::optional<int> side;
    std::vector<std::string> symbols;
    std::optional<std::string> square_symbol;
    std::optional<std::vector<std::vector<std::string>>> holes;
    struct CellLine {
        std::string row, col, a, b;
    };
    std::vector<CellLine> cells;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto kl = parse_key_line(lines[i]);
        if (!kl) throw ParseError("unparsable line: " + lines[i]);
        if (kl->key == "side") {
            if (kl->values.size() != 1) throw ParseError("side takes one value");
            side = parse_int(kl->values[0], "side");
        } else if (kl->key == "symbols") {
            symbols = kl->values;
        } else if (kl->key == "square-symbol") {
            if (kl->values.size() != 1) throw ParseError("square-symbol takes one value");
            square_symbol = kl->values[0];
        } else if (kl->key == "holes") {
            holes = parse_groups(kl->values, "holes");
        } else if (kl->key.rfind("cell ", 0) == 0) {
            auto head = tokens_of(kl->key);
            if (head.size() != 3 || kl->values.size() != 2) throw ParseError("bad cell line: " + lines[i]);
            cells.push_back({head[1], head[2], kl->values[0], kl->values[1]});
        } else {
            throw ParseError("unknown header '" + kl->key + "'");
        }
    }

    if (!side || symbols.empty()) throw ParseError("missing side or symbols header");
    if (static_cast<int>(symbols.size()) != *side) throw ParseError("side does not match the symbol count");

    room::RoomArray array;
    if (square_symbol) {
        if (holes) throw ParseError("a square file must not declare holes");
        array = room::make_square(symbols, *square_symbol);
    } else {
        if (!holes) throw ParseError("missing holes or square-symbol header");
        array = room::make_frame(symbols, *holes);
    }
    for (const auto& cl : cells) {
        int r = array.index_of(cl.row);
        int c = array.index_of(cl.col);
        int a = array.index_of(cl.a);
        int b = array.index_of(cl.b);
        if (r < 0 || c < 0 || r >= array.side() || c >= array.side())
            throw ParseError("unknown cell position " + cl.row + " " + cl.col);
        if (a < 0 || b < 0) throw ParseError("unknown symbol in cell " + cl.row + " " + cl.col);
        if (array.at(r, c)) throw ParseError("duplicate cell " + cl.row + " " + cl.col);
        array.set(r, c, a, b);
    }
    return array;
}

namespace {

std::string starter_pairs_text(const starters::FrameStarter& s) {
    std::string out;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
        if (i) out += " ";
        out += "{" + s.pairs[i].first.to_string() + " " + s.pairs[i].second.to_string() + "}";
    }
    return out;
}

std::string quad_token(const starters::IntransitiveStarterQuad& q, int x) {
    if (x == q.fixed_a()) return q.fixed[0];
    if (x == q.fixed_b()) return q.fixed[1];
    return std::to_string(x);
}

std::string quad_pairs_text(const starters::IntransitiveStarterQuad& q,
                            const std::vector<std::pair<int, int>>& pairs) {
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += " ";
        out += "{" + quad_token(q, pairs[i].first) + " " + quad_token(q, pairs[i].second) + "}";
    }
    return out;
}

}  // namespace

std::string write_starter(const starters::FrameStarter& s1, const std::optional<starters::FrameStarter>& s2) {
    std::ostringstream out;
    out << "starter v1\n";
    out << "group:";
    for (int n : s1.group.orders()) out << " " << n;
    out << "\n";
    out << "H:";
    for (const auto& e : s1.subgroup.members()) out << " " << e.to_string();
    out << "\n";
    out << "pairs: " << starter_pairs_text(s1) << "\n";
    if (s2) out << "S2: " << starter_pairs_text(*s2) << "\n";
    return out.str();
}

std::string write_starter(const starters::IntransitiveStarterQuad& quad) {
    std::ostringstream out;
    out << "starter v1\n";
    out << "group: " << quad.modulus << "\n";
    out << "fixed: " << quad.fixed[0] << " " << quad.fixed[1] << "\n";
    out << "pairs: " << quad_pairs_text(quad, quad.s1) << "\n";
    out << "C: " << quad_pairs_text(quad, quad.c) << "\n";
    out << "S2: " << quad_pairs_text(quad, quad.s2) << "\n";
    out << "R: " << quad_pairs_text(quad, quad.r) << "\n";
    return out.str();
}

StarterFile read_starter(const std::string& text) {
    auto lines = lines_of(text);
    if (lines.empty() || lines[0] != "starter v1") throw ParseError("expected 'starter v1' header");

    std::map<std::string, std::vector<std::string>> fields;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto kl = parse_key_line(lines[i]);
        if (!kl) throw ParseError("unparsable line: " + lines[i]);
        if (fields.count(kl->key)) throw ParseError("repeated header '" + kl->key + "'");
        fields[kl->key] = kl->values;
    }
    if (!fields.count("group")) throw ParseError("missing group header");
    std::vector<int> orders;
    for (const auto& tok : fields.at("group")) orders.push_back(parse_int(tok, "group"));

    StarterFile out;
    if (fields.count("fixed")) {
        if (orders.size() != 1) throw ParseError("a quadruple needs a cyclic group");
        starters::IntransitiveStarterQuad quad;
        quad.modulus = orders[0];
        const auto& fixed = fields.at("fixed");
        if (fixed.size() != 2) throw ParseError("fixed takes two symbols");
        quad.fixed = {fixed[0], fixed[1]};
        auto decode = [&](const std::string& tok) {
            if (tok == quad.fixed[0]) return quad.fixed_a();
            if (tok == quad.fixed[1]) return quad.fixed_b();
            int v = parse_int(tok, "quadruple element");
            if (v < 0 || v >= quad.modulus) throw ParseError("element " + tok + " outside the modulus");
            return v;
        };
        auto decode_pairs = [&](const char* key) {
            if (!fields.count(key)) throw ParseError(std::string("missing ") + key + " header");
            std::vector<std::pair<int, int>> out_pairs;
            for (const auto& grp : parse_groups(fields.at(key), key)) {
                if (grp.size() != 2) throw ParseError(std::string("pairs in ") + key + " need two elements");
                out_pairs.emplace_back(decode(grp[0]), decode(grp[1]));
            }
            return out_pairs;
        };
        quad.s1 = decode_pairs("pairs");
        quad.c = decode_pairs("C");
        quad.s2 = decode_pairs("S2");
        quad.r = decode_pairs("R");
        out.quad = std::move(quad);
        return out;
    }

    algebra::FiniteAbelianGroup group(orders);
    if (!fields.count("H")) throw ParseError("missing H header");
    std::set<algebra::GroupElement> members;
    for (const auto& tok : fields.at("H")) members.insert(group.parse_element(tok));
    algebra::Subgroup subgroup(group, members);

    auto decode_starter = [&](const char* key) {
        starters::FrameStarter s{group, subgroup, {}};
        for (const auto& grp : parse_groups(fields.at(key), key)) {
            if (grp.size() != 2) throw ParseError(std::string("pairs in ") + key + " need two elements");
            s.pairs.emplace_back(group.parse_element(grp[0]), group.parse_element(grp[1]));
        }
        return s;
    };
    if (!fields.count("pairs")) throw ParseError("missing pairs header");
    out.s1 = decode_starter("pairs");
    if (fields.count("S2")) out.s2 = decode_starter("S2");
    return out;
}

namespace {

std::string block_tokens(const designs::BlockDesign& d, const std::vector<int>& block) {
    std::vector<std::string> toks;
    for (int p : block) toks.push_back(d.points[p]);
    return join(toks);
}

std::ostringstream bd_header(const designs::BlockDesign& d) {
    std::ostringstream out;
    out << "bd v1\n";
    out << "points: " << join(d.points) << "\n";
    if (d.groups) {
        out << "groups:";
        for (const auto& grp : *d.groups) out << " {" << block_tokens(d, grp) << "}";
        out << "\n";
    }
    return out;
}

}  // namespace

std::string write_bd(const designs::BlockDesign& design) {
    auto out = bd_header(design);
    out << "lambda: " << design.lambda << "\n";
    for (const auto& block : design.blocks) out << "block: " << block_tokens(design, block) << "\n";
    return out.str();
}

std::string write_bd(const designs::ResolvedBlockDesign& design) {
    auto out = bd_header(design.design);
    out << "holes:";
    for (const auto& hole : design.holes) out << " {" << block_tokens(design.design, hole) << "}";
    out << "\n";
    out << "lambda: " << design.design.lambda << "\n";
    out << "k: " << design.block_size << "\n";
    for (const auto& [hole, blocks] : design.classes) {
        out << "class ";
        if (hole == designs::kFullClass) {
            out << "full";
        } else {
            std::vector<std::string> toks;
            for (int p : design.holes[hole]) toks.push_back(design.design.points[p]);
            out << join(toks, ",");
        }
        out << ":";
        for (int bi : blocks) out << " {" << block_tokens(design.design, design.design.blocks[bi]) << "}";
        out << "\n";
    }
    return out.str();
}

BdFile read_bd(const std::string& text) {
    auto lines = lines_of(text);
    if (lines.empty() || lines[0] != "bd v1") throw ParseError("expected 'bd v1' header");

    designs::BlockDesign d;
    std::optional<std::vector<std::vector<std::string>>> holes;
    std::optional<int> k;
    struct ClassLine {
        std::string hole_token;  // "full" or comma-joined points
        std::vector<std::vector<std::string>> blocks;
    };
    std::vector<ClassLine> class_lines;
    bool has_blocks = false;

    auto point_index = [&](const std::string& tok) {
        int p = d.index_of(tok);
        if (p < 0) throw ParseError("unknown point " + tok);
        return p;
    };
    auto to_block = [&](const std::vector<std::string>& toks) {
        std::vector<int> block;
        for (const auto& tok : toks) block.push_back(point_index(tok));
        return block;
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto kl = parse_key_line(lines[i]);
        if (!kl) throw ParseError("unparsable line: " + lines[i]);
        if (kl->key == "points") {
            d.points = kl->values;
        } else if (kl->key == "groups") {
            std::vector<std::vector<int>> groups;
            for (const auto& grp : parse_groups(kl->values, "groups")) groups.push_back(to_block(grp));
            d.groups = std::move(groups);
        } else if (kl->key == "holes") {
            holes = parse_groups(kl->values, "holes");
        } else if (kl->key == "lambda") {
            if (kl->values.size() != 1) throw ParseError("lambda takes one value");
            d.lambda = parse_int(kl->values[0], "lambda");
        } else if (kl->key == "k") {
            if (kl->values.size() != 1) throw ParseError("k takes one value");
            k = parse_int(kl->values[0], "k");
        } else if (kl->key == "block") {
            d.blocks.push_back(to_block(kl->values));
            has_blocks = true;
        } else if (kl->key.rfind("class ", 0) == 0) {
            auto head = tokens_of(kl->key);
            if (head.size() != 2) throw ParseError("bad class line: " + lines[i]);
            class_lines.push_back({head[1], parse_groups(kl->values, "class")});
        } else {
            throw ParseError("unknown header '" + kl->key + "'");
        }
    }
    if (d.points.empty()) throw ParseError("missing points header");

    BdFile out;
    if (class_lines.empty()) {
        if (holes) throw ParseError("holes require class lines");
        out.design = std::move(d);
        return out;
    }
    if (has_blocks) throw ParseError("mix of block and class lines");
    if (!holes) throw ParseError("class lines require a holes header");

    designs::ResolvedBlockDesign r;
    for (const auto& hole : *holes) r.holes.push_back(to_block(hole));
    std::map<std::string, int> hole_by_token;
    for (int hi = 0; hi < static_cast<int>(r.holes.size()); ++hi) {
        std::vector<std::string> toks;
        for (int p : r.holes[hi]) toks.push_back(d.points[p]);
        hole_by_token[join(toks, ",")] = hi;
    }
    for (const auto& cl : class_lines) {
        int tag = designs::kFullClass;
        if (cl.hole_token != "full") {
            auto it = hole_by_token.find(cl.hole_token);
            if (it == hole_by_token.end()) throw ParseError("unknown hole token " + cl.hole_token);
            tag = it->second;
        }
        std::vector<int> members;
        for (const auto& block : cl.blocks) {
            members.push_back(static_cast<int>(d.blocks.size()));
            d.blocks.push_back(to_block(block));
        }
        r.classes.emplace_back(tag, std::move(members));
    }
    r.block_size = k ? *k : (d.blocks.empty() ? 3 : static_cast<int>(d.blocks[0].size()));
    r.design = std::move(d);
    out.design = r.design;
    out.resolved = std::move(r);
    return out;
}

latin::LatinSquare LatinFile::as_square(int grid) const {
    const auto& g = grids.at(grid);
    std::set<std::string> symbol_set;
    for (const auto& row : g)
        for (const auto& tok : row) {
            if (tok == ".") throw ParseError("grid has empty cells; not a complete latin square");
            symbol_set.insert(tok);
        }
    if (static_cast<int>(symbol_set.size()) != order) throw ParseError("grid symbol count does not match the order");
    std::map<std::string, int> index;
    for (const auto& tok : symbol_set) index.emplace(tok, static_cast<int>(index.size()));
    latin::LatinSquare square{order, std::vector<std::vector<int>>(order, std::vector<int>(order, 0))};
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) square.grid[i][j] = index.at(g[i][j]);
    return square;
}

latin::IncompleteOLSPair LatinFile::as_incomplete_pair() const {
    if (grids.size() != 2) throw ParseError("an incomplete pair needs exactly two grids");
    // The hole size is the trailing empty square block, common to both grids.
    int hole = 0;
    while (hole < order && grids[0][order - 1][order - 1 - hole] == ".") ++hole;
    if (hole == 0) throw ParseError("no trailing hole found");

    latin::IncompleteOLSPair pair;
    pair.order = order;
    pair.hole = hole;
    for (int which = 0; which < 2; ++which) {
        const auto& g = grids[which];
        std::set<std::string> all;
        std::set<std::string> in_hole_rows;  // symbols of the hole rows = non-hole symbols
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) {
                if (g[i][j] == ".") {
                    if (i < order - hole || j < order - hole)
                        throw ParseError("empty cell outside the trailing hole");
                    continue;
                }
                all.insert(g[i][j]);
                if (i >= order - hole) in_hole_rows.insert(g[i][j]);
            }
        if (static_cast<int>(all.size()) != order) throw ParseError("grid symbol count does not match the order");
        // Non-hole symbols first (sorted), then hole symbols (sorted).
        std::map<std::string, int> index;
        for (const auto& tok : in_hole_rows) index.emplace(tok, static_cast<int>(index.size()));
        for (const auto& tok : all)
            if (!index.count(tok)) index.emplace(tok, static_cast<int>(index.size()));
        if (static_cast<int>(index.size()) != order) throw ParseError("inconsistent symbol sets");
        auto& grid = which == 0 ? pair.first : pair.second;
        grid.assign(order, std::vector<int>(order, -1));
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j)
                if (g[i][j] != ".") grid[i][j] = index.at(g[i][j]);
    }
    return pair;
}

std::string write_latin(const LatinFile& file) {
    std::ostringstream out;
    for (const auto& grid : file.grids) {
        out << "latin v1 " << file.order << "\n";
        for (const auto& row : grid) out << join(row) << "\n";
    }
    return out.str();
}

LatinFile read_latin(const std::string& text) {
    auto lines = lines_of(text);
    LatinFile file;
    std::size_t i = 0;
    while (i < lines.size()) {
        if (lines[i].empty()) {
            ++i;
            continue;
        }
        auto head = tokens_of(lines[i]);
        if (head.size() != 3 || head[0] != "latin" || head[1] != "v1")
            throw ParseError("expected 'latin v1 <order>' header");
        int order = parse_int(head[2], "latin order");
        if (file.order == 0)
            file.order = order;
        else if (file.order != order)
            throw ParseError("grids of different orders");
        ++i;
        std::vector<std::vector<std::string>> grid;
        for (int r = 0; r < order; ++r, ++i) {
            if (i >= lines.size()) throw ParseError("truncated latin grid");
            auto row = tokens_of(lines[i]);
            if (static_cast<int>(row.size()) != order) throw ParseError("row length does not match the order");
            grid.push_back(std::move(row));
        }
        file.grids.push_back(std::move(grid));
    }
    if (file.grids.empty()) throw ParseError("no latin grid found");
    return file;
}

LatinFile latin_file(const latin::LatinSquare& square) {
    LatinFile file;
    file.order = square.order;
    std::vector<std::vector<std::string>> grid;
    for (const auto& row : square.grid) {
        std::vector<std::string> toks;
        for (int v : row) toks.push_back(std::to_string(v));
        grid.push_back(std::move(toks));
    }
    file.grids.push_back(std::move(grid));
    return file;
}

LatinFile latin_file(const latin::OrthogonalPair& pair) {
    LatinFile file = latin_file(pair.first);
    auto second = latin_file(pair.second);
    file.grids.push_back(second.grids[0]);
    return file;
}

}  // namespace framekit::io

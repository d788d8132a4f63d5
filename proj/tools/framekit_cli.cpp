#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "conformance.hpp"
#include "framekit/designs.hpp"
#include "framekit/io.hpp"
#include "framekit/latin.hpp"
#include "framekit/room.hpp"
#include "framekit/room_build.hpp"
#include "framekit/search.hpp"
#include "framekit/starter.hpp"

namespace {

using nlohmann::json;
using namespace framekit;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseFailure("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::string infer_kind(const std::string& path, const std::string& text) {
    if (path.ends_with(".room")) {
        auto a = io::read_room(text);
        return a.square_symbol && a.partition.size() == a.symbols.size() ? "square" : "frame";
    }
    if (path.ends_with(".starter")) return "starter";
    if (path.ends_with(".bd")) {
        auto file = io::read_bd(text);
        if (file.resolved) return file.resolved->block_size == 3 && file.design.lambda == 1 ? "kirkman" : "kframe";
        return "gdd";
    }
    throw ParseFailure("cannot infer a design kind for " + path + "; pass --kind");
}

struct VerifyOutcome {
    ValidityReport report;
    json parameters;
};

json room_parameters(const room::RoomArray& a) {
    json p;
    p["u"] = a.partition.size();
    int t = a.partition.empty() ? 0 : static_cast<int>(a.partition[0].size());
    for (const auto& hole : a.partition)
        if (static_cast<int>(hole.size()) != t) t = -1;  // nonuniform
    p["t"] = t >= 0 ? json(t) : json(nullptr);
    p["k"] = nullptr;
    p["lambda"] = nullptr;
    return p;
}

json design_parameters(const designs::BlockDesign& d, std::optional<int> k, std::optional<int> t,
                       std::optional<int> u) {
    json p;
    p["t"] = t ? json(*t) : json(nullptr);
    p["u"] = u ? json(*u) : json(nullptr);
    p["k"] = k ? json(*k) : json(nullptr);
    p["lambda"] = d.lambda;
    return p;
}

VerifyOutcome verify_file(const std::string& kind, const std::string& text) {
    VerifyOutcome out;
    if (kind == "square") {
        auto a = io::read_room(text);
        out.report = room::verify_room_square(a);
        out.parameters = room_parameters(a);
    } else if (kind == "frame") {
        auto a = io::read_room(text);
        out.report = room::verify_room_frame(a);
        out.parameters = room_parameters(a);
    } else if (kind == "kirkman" || kind == "kframe") {
        auto file = io::read_bd(text);
        if (!file.resolved) throw ParseFailure("the file carries no resolution; verify as a gdd instead");
        int k = kind == "kirkman" ? 3 : file.resolved->block_size;
        int lambda = kind == "kirkman" ? 1 : file.design.lambda;
        out.report = designs::verify_k_frame(*file.resolved, k, lambda);
        std::optional<int> t, u;
        if (!file.resolved->fully_resolvable()) {
            u = static_cast<int>(file.resolved->holes.size());
            t = static_cast<int>(file.resolved->holes[0].size());
            for (const auto& hole : file.resolved->holes)
                if (static_cast<int>(hole.size()) != *t) t.reset();
        }
        auto d = file.design;
        d.lambda = lambda;
        out.parameters = design_parameters(d, k, t, u);
    } else if (kind == "gdd") {
        auto file = io::read_bd(text);
        out.report = designs::verify_gdd(file.design);
        std::optional<int> u;
        if (file.design.groups) u = static_cast<int>(file.design.groups->size());
        out.parameters = design_parameters(file.design, std::nullopt, std::nullopt, u);
    } else if (kind == "starter") {
        auto file = io::read_starter(text);
        if (file.quad) {
            // The quadruple's only validity oracle is its development.
            try {
                auto frame = starters::develop_intransitive(*file.quad);
                out.report = room::verify_room_frame(frame);
            } catch (const std::invalid_argument& e) {
                out.report.add("intransitive-starter", "quadruple", e.what());
            }
            out.parameters["t"] = 2;
            out.parameters["u"] = (file.quad->modulus + 2) / 2;
            out.parameters["k"] = nullptr;
            out.parameters["lambda"] = nullptr;
        } else {
            out.report = starters::verify_frame_starter(*file.s1);
            if (file.s2) {
                out.report.merge(starters::verify_frame_starter(*file.s2));
                if (out.report.valid()) {
                    try {
                        starters::pair_starters(*file.s1, *file.s2);
                    } catch (const std::invalid_argument& e) {
                        out.report.add("orthogonality", "starter pair", e.what());
                    }
                }
            }
            int order = file.s1->group.order();
            int t = file.s1->subgroup.order();
            out.parameters["t"] = t;
            out.parameters["u"] = order / t;
            out.parameters["k"] = nullptr;
            out.parameters["lambda"] = nullptr;
        }
    } else {
        throw ParseFailure("unknown kind: " + kind);
    }
    return out;
}

int cmd_verify(const std::string& path, std::string kind, bool as_json) {
    const std::string text = read_file(path);
    if (kind.empty()) kind = infer_kind(path, text);
    auto outcome = verify_file(kind, text);
    if (as_json) {
        json j;
        j["valid"] = outcome.report.valid();
        j["kind"] = kind;
        j["parameters"] = outcome.parameters;
        j["violations"] = json::array();
        for (const auto& v : outcome.report.violations)
            j["violations"].push_back({{"kind", v.kind}, {"location", v.location}, {"detail", v.detail}});
        std::cout << j.dump(2) << "\n";
    } else if (outcome.report.valid()) {
        std::cout << path << ": valid " << kind << "\n";
    } else {
        std::cout << path << ": INVALID " << kind << "\n" << outcome.report.summary() << "\n";
    }
    return outcome.report.valid() ? kExitValid : kExitInvalid;
}

void trace(bool enabled, const std::string& line) {
    if (enabled) std::cerr << "trace: " << line << "\n";
}

room::RoomArray room_in(const std::string& path) { return io::read_room(read_file(path)); }

// Relabels a standardized square onto a frame hole's symbols plus extras.
room::RoomArray fit_square(const room::RoomArray& square, const std::vector<std::string>& tokens,
                           const std::string& x) {
    std::map<std::string, std::string> names;
    for (int i = 0; i < square.side(); ++i) names[square.symbols[i]] = tokens[i];
    names[*square.square_symbol] = x;
    return room::relabel(square, names);
}

algebra::FiniteAbelianGroup parse_group(const std::string& spec) {
    std::vector<int> orders;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, 'x')) orders.push_back(std::stoi(part));
    return algebra::FiniteAbelianGroup(orders);
}

algebra::Subgroup parse_hole(const algebra::FiniteAbelianGroup& group, const std::string& spec) {
    std::set<algebra::GroupElement> members;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ';')) members.insert(group.parse_element(part));
    return algebra::subgroup_from(group, members);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framekit: Room squares, Room frames, and Kirkman frames"};
    app.require_subcommand(1);

    // verify -------------------------------------------------------------
    std::string verify_path, verify_kind;
    bool verify_json = false;
    auto* verify = app.add_subcommand("verify", "Verify a design file");
    verify->add_option("path", verify_path, "design file")->required();
    verify->add_option("--kind", verify_kind, "square|frame|kirkman|kframe|gdd|starter")
        ->check(CLI::IsMember({"square", "frame", "kirkman", "kframe", "gdd", "starter"}));
    verify->add_flag("--json", verify_json, "machine-readable report");

    // construct ----------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "Run a construction and write the result");
    construct->require_subcommand(1);
    std::string c_in, c_out, c_starter, c_point, c_extra = "oo", c_square = "x";
    std::vector<std::string> c_ingredients, c_new_points;
    int c_s = 0, c_w = 0, c_keep = 0;
    bool c_trace = false;
    construct->add_flag("--trace", c_trace, "print the construction ledger to stderr");

    auto* develop = construct->add_subcommand("develop", "Develop a starter file into a Room frame");
    develop->add_option("--starter", c_starter, "starter file")->required();
    develop->add_option("--out", c_out, "output file")->required();

    auto* dbl = construct->add_subcommand("double", "Double a skew Room square into a 2^n frame");
    dbl->add_option("--in", c_in, "skew Room square file")->required();
    dbl->add_option("--out", c_out, "output file")->required();

    auto* inflate = construct->add_subcommand("inflate", "Inflate a Room frame by MOLS of order s");
    inflate->add_option("--in", c_in, "Room frame file")->required();
    inflate->add_option("--s", c_s, "inflation factor")->required();
    inflate->add_option("--out", c_out, "output file")->required();

    auto* fill = construct->add_subcommand("fill", "Fill a frame's holes with Room squares");
    fill->add_option("--in", c_in, "Room frame file")->required();
    fill->add_option("--ingredient", c_ingredients,
                     "Room square per hole, in hole order; one file used for every hole when "
                     "a single file is given")
        ->required();
    fill->add_option("--extra", c_extra, "fresh extra symbol (w = 1)");
    fill->add_option("--keep", c_keep, "hole index keeping its subsquare");
    fill->add_option("--out", c_out, "output file")->required();

    auto* gddw = construct->add_subcommand("gdd-weight", "Weight a GDD or PBD into a Kirkman frame");
    gddw->add_option("--in", c_in, "bd file (GDD or PBD)")->required();
    gddw->add_option("--w", c_w, "weight (even)")->required();
    gddw->add_option("--out", c_out, "output file")->required();

    auto* k2f = construct->add_subcommand("kts2frame", "Delete a point of a KTS");
    k2f->add_option("--in", c_in, "resolved bd file")->required();
    k2f->add_option("--point", c_point, "point to delete")->required();
    k2f->add_option("--out", c_out, "output file")->required();

    auto* f2k = construct->add_subcommand("frame2kts", "Adjoin a point to a 2^r Kirkman frame");
    f2k->add_option("--in", c_in, "resolved bd file")->required();
    f2k->add_option("--point", c_point, "new point name")->required();
    f2k->add_option("--out", c_out, "output file")->required();

    auto* complete = construct->add_subcommand("complete", "Complete a KTS into a PBD");
    complete->add_option("--in", c_in, "resolved bd file")->required();
    complete->add_option("--new-point", c_new_points, "names for the added points (optional)");
    complete->add_option("--out", c_out, "output file")->required();

    auto* iols = construct->add_subcommand("iols2kirkman", "4^4 Kirkman frame from an IOLS(6;2) pair");
    iols->add_option("--in", c_in, "latin file")->required();
    iols->add_option("--out", c_out, "output file")->required();

    // --trace is declared on `construct`; let it appear after the verb too.
    for (auto* sub : construct->get_subcommands(nullptr)) sub->fallthrough();

    // search-starter -------------------------------------------------------
    std::string ss_group, ss_hole = "0", ss_out;
    std::uint64_t ss_seed = 0;
    bool ss_skew = false;
    auto* search_cmd = app.add_subcommand("search-starter", "Hill-climb an orthogonal starter pair");
    search_cmd->add_option("--group", ss_group, "group orders, e.g. 10 or 4x4")->required();
    search_cmd->add_option("--hole", ss_hole, "subgroup elements separated by ';' (default identity)");
    search_cmd->add_flag("--skew", ss_skew, "require skew-orthogonality");
    search_cmd->add_option("--seed", ss_seed, "search seed");
    search_cmd->add_option("--out", ss_out, "starter file to write");

    // make-room-square -----------------------------------------------------
    int mrs_side = 0;
    std::uint64_t mrs_seed = 0;
    std::string mrs_out;
    auto* mrs = app.add_subcommand("make-room-square", "Search for a Room square of odd side n");
    mrs->add_option("--side", mrs_side, "odd side")->required();
    mrs->add_option("--seed", mrs_seed, "search seed");
    mrs->add_option("--out", mrs_out, "room file to write");

    // conformance ------------------------------------------------------------
    std::string conf_filter, conf_fixtures = "fixtures";
    auto* conf = app.add_subcommand("conformance", "Run the fixture corpus and acceptance criteria");
    conf->add_option("--filter", conf_filter, "only rows whose id contains this string");
    conf->add_option("--fixtures", conf_fixtures, "fixture directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return cmd_verify(verify_path, verify_kind, verify_json);

        if (*construct) {
            if (*develop) {
                auto file = io::read_starter(read_file(c_starter));
                room::RoomArray frame = [&] {
                    if (file.quad) {
                        trace(c_trace, "intransitive starter development over Z_" +
                                           std::to_string(file.quad->modulus) + " + 2 fixed symbols");
                        return starters::develop_intransitive(*file.quad);
                    }
                    if (!file.s1 || !file.s2) throw ParseFailure("develop needs a starter pair or a quadruple");
                    auto pair = starters::pair_starters(*file.s1, *file.s2);
                    trace(c_trace, std::string("orthogonal starter pair development, skew = ") +
                                       (starters::is_skew_orthogonal(pair) ? "yes" : "no"));
                    return starters::develop(pair);
                }();
                auto report = room::verify_room_frame(frame);
                if (!report.valid()) throw std::runtime_error("development failed to verify:\n" + report.summary());
                write_file(c_out, io::write_room(frame));
            } else if (*dbl) {
                auto square = room_in(c_in);
                trace(c_trace, "doubling a skew square of side " + std::to_string(square.side()) +
                                   " with the cyclic idempotent self-orthogonal square");
                auto frame = build::double_square(square, latin::sols_diagonal(square.side()).first);
                write_file(c_out, io::write_room(frame));
            } else if (*inflate) {
                auto frame = room_in(c_in);
                trace(c_trace, "inflating by a MOLS pair of order " + std::to_string(c_s));
                write_file(c_out, io::write_room(build::inflate(frame, c_s)));
            } else if (*fill) {
                auto frame = room_in(c_in);
                std::vector<room::RoomArray> ingredients;
                if (c_ingredients.size() == 1) {
                    // One standardized square reused for every hole.
                    auto base = room_in(c_ingredients[0]);
                    for (const auto& hole : frame.partition) {
                        if (base.side() != static_cast<int>(hole.size()) + 1)
                            throw ParseFailure("the shared ingredient must have side (hole size + 1) = " +
                                               std::to_string(hole.size() + 1) + ", got " +
                                               std::to_string(base.side()));
                        std::vector<std::string> tokens;
                        for (int s : hole) tokens.push_back(frame.symbols[s]);
                        tokens.push_back(c_extra);
                        ingredients.push_back(fit_square(base, tokens, c_square));
                    }
                    trace(c_trace, "filling " + std::to_string(frame.partition.size()) +
                                       " holes with relabeled copies of " + c_ingredients[0]);
                } else {
                    for (const auto& path : c_ingredients) ingredients.push_back(room_in(path));
                    trace(c_trace, "filling with " + std::to_string(ingredients.size()) + " ingredient squares");
                }
                write_file(c_out, io::write_room(build::fill_frame(frame, {c_extra}, ingredients, c_keep)));
            } else if (*gddw) {
                auto file = io::read_bd(read_file(c_in));
                if (c_w != 2) throw ParseFailure("only w = 2 is supported: the bundled template is the 2^4 frame");
                std::map<int, designs::ResolvedBlockDesign> templates{
                    {4, designs::kts_to_frame(designs::kts9(), "0")}};
                trace(c_trace, "weighting by w = " + std::to_string(c_w) +
                                   " with the KTS(9)-derived 2^4 template for blocks of size 4");
                auto frame = designs::gdd_weight_construction(file.design, c_w, templates);
                write_file(c_out, io::write_bd(frame));
            } else if (*k2f) {
                auto file = io::read_bd(read_file(c_in));
                if (!file.resolved) throw ParseFailure("kts2frame needs a resolved design");
                trace(c_trace, "deleting point " + c_point);
                write_file(c_out, io::write_bd(designs::kts_to_frame(*file.resolved, c_point)));
            } else if (*f2k) {
                auto file = io::read_bd(read_file(c_in));
                if (!file.resolved) throw ParseFailure("frame2kts needs a resolved design");
                trace(c_trace, "adjoining point " + c_point);
                write_file(c_out, io::write_bd(designs::frame_to_kts(*file.resolved, c_point)));
            } else if (*complete) {
                auto file = io::read_bd(read_file(c_in));
                if (!file.resolved) throw ParseFailure("complete needs a resolved design");
                trace(c_trace, "adding one point per parallel class plus the block of new points");
                write_file(c_out, io::write_bd(designs::kts_to_completed(*file.resolved, c_new_points)));
            } else if (*iols) {
                auto pair = io::read_latin(read_file(c_in)).as_incomplete_pair();
                trace(c_trace, "one block per filled cell, then deleting the hole rows, columns and symbols");
                auto frame = designs::kirkman_4_4_from_iols(pair);
                auto report = designs::verify_k_frame(frame, 3, 1);
                if (!report.valid()) throw std::runtime_error("4^4 frame failed to verify:\n" + report.summary());
                write_file(c_out, io::write_bd(frame));
            }
            return kExitValid;
        }

        if (*search_cmd) {
            auto group = parse_group(ss_group);
            auto hole = parse_hole(group, ss_hole);
            search::SearchConfig cfg;
            cfg.seed = ss_seed;
            cfg.skew_required = ss_skew;
            auto result = search::hillclimb_starter_pair(group, hole, cfg);
            if (!result.success()) {
                std::cout << "no pair found: " << result.failure.reason << " after "
                          << result.failure.iterations << " iterations\n";
                return kExitInvalid;
            }
            std::string text = io::write_starter(result.pair->s1, result.pair->s2);
            if (ss_out.empty())
                std::cout << text;
            else
                write_file(ss_out, text);
            return kExitValid;
        }

        if (*mrs) {
            search::SearchConfig cfg;
            cfg.seed = mrs_seed;
            auto square = search::find_room_square(mrs_side, cfg);
            std::string text = io::write_room(square);
            if (mrs_out.empty())
                std::cout << text;
            else
                write_file(mrs_out, text);
            return kExitValid;
        }

        if (*conf) {
            auto rows = conformance::run(conf_fixtures, conf_filter);
            std::cout << conformance::format_table(rows);
            bool ok = conformance::all_passed(rows);
            std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (" << rows.size() << " rows)\n";
            return ok ? kExitValid : kExitInvalid;
        }
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitParse;
}

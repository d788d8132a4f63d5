#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "framekit/designs.hpp"
#include "framekit/io.hpp"
#include "framekit/latin.hpp"
#include "framekit/room.hpp"
#include "framekit/room_build.hpp"
#include "framekit/search.hpp"
#include "framekit/starter.hpp"

namespace py = pybind11;
using namespace framekit;

namespace {

algebra::FiniteAbelianGroup make_group(const std::vector<int>& orders) {
    return algebra::FiniteAbelianGroup(orders);
}

algebra::Subgroup make_subgroup(const algebra::FiniteAbelianGroup& group,
                                const std::vector<std::string>& members) {
    std::set<algebra::GroupElement> set;
    for (const auto& text : members) set.insert(group.parse_element(text));
    return algebra::subgroup_from(group, set);
}

py::list violations_list(const ValidityReport& report) {
    py::list out;
    for (const auto& v : report.violations) {
        py::dict d;
        d["kind"] = v.kind;
        d["location"] = v.location;
        d["detail"] = v.detail;
        out.append(d);
    }
    return out;
}

search::SearchConfig make_config(std::uint64_t seed, std::uint64_t max_iterations, int restarts,
                                 bool skew, std::optional<double> time_budget) {
    search::SearchConfig cfg;
    cfg.seed = seed;
    cfg.max_iterations = max_iterations;
    cfg.restarts = restarts;
    cfg.skew_required = skew;
    cfg.time_budget_seconds = time_budget;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_framekit, m) {
    m.doc() = "Room squares, Room frames, and Kirkman frames";

    py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<search::NonexistentError>(m, "NonexistentError", PyExc_ValueError);
    py::register_exception<search::BudgetExhaustedError>(m, "BudgetExhaustedError", PyExc_RuntimeError);

    // Room arrays -----------------------------------------------------------
    py::class_<room::RoomArray>(m, "RoomArray")
        .def_readonly("symbols", &room::RoomArray::symbols)
        .def_readonly("square_symbol", &room::RoomArray::square_symbol)
        .def_readonly("partition", &room::RoomArray::partition)
        .def_property_readonly("side", &room::RoomArray::side)
        .def("filled_count", &room::RoomArray::filled_count)
        .def(
            "at",
            [](const room::RoomArray& a, int r, int c) -> py::object {
                const auto& cell = a.at(r, c);
                if (!cell) return py::none();
                return py::make_tuple(a.token(cell->first), a.token(cell->second));
            },
            py::arg("row"), py::arg("col"), "Cell content as a token pair, or None")
        .def("__repr__", [](const room::RoomArray& a) {
            return "<RoomArray side=" + std::to_string(a.side()) + " holes=" +
                   std::to_string(a.partition.size()) + ">";
        });

    m.def("read_room", &io::read_room, py::arg("text"));
    m.def("write_room", &io::write_room, py::arg("array"));
    m.def("verify_room_square",
          [](const room::RoomArray& a) { return violations_list(room::verify_room_square(a)); });
    m.def("verify_room_frame",
          [](const room::RoomArray& a) { return violations_list(room::verify_room_frame(a)); });
    m.def("is_skew", [](const room::RoomArray& a) { return room::is_skew(a).skew; });
    m.def("standardize", &room::standardize, py::arg("square"), py::arg("symbol"));
    m.def("square_to_frame", &room::square_to_frame, py::arg("square"), py::arg("symbol"));
    m.def("frame_to_square", &room::frame_to_square, py::arg("frame"), py::arg("symbol"));
    m.def("relabel", &room::relabel, py::arg("array"), py::arg("names"));
    m.def("cells_identical", &room::cells_identical);

    // Starters ---------------------------------------------------------------
    m.def(
        "develop_starter",
        [](const std::string& text) {
            auto file = io::read_starter(text);
            if (file.quad) return starters::develop_intransitive(*file.quad);
            if (!file.s1 || !file.s2)
                throw std::invalid_argument("development needs a starter pair or a quadruple");
            return starters::develop(starters::pair_starters(*file.s1, *file.s2));
        },
        py::arg("starter_text"), "Develops a starter file (pair or quadruple) into a Room frame");
    m.def(
        "starter_is_skew",
        [](const std::string& text) {
            auto file = io::read_starter(text);
            if (!file.s1 || !file.s2) throw std::invalid_argument("needs a starter pair");
            return starters::is_skew_orthogonal(starters::pair_starters(*file.s1, *file.s2));
        },
        py::arg("starter_text"));

    // Constructions ------------------------------------------------------------
    m.def(
        "double_square",
        [](const room::RoomArray& square, const std::string& prime_suffix) {
            return build::double_square(square, latin::sols_diagonal(square.side()).first, prime_suffix);
        },
        py::arg("square"), py::arg("prime_suffix") = "'",
        "Doubles a skew Room square into a Room frame of type 2^n");
    m.def(
        "inflate", [](const room::RoomArray& frame, int s) { return build::inflate(frame, s); },
        py::arg("frame"), py::arg("s"));
    m.def("fill_frame", &build::fill_frame, py::arg("frame"), py::arg("extra"), py::arg("ingredients"),
          py::arg("keep_index") = 0);

    // Block designs --------------------------------------------------------------
    py::class_<designs::BlockDesign>(m, "BlockDesign")
        .def_readonly("points", &designs::BlockDesign::points)
        .def_readonly("blocks", &designs::BlockDesign::blocks)
        .def_readonly("lambda_", &designs::BlockDesign::lambda)
        .def("__repr__", [](const designs::BlockDesign& d) {
            return "<BlockDesign points=" + std::to_string(d.points.size()) + " blocks=" +
                   std::to_string(d.blocks.size()) + ">";
        });
    py::class_<designs::ResolvedBlockDesign>(m, "ResolvedBlockDesign")
        .def_readonly("design", &designs::ResolvedBlockDesign::design)
        .def_readonly("holes", &designs::ResolvedBlockDesign::holes)
        .def_readonly("block_size", &designs::ResolvedBlockDesign::block_size)
        .def_property_readonly("class_count",
                               [](const designs::ResolvedBlockDesign& d) { return d.classes.size(); })
        .def("fully_resolvable", &designs::ResolvedBlockDesign::fully_resolvable);

    m.def(
        "read_bd",
        [](const std::string& text) -> py::object {
            auto file = io::read_bd(text);
            if (file.resolved) return py::cast(*file.resolved);
            return py::cast(file.design);
        },
        py::arg("text"), "Parses a bd file into a BlockDesign or a ResolvedBlockDesign");
    m.def("write_bd", py::overload_cast<const designs::BlockDesign&>(&io::write_bd));
    m.def("write_bd", py::overload_cast<const designs::ResolvedBlockDesign&>(&io::write_bd));
    m.def("verify_gdd",
          [](const designs::BlockDesign& d) { return violations_list(designs::verify_gdd(d)); });
    m.def(
        "verify_k_frame",
        [](const designs::ResolvedBlockDesign& d, int k, int lambda) {
            return violations_list(designs::verify_k_frame(d, k, lambda));
        },
        py::arg("design"), py::arg("k") = 3, py::arg("lambda_") = 1);
    m.def("kts_to_frame", &designs::kts_to_frame, py::arg("kts"), py::arg("point"));
    m.def("frame_to_kts", &designs::frame_to_kts, py::arg("frame"), py::arg("infinity"));
    m.def("kts_to_completed", &designs::kts_to_completed, py::arg("kts"),
          py::arg("new_points") = std::vector<std::string>{});
    m.def("completed_to_kts", &designs::completed_to_kts, py::arg("design"), py::arg("new_points"));
    m.def("gdd_from_bibd", &designs::gdd_from_bibd, py::arg("design"), py::arg("point"));
    m.def(
        "gdd_weight_construction",
        [](const designs::BlockDesign& design, int w,
           const std::map<int, designs::ResolvedBlockDesign>& templates) {
            return designs::gdd_weight_construction(design, w, templates);
        },
        py::arg("design"), py::arg("w"), py::arg("templates"));
    m.def("bibd_13_4", &designs::bibd_13_4);
    m.def("kts9", &designs::kts9);
    m.def("near_resolvable_7_3_2", &designs::near_resolvable_7_3_2);
    m.def("round_robin", &designs::round_robin, py::arg("n"));
    m.def(
        "kirkman_4_4_from_iols",
        [](const std::string& latin_text) {
            return designs::kirkman_4_4_from_iols(io::read_latin(latin_text).as_incomplete_pair());
        },
        py::arg("latin_text"));

    // Search -------------------------------------------------------------------
    m.def(
        "find_room_square",
        [](int n, std::uint64_t seed, std::uint64_t max_iterations, int restarts,
           std::optional<double> time_budget, const std::string& square_symbol) {
            return search::find_room_square(
                n, make_config(seed, max_iterations, restarts, false, time_budget), square_symbol);
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("max_iterations") = 1'000'000,
        py::arg("restarts") = 32, py::arg("time_budget_seconds") = py::none(),
        py::arg("square_symbol") = "oo");
    m.def(
        "search_starter",
        [](const std::vector<int>& orders, const std::vector<std::string>& hole, bool skew,
           std::uint64_t seed, std::uint64_t max_iterations, int restarts,
           std::optional<double> time_budget) -> py::object {
            auto group = make_group(orders);
            auto subgroup = make_subgroup(group, hole);
            auto result = search::hillclimb_starter_pair(
                group, subgroup, make_config(seed, max_iterations, restarts, skew, time_budget));
            if (!result.success()) return py::none();
            return py::cast(io::write_starter(result.pair->s1, result.pair->s2));
        },
        py::arg("orders"), py::arg("hole") = std::vector<std::string>{}, py::arg("skew") = false,
        py::arg("seed") = 0, py::arg("max_iterations") = 1'000'000, py::arg("restarts") = 32,
        py::arg("time_budget_seconds") = py::none(),
        "Hill-climbs an orthogonal starter pair; returns the starter file text or None");
}

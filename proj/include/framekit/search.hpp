#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "framekit/room.hpp"
#include "framekit/starter.hpp"

namespace framekit::search {

struct SearchConfig {
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 1'000'000;  // per restart
    int restarts = 32;
    bool skew_required = false;
    std::optional<double> time_budget_seconds;
};

struct SearchFailure {
    std::uint64_t iterations = 0;  // total across restarts
    int restarts = 0;
    std::string reason;
};

struct StarterSearchResult {
    std::optional<starters::OrthogonalStarterPair> pair;
    SearchFailure failure;  // meaningful when !pair

    bool success() const { return pair.has_value(); }
};

/// Thrown when the requested object provably does not exist.
struct NonexistentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when the search budget runs out without a verified result.
struct BudgetExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Randomized hill-climb for an orthogonal (optionally skew-orthogonal)
/// pair of frame starters in G \ H. Deterministic per (seed, restart
/// index); every success passes pair_starters and, when requested,
/// is_skew_orthogonal before being returned. Throws std::invalid_argument
/// when |G \ H| is odd.
StarterSearchResult hillclimb_starter_pair(const algebra::FiniteAbelianGroup& group,
                                           const algebra::Subgroup& subgroup, const SearchConfig& config);

/// Room square of odd side n via a starter-pair hill-climb in Z_n.
/// Throws NonexistentError for n even or n in {3, 5}, BudgetExhaustedError
/// when the budget runs out. The fresh square symbol defaults to "oo".
room::RoomArray find_room_square(int n, const SearchConfig& config = {}, const std::string& square_symbol = "oo");

/// Budget-controlled re-export of the exhaustive starter enumeration.
std::vector<starters::FrameStarter> exhaustive_frame_starters(const algebra::FiniteAbelianGroup& group,
                                                              const algebra::Subgroup& subgroup, int bound = 16);

}  // namespace framekit::search

#include "framekit/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <vector>

namespace framekit::search {

using algebra::FiniteAbelianGroup;
using algebra::GroupElement;
using algebra::Subgroup;
using starters::FrameStarter;
using starters::OrthogonalStarterPair;

namespace {

// Index-arithmetic tables so the inner loop never touches GroupElement.
struct Tables {
    int order = 0;
    std::vector<int> add;   // order x order
    std::vector<int> neg;
    std::vector<bool> in_h;

    int sum(int a, int b) const { return add[a * order + b]; }
    int diff(int a, int b) const { return add[a * order + neg[b]]; }
};

Tables make_tables(const FiniteAbelianGroup& g, const Subgroup& h) {
    Tables t;
    t.order = g.order();
    auto elems = g.elements();
    t.add.resize(t.order * t.order);
    t.neg.resize(t.order);
    t.in_h.resize(t.order);
    for (int a = 0; a < t.order; ++a) {
        t.neg[a] = g.index_of(g.negate(elems[a]));
        t.in_h[a] = h.contains(elems[a]);
        for (int b = 0; b < t.order; ++b) t.add[a * t.order + b] = g.index_of(g.add(elems[a], elems[b]));
    }
    return t;
}

// One +-difference class: representative d with pair candidates {x, x+d}.
struct DiffClass {
    int d = 0;
    std::vector<int> candidates;  // valid x (both x and x+d outside H)
};

// Hill-climb state: per class, the chosen S1 pair {x, x+d}, S2 pair
// {u, u+d} and the adder t = x - u, or -1 when unresolved. The element and
// adder owner maps enforce the partition conditions at every step.
struct State {
    std::vector<int> p1, p2, adder;   // per class
    std::vector<int> own1, own2, own_t;  // element / adder -> class or -1
    std::vector<int> unresolved;      // class indices, unordered
    std::vector<int> where;           // class -> position in unresolved, or -1
};

void unresolve(State& st, const Tables& t, const std::vector<DiffClass>& classes, int k) {
    if (st.where[k] != -1) return;
    int x = st.p1[k];
    int u = st.p2[k];
    int d = classes[k].d;
    st.own1[x] = st.own1[t.sum(x, d)] = -1;
    st.own2[u] = st.own2[t.sum(u, d)] = -1;
    st.own_t[st.adder[k]] = -1;
    st.p1[k] = st.p2[k] = st.adder[k] = -1;
    st.where[k] = static_cast<int>(st.unresolved.size());
    st.unresolved.push_back(k);
}

}  // namespace

// Climb for S1 alone with all pair sums distinct and outside H; then
// S2 = -S1 pairs orthogonally with adders equal to the sums. Two light
// constraint systems instead of three coupled ones, so this closes fast,
// but such an S1 does not exist in every group (order 9, for one).
bool climb_strong(const Tables& t, const std::vector<DiffClass>& classes, bool skew, std::mt19937_64& rng,
                  std::uint64_t max_iterations, std::uint64_t& total_iterations, std::vector<int>& out_p1) {
    int n_classes = static_cast<int>(classes.size());
    std::vector<int> p1(n_classes, -1);
    std::vector<int> own_e(t.order, -1), own_s(t.order, -1);
    std::vector<int> unresolved, where(n_classes, -1);
    for (int k = 0; k < n_classes; ++k) {
        where[k] = k;
        unresolved.push_back(k);
    }
    auto unres = [&](int k) {
        if (where[k] != -1) return;
        int x = p1[k];
        int y = t.sum(x, classes[k].d);
        int s = t.sum(x, y);
        own_e[x] = own_e[y] = -1;
        if (own_s[s] == k) own_s[s] = -1;
        if (skew && own_s[t.neg[s]] == k) own_s[t.neg[s]] = -1;
        p1[k] = -1;
        where[k] = static_cast<int>(unresolved.size());
        unresolved.push_back(k);
    };

    // Abandon the restart once the best unresolved count stops improving;
    // a genuinely converging run improves far more often than this.
    std::uint64_t stall_window = std::max<std::uint64_t>(max_iterations / 4, 1024);
    std::size_t best_unresolved = unresolved.size();
    std::uint64_t last_improvement = 0;
    for (std::uint64_t it = 0; it < max_iterations && !unresolved.empty(); ++it) {
        ++total_iterations;
        if (unresolved.size() < best_unresolved) {
            best_unresolved = unresolved.size();
            last_improvement = it;
        }
        if (it - last_improvement > stall_window) break;
        int k = unresolved[rng() % unresolved.size()];
        const auto& cand = classes[k].candidates;
        int d = classes[k].d;
        int best_x = -1, best_cost = 9;
        for (int trial = 0; trial < 8; ++trial) {
            int x = cand[rng() % cand.size()];
            int y = t.sum(x, d);
            int s = t.sum(x, y);
            if (t.in_h[s]) continue;
            if (skew && s == t.neg[s]) continue;
            int cost = 0;
            for (int owner : {own_e[x], own_e[y], own_s[s], skew ? own_s[t.neg[s]] : -1})
                if (owner != -1 && owner != k) ++cost;
            if (cost < best_cost) {
                best_cost = cost;
                best_x = x;
                if (cost == 0) break;
            }
        }
        if (best_x == -1) continue;
        int x = best_x;
        int y = t.sum(x, d);
        int s = t.sum(x, y);
        for (int owner : {own_e[x], own_e[y], own_s[s], skew ? own_s[t.neg[s]] : -1})
            if (owner != -1 && owner != k) unres(owner);
        p1[k] = x;
        own_e[x] = own_e[y] = k;
        own_s[s] = k;
        if (skew) own_s[t.neg[s]] = k;
        int pos = where[k];
        where[unresolved.back()] = pos;
        std::swap(unresolved[pos], unresolved.back());
        unresolved.pop_back();
        where[k] = -1;
    }
    if (!unresolved.empty()) return false;
    out_p1 = std::move(p1);
    return true;
}

// Climb directly on the (S1, S2, adder) triple. Slower to close than the
// strong variant but covers groups without a strong starter.
bool climb_pair(const Tables& t, const std::vector<DiffClass>& classes, bool skew, std::mt19937_64& rng,
                std::uint64_t max_iterations, std::uint64_t& total_iterations, std::vector<int>& out_p1,
                std::vector<int>& out_p2) {
    int n_classes = static_cast<int>(classes.size());
    State st;
    st.p1.assign(n_classes, -1);
    st.p2.assign(n_classes, -1);
    st.adder.assign(n_classes, -1);
    st.own1.assign(t.order, -1);
    st.own2.assign(t.order, -1);
    st.own_t.assign(t.order, -1);
    st.where.assign(n_classes, -1);
    for (int k = 0; k < n_classes; ++k) {
        st.where[k] = k;
        st.unresolved.push_back(k);
    }

    // Same stall rule as the strong climb.
    std::uint64_t stall_window = std::max<std::uint64_t>(max_iterations / 4, 1024);
    std::size_t best_unresolved = st.unresolved.size();
    std::uint64_t last_improvement = 0;
    for (std::uint64_t it = 0; it < max_iterations && !st.unresolved.empty(); ++it) {
        ++total_iterations;
        if (st.unresolved.size() < best_unresolved) {
            best_unresolved = st.unresolved.size();
            last_improvement = it;
        }
        if (it - last_improvement > stall_window) break;
        int k = st.unresolved[rng() % st.unresolved.size()];
        const auto& cand = classes[k].candidates;
        int d = classes[k].d;

        // Sample a handful of proposals and keep the least destructive
        // one; pure random acceptance thrashes once the group grows.
        int best_x = -1, best_u = -1, best_adder = -1, best_cost = 7;
        for (int trial = 0; trial < 8; ++trial) {
            int x = cand[rng() % cand.size()];
            int u = cand[rng() % cand.size()];
            int adder = t.diff(x, u);
            if (t.in_h[adder]) continue;
            if (skew && adder == t.neg[adder]) continue;
            int y = t.sum(x, d);
            int v = t.sum(u, d);
            int cost = 0;
            for (int owner : {st.own1[x], st.own1[y], st.own2[u], st.own2[v], st.own_t[adder],
                              skew ? st.own_t[t.neg[adder]] : -1})
                if (owner != -1 && owner != k) ++cost;
            if (cost < best_cost) {
                best_cost = cost;
                best_x = x;
                best_u = u;
                best_adder = adder;
                if (cost == 0) break;
            }
        }
        if (best_x == -1) continue;  // resample next iteration

        int x = best_x;
        int u = best_u;
        int adder = best_adder;
        int y = t.sum(x, d);
        int v = t.sum(u, d);
        // Evict every class in conflict with the chosen assignment.
        for (int owner : {st.own1[x], st.own1[y], st.own2[u], st.own2[v], st.own_t[adder],
                          skew ? st.own_t[t.neg[adder]] : -1})
            if (owner != -1 && owner != k) unresolve(st, t, classes, owner);

        st.p1[k] = x;
        st.p2[k] = u;
        st.adder[k] = adder;
        st.own1[x] = st.own1[y] = k;
        st.own2[u] = st.own2[v] = k;
        st.own_t[adder] = k;
        int pos = st.where[k];
        st.where[st.unresolved.back()] = pos;
        std::swap(st.unresolved[pos], st.unresolved.back());
        st.unresolved.pop_back();
        st.where[k] = -1;
    }
    if (!st.unresolved.empty()) return false;
    out_p1 = std::move(st.p1);
    out_p2 = std::move(st.p2);
    return true;
}

StarterSearchResult hillclimb_starter_pair(const FiniteAbelianGroup& group, const Subgroup& subgroup,
                                           const SearchConfig& config) {
    int outside = group.order() - subgroup.order();
    if (outside % 2 != 0) throw std::invalid_argument("|G \\ H| is odd; no starter exists");

    Tables t = make_tables(group, subgroup);
    auto elems = group.elements();

    // Difference classes {d, -d} with d outside H; order-2 differences
    // cannot appear in a starter, so their presence dooms the class count.
    std::vector<DiffClass> classes;
    {
        std::vector<bool> seen(t.order, false);
        for (int d = 0; d < t.order; ++d) {
            if (t.in_h[d] || seen[d]) continue;
            seen[d] = seen[t.neg[d]] = true;
            if (d == t.neg[d]) return {std::nullopt, {0, 0, "order-2 difference class; no starter exists"}};
            DiffClass dc{d, {}};
            for (int x = 0; x < t.order; ++x)
                if (!t.in_h[x] && !t.in_h[t.sum(x, d)]) dc.candidates.push_back(x);
            if (dc.candidates.empty())
                return {std::nullopt, {0, 0, "difference class with no candidate pair"}};
            classes.push_back(std::move(dc));
        }
    }
    int n_classes = static_cast<int>(classes.size());
    if (n_classes != outside / 2)
        return {std::nullopt, {0, 0, "difference class count does not match the pair count"}};

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(
                        config.time_budget_seconds.value_or(1e9)));

    std::uint64_t total_iterations = 0;
    for (int restart = 0; restart < config.restarts; ++restart) {
        if (config.time_budget_seconds && std::chrono::steady_clock::now() > deadline)
            return {std::nullopt, {total_iterations, restart, "time budget exhausted"}};

        // Restart i depends only on (seed, i) so runs are reproducible and
        // restarts could be evaluated independently. Even restarts take the
        // strong route, odd restarts the direct pair route.
        std::mt19937_64 rng(config.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(restart) + 1);

        std::vector<int> p1, p2;
        bool solved;
        if (restart % 2 == 0) {
            solved = climb_strong(t, classes, config.skew_required, rng, config.max_iterations, total_iterations, p1);
            if (solved) {
                p2.resize(n_classes);
                // S2 = -S1: the pair {-y, -x} sits in the same difference
                // class; record it by its base element -y.
                for (int k = 0; k < n_classes; ++k) p2[k] = t.neg[t.sum(p1[k], classes[k].d)];
            }
        } else {
            solved = climb_pair(t, classes, config.skew_required, rng, config.max_iterations, total_iterations, p1, p2);
        }
        if (!solved) continue;

        FrameStarter s1{group, subgroup, {}};
        FrameStarter s2{group, subgroup, {}};
        for (int k = 0; k < n_classes; ++k) {
            int d = classes[k].d;
            s1.pairs.emplace_back(elems[p1[k]], elems[t.sum(p1[k], d)]);
            s2.pairs.emplace_back(elems[p2[k]], elems[t.sum(p2[k], d)]);
        }
        if (!starters::verify_frame_starter(s1).valid() || !starters::verify_frame_starter(s2).valid())
            continue;  // should not happen; never emit unverified results
        OrthogonalStarterPair pair = starters::pair_starters(s1, s2);
        if (config.skew_required && !starters::is_skew_orthogonal(pair)) continue;
        return {pair, {total_iterations, restart + 1, ""}};
    }
    return {std::nullopt, {total_iterations, config.restarts, "iteration budget exhausted"}};
}

room::RoomArray find_room_square(int n, const SearchConfig& config, const std::string& square_symbol) {
    if (n % 2 == 0 || n < 1) throw NonexistentError("a Room square of side " + std::to_string(n) + " requires an odd side");
    if (n == 3 || n == 5) throw NonexistentError("no Room square of side " + std::to_string(n) + " exists");
    FiniteAbelianGroup g({n});
    Subgroup h(g, {g.identity()});
    if (n == 1) {
        auto square = room::make_square({"0"}, square_symbol);
        square.set(0, 0, 1, 0);
        return square;
    }
    auto result = hillclimb_starter_pair(g, h, config);
    if (!result.success())
        throw BudgetExhaustedError("starter search failed after " + std::to_string(result.failure.iterations) +
                                   " iterations: " + result.failure.reason);
    auto frame = starters::develop(*result.pair);
    return room::frame_to_square(frame, square_symbol);
}

std::vector<starters::FrameStarter> exhaustive_frame_starters(const FiniteAbelianGroup& group,
                                                              const Subgroup& subgroup, int bound) {
    return starters::exhaustive_frame_starters(group, subgroup, bound);
}

}  // namespace framekit::search

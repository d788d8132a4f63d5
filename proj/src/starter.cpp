#include "framekit/starter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace framekit::starters {

namespace {

std::string pair_text(const GroupElement& a, const GroupElement& b) {
    return "{" + a.to_string() + ", " + b.to_string() + "}";
}

}  // namespace

ValidityReport verify_frame_starter(const FrameStarter& starter) {
    ValidityReport report;
    const auto& g = starter.group;
    const auto& h = starter.subgroup;

    int outside = g.order() - h.order();
    if (outside % 2 != 0) {
        report.add("starter-shape", "G\\H", "odd element count " + std::to_string(outside));
        return report;
    }
    if (static_cast<int>(starter.pairs.size()) != outside / 2) {
        report.add("starter-shape", "pairs",
                   "expected " + std::to_string(outside / 2) + " pairs, found " + std::to_string(starter.pairs.size()));
    }

    std::map<GroupElement, int> element_uses;
    std::map<GroupElement, int> difference_uses;
    for (const auto& [x, y] : starter.pairs) {
        if (!g.contains(x) || !g.contains(y)) {
            report.add("starter-element", pair_text(x, y), "element outside the group");
            continue;
        }
        if (x == y) {
            report.add("starter-element", pair_text(x, y), "repeated element in a pair");
            continue;
        }
        for (const auto& e : {x, y}) {
            if (h.contains(e)) report.add("starter-element", e.to_string(), "element lies in H");
            element_uses[e] += 1;
        }
        GroupElement d = g.subtract(y, x);
        difference_uses[d] += 1;
        difference_uses[g.negate(d)] += 1;
    }

    for (const auto& e : g.elements()) {
        if (h.contains(e)) {
            if (difference_uses.count(e))
                report.add("starter-difference", e.to_string(), "difference lies in H");
            continue;
        }
        int uses = element_uses.count(e) ? element_uses.at(e) : 0;
        if (uses != 1)
            report.add("starter-element", e.to_string(), "used " + std::to_string(uses) + " times, expected 1");
        int duses = difference_uses.count(e) ? difference_uses.at(e) : 0;
        if (duses != 1)
            report.add("starter-difference", e.to_string(),
                       "covered " + std::to_string(duses) + " times, expected 1");
    }
    return report;
}

OrthogonalStarterPair pair_starters(const FrameStarter& s1, const FrameStarter& s2) {
    if (!(s1.group == s2.group) || s1.subgroup.members() != s2.subgroup.members())
        throw std::invalid_argument("starters live over different groups");
    const auto& g = s1.group;
    if (s1.pairs.size() != s2.pairs.size()) throw std::invalid_argument("starters have different pair counts");

    // Difference-class key: the smaller of {d, -d} in canonical order. Valid
    // starters use each class exactly once, so the matching is forced.
    auto class_key = [&](const GroupElement& d) { return std::min(d, g.negate(d)); };

    std::map<GroupElement, int> s2_by_class;
    for (int j = 0; j < static_cast<int>(s2.pairs.size()); ++j) {
        GroupElement key = class_key(g.subtract(s2.pairs[j].second, s2.pairs[j].first));
        if (s2_by_class.count(key))
            throw std::invalid_argument("second starter repeats difference class " + key.to_string());
        s2_by_class[key] = j;
    }

    OrthogonalStarterPair result{s1, s2, {}, {}};
    std::set<GroupElement> seen_adders;
    std::set<GroupElement> seen_keys;
    for (int i = 0; i < static_cast<int>(s1.pairs.size()); ++i) {
        auto [x, y] = s1.pairs[i];
        GroupElement d = g.subtract(y, x);
        GroupElement key = class_key(d);
        if (!seen_keys.insert(key).second)
            throw std::invalid_argument("first starter repeats difference class " + key.to_string());
        auto it = s2_by_class.find(key);
        if (it == s2_by_class.end())
            throw std::invalid_argument("no pair in the second starter with difference class " + key.to_string());
        int j = it->second;
        auto [u, v] = s2.pairs[j];
        if (!(g.subtract(v, u) == d)) std::swap(u, v);  // orient so y - x == v - u
        GroupElement t = g.subtract(y, v);
        if (s1.subgroup.contains(t))
            throw std::invalid_argument("adder " + t.to_string() + " for pair " + pair_text(x, y) + " lies in H");
        if (!seen_adders.insert(t).second)
            throw std::invalid_argument("duplicated adder " + t.to_string());
        result.matching.push_back(j);
        result.adder.push_back(t);
        result.s2.pairs[j] = {u, v};
    }
    return result;
}

bool is_skew_orthogonal(const OrthogonalStarterPair& pair) {
    const auto& g = pair.s1.group;
    std::set<GroupElement> both;
    for (const auto& t : pair.adder) {
        if (pair.s1.subgroup.contains(t)) return false;
        if (!both.insert(t).second) return false;
        if (!both.insert(g.negate(t)).second) return false;
    }
    return static_cast<int>(both.size()) == g.order() - pair.s1.subgroup.order();
}

room::RoomArray develop(const OrthogonalStarterPair& pair) {
    const auto& g = pair.s1.group;
    auto elements = g.elements();

    std::vector<std::string> symbols;
    for (const auto& e : elements) symbols.push_back(e.to_string());
    std::vector<std::vector<std::string>> holes;
    for (const auto& coset : pair.s1.subgroup.cosets()) {
        std::vector<std::string> hole;
        for (const auto& e : coset) hole.push_back(e.to_string());
        holes.push_back(std::move(hole));
    }

    auto frame = room::make_frame(symbols, holes);
    for (int i = 0; i < static_cast<int>(pair.s1.pairs.size()); ++i) {
        auto [x, y] = pair.s1.pairs[i];
        const auto& t = pair.adder[i];
        for (const auto& e : elements) {
            int r = g.index_of(e);
            int c = g.index_of(g.add(e, t));
            frame.set(r, c, g.index_of(g.add(x, e)), g.index_of(g.add(y, e)));
        }
    }
    return frame;
}

room::RoomArray develop_intransitive(const IntransitiveStarterQuad& quad) {
    const int m = quad.modulus;
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("modulus must be even and at least 4");
    const int half = m / 2;
    const int fa = quad.fixed_a();
    const int fb = quad.fixed_b();

    // Symbols 0..m-1 carry the Z_(m/2) x Z_2 structure a + half*b; the two
    // fixed symbols are invariant under every translate.
    FiniteAbelianGroup ghat({half, 2});
    auto encode = [&](int x) { return GroupElement{{x % half, x / half}}; };
    auto decode = [&](const GroupElement& e) { return e.residues[0] + half * e.residues[1]; };
    auto is_finite = [&](int x) { return x >= 0 && x < m; };
    auto in_hbar = [&](const GroupElement& e) { return e.residues[0] == 0; };

    auto check_pair = [&](const std::pair<int, int>& p, const char* where, bool finite_only) {
        auto valid = [&](int x) { return is_finite(x) || (!finite_only && (x == fa || x == fb)); };
        if (!valid(p.first) || !valid(p.second) || p.first == p.second)
            throw std::invalid_argument(std::string("bad pair in ") + where);
    };

    if (quad.s1.size() != static_cast<std::size_t>((m - 2) / 2) || quad.s1.size() != quad.s2.size() ||
        quad.c.size() != 1 || quad.r.size() != 1)
        throw std::invalid_argument("quadruple has the wrong shape");
    check_pair(quad.c[0], "C", true);
    check_pair(quad.r[0], "R", true);

    // Coverage: S1 u C and S2 u R must each use every symbol except 0 and
    // m/2 (the hole through the development group) exactly once.
    auto check_cover = [&](const std::vector<std::pair<int, int>>& pairs, const std::pair<int, int>& extra,
                           const char* side) {
        std::multiset<int> used;
        for (const auto& p : pairs) {
            check_pair(p, side, false);
            used.insert(p.first);
            used.insert(p.second);
        }
        used.insert(extra.first);
        used.insert(extra.second);
        std::multiset<int> expected;
        for (int x = 0; x < m + 2; ++x)
            if (x != 0 && x != half) expected.insert(x);
        if (used != expected) throw std::invalid_argument(std::string("element coverage fails in ") + side);
    };
    check_cover(quad.s1, quad.c[0], "S1");
    check_cover(quad.s2, quad.r[0], "S2");

    // Match S1 and S2 pairs: pure pairs by +- difference class in the
    // development group, fixed-symbol pairs by their fixed symbol. Orient so
    // the differences agree and take the adder t_i = y_i - v_i.
    auto classify = [&](const std::pair<int, int>& p) -> GroupElement {
        if (p.second == fa || p.first == fa) return GroupElement{{-1, 0}};
        if (p.second == fb || p.first == fb) return GroupElement{{-1, 1}};
        GroupElement d = ghat.subtract(encode(p.second), encode(p.first));
        return std::min(d, ghat.negate(d));
    };
    std::map<GroupElement, int> s2_by_class;
    for (int j = 0; j < static_cast<int>(quad.s2.size()); ++j) {
        if (!s2_by_class.emplace(classify(quad.s2[j]), j).second)
            throw std::invalid_argument("S2 repeats a difference class");
    }

    std::vector<std::pair<int, int>> s1 = quad.s1;
    std::vector<std::pair<int, int>> s2(quad.s1.size());
    std::vector<GroupElement> adder(quad.s1.size());
    std::set<GroupElement> seen_adders;
    for (int i = 0; i < static_cast<int>(s1.size()); ++i) {
        auto key = classify(s1[i]);
        auto it = s2_by_class.find(key);
        if (it == s2_by_class.end()) throw std::invalid_argument("unmatched difference class in S1");
        auto [u, v] = quad.s2[it->second];
        auto [x, y] = s1[i];
        GroupElement t;
        if (x == fa || x == fb) std::swap(x, y);
        if (u == fa || u == fb) std::swap(u, v);
        if (y == fa || y == fb) {
            t = ghat.subtract(encode(x), encode(u));
        } else {
            if (!(ghat.subtract(encode(v), encode(u)) == ghat.subtract(encode(y), encode(x)))) std::swap(u, v);
            t = ghat.subtract(encode(y), encode(v));
        }
        if (in_hbar(t)) throw std::invalid_argument("adder " + t.to_string() + " lies in the hole subgroup");
        if (!seen_adders.insert(t).second) throw std::invalid_argument("duplicated adder " + t.to_string());
        s1[i] = {x, y};
        s2[i] = {u, v};
        adder[i] = t;
    }

    std::vector<std::string> symbols;
    for (int x = 0; x < m; ++x) symbols.push_back(std::to_string(x));
    symbols.push_back(quad.fixed[0]);
    symbols.push_back(quad.fixed[1]);
    std::vector<std::vector<std::string>> holes;
    for (int a = 0; a < half; ++a) holes.push_back({std::to_string(a), std::to_string(a + half)});
    holes.push_back({quad.fixed[0], quad.fixed[1]});

    auto frame = room::make_frame(symbols, holes);
    auto translate = [&](int x, const GroupElement& gelem) {
        if (x == fa || x == fb) return x;
        return decode(ghat.add(encode(x), gelem));
    };
    for (int gi = 0; gi < m; ++gi) {
        GroupElement gelem = encode(gi);
        int bit = gelem.residues[1];
        for (int i = 0; i < static_cast<int>(s1.size()); ++i)
            frame.set(gi, translate(decode(adder[i]), gelem), translate(s1[i].first, gelem),
                      translate(s1[i].second, gelem));
        frame.set(gi, bit == 0 ? fa : fb, translate(quad.c[0].first, gelem), translate(quad.c[0].second, gelem));
        frame.set(bit == 0 ? fa : fb, gi, translate(quad.r[0].first, gelem), translate(quad.r[0].second, gelem));
    }
    return frame;
}

namespace {

void starter_backtrack(const FiniteAbelianGroup& g, const Subgroup& h, std::vector<GroupElement>& free_elements,
                       std::vector<bool>& used, std::vector<bool>& diff_used,
                       std::vector<std::pair<GroupElement, GroupElement>>& current,
                       std::vector<FrameStarter>& out) {
    int n = static_cast<int>(free_elements.size());
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
        out.push_back(FrameStarter{g, h, current});
        return;
    }
    used[first] = true;
    for (int j = first + 1; j < n; ++j) {
        if (used[j]) continue;
        GroupElement d = g.subtract(free_elements[j], free_elements[first]);
        GroupElement nd = g.negate(d);
        if (d == nd) continue;  // order-2 difference cannot be covered twice
        int di = g.index_of(d);
        int ndi = g.index_of(nd);
        if (diff_used[di] || diff_used[ndi]) continue;
        used[j] = true;
        diff_used[di] = diff_used[ndi] = true;
        current.emplace_back(free_elements[first], free_elements[j]);
        starter_backtrack(g, h, free_elements, used, diff_used, current, out);
        current.pop_back();
        diff_used[di] = diff_used[ndi] = false;
        used[j] = false;
    }
    used[first] = false;
}

}  // namespace

std::vector<FrameStarter> exhaustive_frame_starters(const FiniteAbelianGroup& group, const Subgroup& subgroup,
                                                    int bound) {
    if (group.order() > bound)
        throw std::invalid_argument("group order " + std::to_string(group.order()) +
                                    " exceeds the enumeration bound " + std::to_string(bound));
    std::vector<GroupElement> free_elements;
    for (const auto& e : group.elements())
        if (!subgroup.contains(e)) free_elements.push_back(e);
    if (free_elements.size() % 2 != 0) return {};

    std::vector<bool> used(free_elements.size(), false);
    std::vector<bool> diff_used(group.order(), false);
    std::vector<std::pair<GroupElement, GroupElement>> current;
    std::vector<FrameStarter> out;
    starter_backtrack(group, subgroup, free_elements, used, diff_used, current, out);
    return out;
}

}  // namespace framekit::starters

#include "framekit/group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "framekit/report.hpp"

namespace framekit {

std::string ValidityReport::summary(std::size_t max_lines) const {
    std::ostringstream os;
    if (valid()) {
        os << "valid";
        return os.str();
    }
    os << violations.size() << " violation(s)";
    std::size_t shown = std::min(max_lines, violations.size());
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& v = violations[i];
        os << "\n  [" << v.kind << "] " << v.location << ": " << v.detail;
    }
    if (shown < violations.size()) os << "\n  ...";
    return os.str();
}

}  // namespace framekit

namespace framekit::algebra {

std::string GroupElement::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (i) os << ',';
        os << residues[i];
    }
    return os.str();
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    order_ = 1;
    for (int n : orders_) {
        if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
        order_ *= n;
    }
}

void FiniteAbelianGroup::check_shape(const GroupElement& a) const {
    if (a.residues.size() != orders_.size())
        throw std::invalid_argument("element shape does not match group");
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= orders_[i])
            throw std::invalid_argument("element residue out of range for group");
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement{std::vector<int>(orders_.size(), 0)};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_shape(a);
    check_shape(b);
    GroupElement r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) r.residues[i] = (a.residues[i] + b.residues[i]) % orders_[i];
    return r;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
    check_shape(a);
    GroupElement r = a;
    for (std::size_t i = 0; i < orders_.size(); ++i) r.residues[i] = a.residues[i] == 0 ? 0 : orders_[i] - a.residues[i];
    return r;
}

GroupElement FiniteAbelianGroup::subtract(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const {
    if (a.residues.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (a.residues[i] < 0 || a.residues[i] >= orders_[i]) return false;
    return true;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (int idx = 0; idx < order_; ++idx) out.push_back(element_at(idx));
    return out;
}

int FiniteAbelianGroup::index_of(const GroupElement& a) const {
    check_shape(a);
    int idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + a.residues[i];
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(int index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
    GroupElement r{std::vector<int>(orders_.size(), 0)};
    for (std::size_t i = orders_.size(); i-- > 0;) {
        r.residues[i] = index % orders_[i];
        index /= orders_[i];
    }
    return r;
}

GroupElement FiniteAbelianGroup::parse_element(const std::string& text) const {
    GroupElement r;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad group element '" + text + "'");
        }
        if (pos != token.size()) throw std::invalid_argument("bad group element '" + text + "'");
        r.residues.push_back(value);
    }
    if (!contains(r)) throw std::invalid_argument("element '" + text + "' not in group");
    return r;
}

Subgroup::Subgroup(const FiniteAbelianGroup& parent, std::set<GroupElement> members)
    : parent_(parent), members_(std::move(members)) {
    if (!members_.count(parent_.identity())) throw std::invalid_argument("subgroup must contain identity");
    for (const auto& a : members_) {
        if (!parent_.contains(a)) throw std::invalid_argument("subgroup member not in parent group");
        if (!members_.count(parent_.negate(a))) throw std::invalid_argument("subgroup not closed under negation");
        for (const auto& b : members_)
            if (!members_.count(parent_.add(a, b))) throw std::invalid_argument("subgroup not closed under addition");
    }
    if (parent_.order() % order() != 0) throw std::invalid_argument("subgroup order does not divide group order");
}

std::vector<std::vector<GroupElement>> Subgroup::cosets() const {
    std::vector<std::vector<GroupElement>> out;
    std::set<GroupElement> seen;
    for (const auto& g : parent_.elements()) {  // canonical order => minimal representatives first
        if (seen.count(g)) continue;
        std::vector<GroupElement> coset;
        for (const auto& h : members_) coset.push_back(parent_.add(g, h));
        std::sort(coset.begin(), coset.end());
        for (const auto& e : coset) seen.insert(e);
        out.push_back(std::move(coset));
    }
    return out;
}

Subgroup subgroup_from(const FiniteAbelianGroup& parent, const std::set<GroupElement>& generators) {
    std::set<GroupElement> members{parent.identity()};
    for (const auto& g : generators) {
        if (!parent.contains(g)) throw std::invalid_argument("generator not in parent group");
        members.insert(g);
    }
    // Addition closure; in a finite group this also closes negation.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<GroupElement> current(members.begin(), members.end());
        for (const auto& a : current)
            for (const auto& b : current)
                if (members.insert(parent.add(a, b)).second) changed = true;
    }
    return Subgroup(parent, std::move(members));
}

}  // namespace framekit::algebra

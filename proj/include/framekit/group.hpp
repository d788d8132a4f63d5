#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace framekit::algebra {

/// Element of a direct product of cyclic groups, stored as a reduced
/// residue tuple. Ordering is lexicographic on the residues; this is the
/// canonical order used everywhere a deterministic order is needed.
struct GroupElement {
    std::vector<int> residues;

    auto operator<=>(const GroupElement&) const = default;

    std::string to_string() const;
};

/// Finite abelian group Z_{n1} x ... x Z_{nd}. All values immutable after
/// construction; operations on elements of the wrong shape throw.
class FiniteAbelianGroup {
  public:
    explicit FiniteAbelianGroup(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    int order() const { return order_; }
    std::size_t rank() const { return orders_.size(); }

    GroupElement identity() const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement subtract(const GroupElement& a, const GroupElement& b) const;

    bool contains(const GroupElement& a) const;

    /// All g elements in canonical (lexicographic) order.
    std::vector<GroupElement> elements() const;

    /// Mixed-radix index of an element in [0, order); inverse of element_at.
    int index_of(const GroupElement& a) const;
    GroupElement element_at(int index) const;

    /// Parses the text form: residues joined by commas ("1,3"), or a bare
    /// integer for rank-1 groups. Throws std::invalid_argument on bad input.
    GroupElement parse_element(const std::string& text) const;

    bool operator==(const FiniteAbelianGroup& other) const { return orders_ == other.orders_; }

  private:
    void check_shape(const GroupElement& a) const;

    std::vector<int> orders_;
    int order_;
};

/// Subgroup given by its member set; contains the identity and is closed
/// under addition and negation (checked on construction).
class Subgroup {
  public:
    Subgroup(const FiniteAbelianGroup& parent, std::set<GroupElement> members);

    const FiniteAbelianGroup& parent() const { return parent_; }
    const std::set<GroupElement>& members() const { return members_; }
    int order() const { return static_cast<int>(members_.size()); }

    bool contains(const GroupElement& a) const { return members_.count(a) > 0; }

    /// Partition of the parent into cosets, each of size |H|. The first
    /// coset is H itself; the rest are sorted by minimal representative.
    /// Each coset is listed in canonical element order.
    std::vector<std::vector<GroupElement>> cosets() const;

  private:
    FiniteAbelianGroup parent_;
    std::set<GroupElement> members_;
};

/// Smallest subgroup of `parent` containing `generators`.
Subgroup subgroup_from(const FiniteAbelianGroup& parent, const std::set<GroupElement>& generators);

}  // namespace framekit::algebra

#pragma once

#include <string>
#include <vector>

namespace framekit {

/// One rule violation found by a verifier: what rule, where, and detail.
struct Violation {
    std::string kind;      // e.g. "row-coverage", "pair-coverage", "hole-not-empty"
    std::string location;  // e.g. "row 3", "cell (2,5)", "class 4"
    std::string detail;
};

/// Verifiers collect every violation they find, not just the first.
struct ValidityReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }

    void add(std::string kind, std::string location, std::string detail) {
        violations.push_back({std::move(kind), std::move(location), std::move(detail)});
    }

    void merge(const ValidityReport& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    std::string summary(std::size_t max_lines = 20) const;
};

}  // namespace framekit

#pragma once

#include <string>
#include <vector>

namespace framekit::conformance {

struct RowResult {
    std::string id;
    bool passed = false;
    std::string note;  // failure reason or informational remark
    double seconds = 0.0;
};

/// Runs the fixture corpus checks (checksums + expected verdicts) and the
/// acceptance criteria. `filter` keeps only rows whose id contains it.
/// Row order is deterministic: fixtures by name, then criteria by number.
std::vector<RowResult> run(const std::string& fixtures_dir, const std::string& filter = "");

bool all_passed(const std::vector<RowResult>& rows);

/// Renders the rows as an aligned text table.
std::string format_table(const std::vector<RowResult>& rows);

}  // namespace framekit::conformance

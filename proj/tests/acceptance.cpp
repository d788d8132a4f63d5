// Acceptance harness: runs every criterion against the fixture corpus and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <cstdio>
#include <string>

#include "conformance.hpp"

int main() {
    auto rows = framekit::conformance::run(FRAMEKIT_FIXTURES_DIR, "criterion:");
    bool ok = true;
    for (const auto& row : rows) {
        ok = ok && row.passed;
        std::printf("%s  %s  (%.2fs)%s%s\n", row.passed ? "pass" : "FAIL", row.id.c_str(), row.seconds,
                    row.note.empty() ? "" : "  ", row.note.c_str());
    }
    std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return ok ? 0 : 1;
}

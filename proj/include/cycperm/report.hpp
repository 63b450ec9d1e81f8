#ifndef CYCPERM_REPORT_HPP
#define CYCPERM_REPORT_HPP

#include <string>
#include <vector>

namespace cycperm {

struct Mismatch {
    std::string location;
    std::string expected;
    std::string actual;
};

// A finding is evidence-level output (e.g. a conjecture counterexample); it
// is reported with context but does not fail the check.
struct Finding {
    std::string location;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::string range;
    std::vector<Mismatch> mismatches;
    std::vector<Finding> findings;
    std::vector<std::string> details; // human-readable per-item lines

    bool pass() const { return mismatches.empty(); }
};

bool all_pass(const std::vector<CheckReport>& reports);

} // namespace cycperm

#endif

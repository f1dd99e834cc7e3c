#pragma once

// Shared record for oracle-vs-printed-table mismatches. The derivational
// value is ground truth; printed closed forms are regression targets, and a
// disagreement is reported, not treated as an error.

#include <string>
#include <vector>

namespace circ3 {

struct TableDiff {
    std::string table;        // which closed-form table
    std::string component;    // which entry, e.g. "F_313"
    std::string derivational; // value from the defining formula
    std::string printed;      // value from the closed-form table
};

}  // namespace circ3

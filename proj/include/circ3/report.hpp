#pragma once

// Machine-readable run reports. Numbers are serialized as decimal strings
// (and rationals as "p/q") so no precision is lost in transit; identical
// command + seed produces a byte-identical document apart from the
// generated_at field.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "circ3/diagnostics.hpp"

namespace circ3 {

inline constexpr const char* kVersion = "0.1.0";

struct CheckRecord {
    std::string name;
    std::string anchor;
    long count = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool exceed = false;  // pass means max_residual > tolerance (witness checks)
    bool pass = false;
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    std::vector<TableDiff> discrepancies;
    nlohmann::ordered_json values;  // subcommand-specific payload
    bool pass = true;

    CheckRecord& add(const std::string& name, const std::string& anchor, long count,
                     double max_residual, double tolerance, bool exceed = false);
    void add_discrepancies(const std::vector<TableDiff>& diffs);
    void finish();  // recomputes the overall pass flag
};

std::string format_double(double v);
nlohmann::ordered_json report_json(const Report& rep);

}  // namespace circ3

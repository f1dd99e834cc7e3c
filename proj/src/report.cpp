#include "circ3/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace circ3 {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CheckRecord& Report::add(const std::string& name, const std::string& anchor, long count,
                         double max_residual, double tolerance, bool exceed) {
    CheckRecord rec;
    rec.name = name;
    rec.anchor = anchor;
    rec.count = count;
    rec.max_residual = max_residual;
    rec.tolerance = tolerance;
    rec.exceed = exceed;
    rec.pass = exceed ? (max_residual > tolerance) : (max_residual <= tolerance);
    checks.push_back(rec);
    return checks.back();
}

void Report::add_discrepancies(const std::vector<TableDiff>& diffs) {
    discrepancies.insert(discrepancies.end(), diffs.begin(), diffs.end());
}

void Report::finish() {
    pass = true;
    for (const CheckRecord& c : checks)
        if (!c.pass) pass = false;
}

nlohmann::ordered_json report_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["command"] = rep.command;
    j["seed"] = rep.seed;
    {
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::tm tm{};
        gmtime_r(&t, &tm);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        j["generated_at"] = buf;
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckRecord& c : rep.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["anchor"] = c.anchor;
        cj["count"] = c.count;
        cj["max_residual"] = format_double(c.max_residual);
        cj["tolerance"] = format_double(c.tolerance);
        if (c.exceed) cj["comparison"] = "greater";
        cj["pass"] = c.pass;
        j["checks"].push_back(cj);
    }
    j["discrepancies"] = nlohmann::ordered_json::array();
    for (const TableDiff& d : rep.discrepancies) {
        nlohmann::ordered_json dj;
        dj["table"] = d.table;
        dj["component"] = d.component;
        dj["derivational"] = d.derivational;
        dj["printed"] = d.printed;
        j["discrepancies"].push_back(dj);
    }
    if (!rep.values.is_null()) j["values"] = rep.values;
    j["pass"] = rep.pass;
    return j;
}

}  // namespace circ3

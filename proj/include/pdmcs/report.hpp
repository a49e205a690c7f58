#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pdmcs {

struct CheckRecord {
    std::string name;
    double value;
    double tolerance;
    bool passed;
};

inline CheckRecord check(std::string name, double value, double tolerance) {
    const bool ok = value < tolerance;
    return CheckRecord{std::move(name), value, tolerance, ok};
}

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;  // echoed, in order
    std::vector<CheckRecord> checks;
    double wall_seconds = 0.0;

    int passed() const;
    int failed() const;
    void add(CheckRecord r) { checks.push_back(std::move(r)); }
};

/// %.12g; the one float format used in every report so identical configs
/// produce byte-identical output.
std::string format_g12(double v);

/// Schema version "1". wall_time_s is emitted only when include_timing is
/// set; by default reports depend on the config alone.
std::string to_json(const Report& r, bool include_timing = false);

std::string to_csv(const Report& r);

}  // namespace pdmcs

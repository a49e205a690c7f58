#include "pdmcs/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace pdmcs {

int Report::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.passed ? 1 : 0;
    return n;
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(c);
        } else if (c == '\n') {
            out += "\\n";
        } else {
            out.push_back(c);
        }
    }
    return out;
}

// Config values arrive pre-formatted; emit bare when they parse as
// numbers/arrays, quoted otherwise.
bool looks_like_literal(const std::string& v) {
    if (v.empty()) return false;
    if (v.front() == '[' || v == "true" || v == "false") return true;
    char* end = nullptr;
    std::strtod(v.c_str(), &end);
    return end && *end == '\0' && end != v.c_str();
}

}  // namespace

std::string to_json(const Report& r, bool include_timing) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"schema_version\": \"1\",\n";
    os << "  \"command\": \"" << json_escape(r.command) << "\",\n";
    os << "  \"config\": {";
    for (size_t i = 0; i < r.config.size(); ++i) {
        os << (i ? ", " : "") << "\"" << json_escape(r.config[i].first) << "\": ";
        const std::string& v = r.config[i].second;
        if (looks_like_literal(v))
            os << v;
        else
            os << "\"" << json_escape(v) << "\"";
    }
    os << "},\n";
    os << "  \"checks\": [\n";
    for (size_t i = 0; i < r.checks.size(); ++i) {
        const CheckRecord& c = r.checks[i];
        os << "    {\"name\": \"" << json_escape(c.name) << "\", \"value\": "
           << format_g12(c.value) << ", \"tolerance\": " << format_g12(c.tolerance)
           << ", \"pass\": " << (c.passed ? "true" : "false") << "}"
           << (i + 1 < r.checks.size() ? "," : "") << "\n";
    }
    os << "  ],\n";
    os << "  \"summary\": {\"passed\": " << r.passed() << ", \"failed\": " << r.failed()
       << "}";
    if (include_timing) os << ",\n  \"wall_time_s\": " << format_g12(r.wall_seconds);
    os << "\n}\n";
    return os.str();
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os << "name,value,tolerance,pass\n";
    for (const auto& c : r.checks)
        os << c.name << "," << format_g12(c.value) << "," << format_g12(c.tolerance)
           << "," << (c.passed ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace pdmcs

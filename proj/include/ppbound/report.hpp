#pragma once

// Suite reports: named checks with inputs, expected/actual, margins and
// per-check status, plus deterministic serialization to JSON/CSV/text.
// The canonical hash covers everything except timestamps, so reruns of
// the same grid are byte-comparable.

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ppbound {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_cstr(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    std::string inputs;
    std::string expected;
    std::string actual;
    CheckStatus status = CheckStatus::Pass;
    std::optional<double> margin;
    std::string source;  // oracle | census | paper | blank
};

inline std::string format_margin(double m) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", m);
    return buf;
}

struct SuiteReport {
    std::string suite;
    std::string version = kToolkitVersion;
    std::map<std::string, std::string> params;
    std::vector<CheckResult> checks;
    std::string started_at;   // ISO 8601 UTC; excluded from the hash
    std::string finished_at;

    bool overall_pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }

    std::size_t count(CheckStatus s) const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }

    std::uint64_t canonical_hash() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](const std::string& s) {
            for (unsigned char c : s) {
                h ^= c;
                h *= 1099511628211ull;
            }
            h ^= 0x1f;
            h *= 1099511628211ull;
        };
        mix(suite);
        mix(version);
        for (const auto& [k, v] : params) {
            mix(k);
            mix(v);
        }
        for (const auto& c : checks) {
            mix(c.name);
            mix(c.inputs);
            mix(c.expected);
            mix(c.actual);
            mix(to_cstr(c.status));
            mix(c.margin ? format_margin(*c.margin) : "");
            mix(c.source);
        }
        return h;
    }
};

inline std::string now_iso8601_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

enum class ReportFormat { Json, Csv, Text };

inline std::optional<ReportFormat> report_format_from(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "text") return ReportFormat::Text;
    return std::nullopt;
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

inline std::string hash_hex(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace detail

inline std::string emit_report(const SuiteReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["version"] = r.version;
        j["params"] = r.params;
        j["canonical_hash"] = detail::hash_hex(r.canonical_hash());
        j["started_at"] = r.started_at;
        j["finished_at"] = r.finished_at;
        j["overall"] = r.overall_pass() ? "PASS" : "FAIL";
        auto checks = nlohmann::ordered_json::array();
        for (const auto& c : r.checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["inputs"] = c.inputs;
            jc["expected"] = c.expected;
            jc["actual"] = c.actual;
            jc["pass"] = c.status != CheckStatus::Fail;
            jc["status"] = to_cstr(c.status);
            if (c.margin) jc["margin"] = *c.margin;
            else jc["margin"] = nullptr;
            jc["source"] = c.source;
            checks.push_back(std::move(jc));
        }
        j["checks"] = std::move(checks);
        return j.dump(2) + "\n";
    }
    if (fmt == ReportFormat::Csv) {
        std::string out = "name,inputs,expected,actual,pass,status,margin,source\n";
        for (const auto& c : r.checks) {
            out += detail::csv_escape(c.name) + ",";
            out += detail::csv_escape(c.inputs) + ",";
            out += detail::csv_escape(c.expected) + ",";
            out += detail::csv_escape(c.actual) + ",";
            out += c.status != CheckStatus::Fail ? "true," : "false,";
            out += std::string(to_cstr(c.status)) + ",";
            out += (c.margin ? format_margin(*c.margin) : "") + std::string(",");
            out += detail::csv_escape(c.source) + "\n";
        }
        return out;
    }
    // text: aligned table
    std::size_t wn = 4, wi = 6, we = 8, wa = 6;
    for (const auto& c : r.checks) {
        wn = std::max(wn, c.name.size());
        wi = std::max(wi, c.inputs.size());
        we = std::max(we, c.expected.size());
        wa = std::max(wa, c.actual.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    std::string out = "suite " + r.suite + " (version " + r.version + ")\n";
    for (const auto& [k, v] : r.params) out += "  " + k + " = " + v + "\n";
    out += pad("name", wn) + "  " + pad("inputs", wi) + "  " + pad("expected", we) +
           "  " + pad("actual", wa) + "  status  margin\n";
    for (const auto& c : r.checks) {
        out += pad(c.name, wn) + "  " + pad(c.inputs, wi) + "  " + pad(c.expected, we) +
               "  " + pad(c.actual, wa) + "  " + pad(to_cstr(c.status), 6) + "  " +
               (c.margin ? format_margin(*c.margin) : "-") +
               (c.source.empty() ? "" : "  [" + c.source + "]") + "\n";
    }
    out += "overall: " + std::string(r.overall_pass() ? "PASS" : "FAIL") + " (" +
           std::to_string(r.checks.size()) + " checks, " +
           std::to_string(r.count(CheckStatus::Fail)) + " failed, " +
           std::to_string(r.count(CheckStatus::Skip)) + " skipped)\n";
    out += "canonical_hash: " + detail::hash_hex(r.canonical_hash()) + "\n";
    return out;
}

}  // namespace ppbound

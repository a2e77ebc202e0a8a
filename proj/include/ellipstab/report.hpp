#pragma once

// Check/query reports shared by the CLI and the acceptance runner. All values
// are strings so exact rationals survive serialization unchanged.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ellipstab {

struct ReportItem {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = true;
    std::string source = "check";  ///< "check" compares against a known value, "query" only reports
};

struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<ReportItem> items;

    void check(std::string name, std::string expected, std::string computed) {
        const bool ok = expected == computed;
        items.push_back({std::move(name), std::move(expected), std::move(computed), ok, "check"});
    }
    void check_bool(std::string name, bool ok, std::string detail = {}) {
        items.push_back({std::move(name), "true", ok ? "true" : "false" + (detail.empty() ? "" : " (" + detail + ")"),
                         ok, "check"});
    }
    void query(std::string name, std::string computed) {
        items.push_back({std::move(name), "", std::move(computed), true, "query"});
    }

    std::size_t passed() const {
        std::size_t n = 0;
        for (const auto& i : items)
            n += i.pass;
        return n;
    }
    std::size_t failed() const { return items.size() - passed(); }
    bool pass() const { return failed() == 0; }
};

inline void print_text(std::ostream& os, const Report& r) {
    for (const auto& i : r.items) {
        if (i.source == "query")
            os << i.name << ": " << i.computed << '\n';
        else
            os << (i.pass ? "ok   " : "FAIL ") << i.name << ": " << i.computed
               << (i.pass ? "" : " (expected " + i.expected + ")") << '\n';
    }
    os << r.passed() << " passed, " << r.failed() << " failed (seed " << r.seed << ")\n";
}

} // namespace ellipstab

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace l2a {

struct Check {
    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    int evaluated = 0;       // basis tuples or samples evaluated
    int failures = 0;
    std::string where;       // first failing tuple
    std::string defect;      // lhs - rhs at that tuple
    std::string note;

    // Records one evaluation; keeps the first failure as the witness.
    void record(bool ok, const std::string& at, const std::string& diff) {
        ++evaluated;
        if (ok) return;
        if (passed) {
            where = at;
            defect = diff;
        }
        passed = false;
        ++failures;
    }
};

struct Report {
    std::vector<Check> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const Check* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    bool passed(std::string_view name) const {
        const Check* c = find(name);
        return c && c->passed;
    }
    Check& add(std::string name) {
        checks.push_back(Check{std::move(name)});
        return checks.back();
    }
    std::string summary() const;  // one line per check
};

}  // namespace l2a

#pragma once

#include <string>
#include <vector>

namespace hopfcyc {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  // first counterexample when failed
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void add(std::string name, bool passed, std::string witness = {}) {
        checks.push_back(CheckResult{std::move(name), passed, std::move(witness)});
    }
    void append(const CheckReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return c.name + (c.witness.empty() ? "" : ": " + c.witness);
        return {};
    }
};

}  // namespace hopfcyc

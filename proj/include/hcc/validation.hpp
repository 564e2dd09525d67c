#pragma once

#include <string>
#include <vector>

namespace hcc {

// One violated rule, with enough location detail to act as a witness.
struct Violation {
    std::string rule;     // e.g. "C1", "C3", "B4", "design-coverage"
    std::string message;  // human-readable description with coordinates
};

struct Report {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string rule, std::string message) {
        violations.push_back({std::move(rule), std::move(message)});
    }
    std::string summary() const;
};

}  // namespace hcc

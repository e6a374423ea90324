#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kgc {

// The acceptance suite: every release-gating check, each with its time
// budget pinned in code.  A criterion passes only if its assertions hold
// AND it finishes inside the budget.  Results come back in criterion order
// regardless of how many workers ran them.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail; // deterministic one-liner: what was checked / what broke
    double ms = 0.0;
    double budget_ms = 0.0;
};

std::vector<CriterionResult> run_acceptance(unsigned jobs = 1);

} // namespace kgc

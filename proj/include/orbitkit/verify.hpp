#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbitkit {

struct CheckResult {
    std::string name;
    std::string parameters;
    bool pass;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t max = 500;
    // Negative control: corrupts O_2(f) before the checks run.
    bool inject_fault = false;
};

// Runs the invariant suite of every module. "for all n <= max" properties scale
// with max; existence witnesses and fixed boundary points use their own windows.
std::vector<CheckResult> run_invariants(const VerifyOptions& options);

} // namespace orbitkit

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace chibound::suite {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    long long checks = 0;
    long long failures = 0;
    double seconds = 0.0;
    std::string detail; // first failure, or a short summary
};

/// Runs the full verification battery (theorem properties, tightness
/// witnesses, bound formulas, oracle cross-checks). Deterministic given the
/// seed; instances fan out over the OpenMP pool when parallel is true.
std::vector<CriterionResult> run_all(uint64_t seed, bool parallel = true);

/// One line per criterion plus a summary; returns true iff everything passed.
bool print_results(const std::vector<CriterionResult>& results, std::ostream& out);

} // namespace chibound::suite

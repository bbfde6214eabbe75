#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chibound {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input graph is outside the class a routine requires (a forbidden pattern
// was found, a precondition failed). Carries the witness vertices.
struct ClassViolation : Error {
    ClassViolation(const std::string& what, std::vector<int> witness_vertices)
        : Error(what), witness(std::move(witness_vertices)) {}
    std::vector<int> witness;
};

// Exact routine refused because the instance exceeds the configured size cap.
struct DeskLimitExceeded : Error {
    DeskLimitExceeded(const std::string& what, int limit_) : Error(what), limit(limit_) {}
    int limit;
};

// A structural fact the coloring pipeline relies on failed at runtime. Given
// the preconditions this is unreachable; when it fires, the message carries
// the instance for triage.
struct ProofClaimFailure : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, int line_, int column_)
        : Error(what), line(line_), column(column_) {}
    int line;
    int column;
};

} // namespace chibound

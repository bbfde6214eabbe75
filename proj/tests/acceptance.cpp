// Runs the full verification battery and prints one pass/fail line per
// criterion. Exit code 0 iff everything passed.

#include <cstdlib>
#include <iostream>

#include "chibound/suite.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 1;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    if (const char* env = std::getenv("CHIBOUND_SUITE_SEED")) seed = std::strtoull(env, nullptr, 10);
    auto results = chibound::suite::run_all(seed);
    bool ok = chibound::suite::print_results(results, std::cout);
    return ok ? 0 : 1;
}

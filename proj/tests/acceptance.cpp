// Acceptance suite: runs every verification criterion at full scale and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.
// Pass --long to include the long-running optional searches, --fast for the
// trimmed tier used in quick iteration.

#include "zerosum/selftest.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    zerosum::SelftestTier tier = zerosum::SelftestTier::Acceptance;
    unsigned workers = 1;
    std::uint64_t seed = 20240901;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) tier = zerosum::SelftestTier::Full;
        else if (std::strcmp(argv[i], "--fast") == 0) tier = zerosum::SelftestTier::Fast;
        else if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) workers = static_cast<unsigned>(std::atoi(argv[++i]));
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) seed = static_cast<std::uint64_t>(std::atoll(argv[++i]));
        else {
            std::cerr << "usage: acceptance [--long|--fast] [--workers N] [--seed S]\n";
            return 2;
        }
    }

    const auto results = zerosum::run_selftest(tier, workers, seed, std::cout);
    int failures = 0;
    for (const auto& r : results)
        if (!r.pass && !r.skipped) ++failures;
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures)) << "\n";
    return failures;
}

#pragma once

#include "zerosum/bigint.hpp"
#include "zerosum/sequence.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace zerosum {

/// Independent counting reference: N^k(S) for every k by enumerating all
/// 2^|S| index subsets. Practical for |S| <= ~20; shares nothing with the DP.
std::vector<BigInt> reference_count_table(const Sequence& s);

enum class SelftestTier {
    Fast,        // trimmed trial counts, skips the slowest searches; minutes
    Acceptance,  // the full verification suite at stated scale
    Full         // Acceptance plus the long-running optional searches; hours
};

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    bool skipped;  // not run at this tier
    std::string detail;
    double seconds;
};

/// Runs the verification suite, printing one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_selftest(SelftestTier tier, unsigned workers, std::uint64_t seed,
                                          std::ostream& log);

}  // namespace zerosum

#pragma once

#include "zerosum/count.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

struct LiftingStats {
    int recursion_depth = 0;   // projection/recursion steps taken
    int blocks_extracted = 0;  // length-3 blocks pulled out across all levels
};

/// Zero-sum subsequence of length 2 * 3^n in a sequence over C_{3^n}^3 of
/// length >= 7 * 3^n - 8. At n = 1 this is direct DP extraction; for n >= 2
/// the sequence is projected to C_3^3, disjoint length-3 zero-sum blocks are
/// extracted greedily, and the block sums recurse through ker pi.
Witness find_2x(const Sequence& s, LiftingStats* stats = nullptr);

/// Zero-sum subsequence of length 3 * 3^n in a sequence over C_{3^n}^3 of
/// length >= 6 * 3^n - 3 (guaranteed nonempty by the counting congruence).
Witness find_3x(const Sequence& s);

/// Zero-sum subsequence of length 5 * 3^n in a sequence over C_{3^n}^3 of
/// length >= 8 * 3^n - 3: a 2x witness plus a 3x witness of the remainder.
Witness find_5x(const Sequence& s, LiftingStats* stats = nullptr);

}  // namespace zerosum

#pragma once

#include "zerosum/bigint.hpp"
#include "zerosum/lengthset.hpp"
#include "zerosum/sequence.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace zerosum {

/// Resource bounds for the counting DP; exceeding one raises ResourceError
/// naming the bound.
struct DpBudget {
    std::uint64_t max_table_cells = std::uint64_t{1} << 26;  // (|S|+1) * |G| cells of one table
    std::uint64_t max_layer_bytes = std::uint64_t{1} << 28;  // retained per-entry layers for extraction
};

/// Exact zero-sum subsequence counts N^k(S) for every k in [0, |S|].
struct CountTable {
    GroupSpec group;
    int source_length;
    std::vector<BigInt> counts;  // counts[k] = N^k(S); counts[0] = 1

    const BigInt& at(int k) const { return counts[static_cast<std::size_t>(k)]; }
};

CountTable count_table(const Sequence& s, const DpBudget& budget = {});

/// N^k(S) mod p for every k; the whole DP runs mod p.
std::vector<int> count_mod_p(const Sequence& s, std::int64_t p, const DpBudget& budget = {});

struct Witness {
    Sequence sub;
    int target_length;
};

/// Deterministic witness with sigma = 0 and the exact length k, or nullopt
/// when N^k(S) = 0. Backtracks through retained DP layers, preferring the
/// earliest entries in the fixed element order.
std::optional<Witness> find_zero_sum_of_length(const Sequence& s, int k, const DpBudget& budget = {});

/// Witness with length in L, smallest qualifying length first.
std::optional<Witness> find_zero_sum_length_in(const Sequence& s, const LengthSet& lengths,
                                               const DpBudget& budget = {});

/// All k >= 1 with N^k(S) > 0, ascending.
std::vector<int> zero_sum_length_spectrum(const Sequence& s, const DpBudget& budget = {});

}  // namespace zerosum

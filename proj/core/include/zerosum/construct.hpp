#pragma once

#include "zerosum/search.hpp"
#include "zerosum/sequence.hpp"

#include <cstdint>

namespace zerosum {

/// Explicit extremal sequences. Every generator re-checks its claimed
/// zero-sum-length property on emission and throws InvariantViolation if the
/// check fails.

/// e_1^[p-1] ... e_r^[p-1] (1,...,1) over C_p^r: a minimal zero-sum sequence
/// of length rp - r + 1 = D(G).
Sequence construct_thm2_lower(std::int64_t p, int r);

/// e_1^[p^n-1] ... e_r^[p^n-1] (1,...,1)^[ceil(k/(r-1))] over C_{p^n}^r,
/// for 3 <= r < p and 2 <= k <= p - r + 1: length D(G) + ceil(k/(r-1)) - 1,
/// shortest zero-sum length r p^n - (r-1) ceil(k/(r-1)) > D(G) - k.
Sequence construct_thm3_lower(std::int64_t p, int n, int r, std::int64_t k);

/// (1,0,0)^[q-1] (0,1,0)^[q-1] (0,0,1)^[q-1] (1,1,-1)^[q-1] (1,1,0) over
/// C_q^3 with q = p^n, p odd: length 4q - 3, spectrum {2q - 1, 2q}.
Sequence construct_thm6_lower(std::int64_t p, int n);

/// Same without the final (1,1,0): length 4q - 4, spectrum exactly {2q}.
Sequence construct_cor5_lower(std::int64_t p, int n);

/// 0^[k exp(G) - 1] W with W zero-sum-free of length D(G) - 1: length
/// k exp(G) + D(G) - 2, and no zero-sum subsequence of length exactly
/// k exp(G). For p-groups W is the basis sequence prod e_i^[n_i - 1];
/// otherwise W comes from an exhaustive search under the given options.
Sequence construct_egz_lower(const GroupSpec& g, std::int64_t k, const SearchOptions& options = {});

}  // namespace zerosum

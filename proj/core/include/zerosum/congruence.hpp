#pragma once

#include "zerosum/bigint.hpp"
#include "zerosum/count.hpp"
#include "zerosum/sequence.hpp"

#include <cstdint>
#include <string>

namespace zerosum {

enum class CongruenceStatement {
    OlsonAlternating,   // 1 - N^1 + N^2 - ... == 0 (mod p), for |S| >= D*(G)
    CorollaryPrimePower  // 1 - N^q + N^{2q} - ... == 0 (mod p), for |S| >= D*(G) + q - 1
};

struct CongruenceReport {
    CongruenceStatement statement;
    std::string inputs;
    std::int64_t prime;
    int lhs_residue;             // in [0, p)
    bool holds;                  // lhs_residue == 0
    bool length_hypothesis_met;  // whether the statement's length bound applied
};

CongruenceReport olson_alternating(const Sequence& s, std::int64_t p, const DpBudget& budget = {});
CongruenceReport corollary_pn(const Sequence& s, std::int64_t p, std::int64_t q, const DpBudget& budget = {});

/// Double-counting identity over all sub-multiset windows of size m:
///   sum_{T | S, |T| = m} N^j(T) = C(|S| - j, m - j) * N^j(S), exactly.
struct WindowReport {
    int j;
    int m;
    BigInt lhs;
    BigInt rhs;
    bool holds;
};
WindowReport window_identity_check(const Sequence& s, int j, int m, const DpBudget& budget = {});

/// C(a, b) mod p via digit-wise binomials of the p-adic expansions.
int lucas_binomial(std::int64_t a, std::int64_t b, std::int64_t p);

/// The (k+1)x(k+1) binomial matrix with all-ones first row and columns
/// C(a+k, .), C(2k-1, .), ..., C(k, .); its determinant equals
/// (-1)^{k(k+1)/2} * C(a, k).
struct DetIdentityReport {
    BigInt det;
    BigInt formula_value;
    bool match;
};
DetIdentityReport lemma6_matrix_det(std::int64_t a, std::int64_t k);

/// The modular rank computation behind the s_{<= D-k} upper bound: for
/// |S| = r p^n - r + 1 + k the augmented binomial system has rank k+1 while
/// its coefficient matrix has rank at most k.
struct RankArgumentReport {
    std::int64_t p, n, r, k;
    int rank_coefficient;  // rank of A mod p
    int rank_augmented;    // rank of (b, A) mod p
    int lucas_residue;     // C(p - r + 1, k) mod p, the Lucas reduction of det(b, A) up to sign
    bool certified;        // rank_coefficient <= k and rank_augmented == k + 1
};
RankArgumentReport theorem3_rank_argument(std::int64_t p, std::int64_t n, std::int64_t r, std::int64_t k);

}  // namespace zerosum

#pragma once

#include "zerosum/lengthset.hpp"
#include "zerosum/sequence.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

namespace zerosum {

struct Budget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

enum class CertStatus { Exhaustive, LowerBoundOnly };

/// Outcome of a maximum-avoiding-sequence search. When status is Exhaustive,
/// no sequence of length witness_length + 1 avoids the length set, so
/// s_L(G) = witness_length + 1.
struct ExtremalCertificate {
    GroupSpec group;
    LengthSet avoided;
    Sequence witness;
    int witness_length;
    CertStatus status;
    std::uint64_t nodes_explored;
    double elapsed_seconds;
};

/// A pending DFS subtree: extensions of `prefix` by elements >= min_next
/// (nondecreasing rank order, subject to the same depth-1/2 symmetry filters).
struct WorkItem {
    std::vector<std::int32_t> prefix;
    std::int32_t min_next = 0;
};

struct SearchOptions {
    Budget budget;
    unsigned workers = 1;
    bool use_symmetry = true;
    // Resume state from a checkpoint: the remaining work plus the best found so far.
    std::vector<WorkItem> resume_items;
    std::optional<std::vector<std::int32_t>> resume_best;
    std::uint64_t resume_nodes = 0;
};

struct SearchRun {
    ExtremalCertificate certificate;
    std::vector<WorkItem> frontier;  // nonempty iff the budget ran out
};

/// DFS for the longest sequence over G with no zero-sum subsequence of length
/// in `avoid`. Requires |G| <= 1024 and an avoid set containing a multiple of
/// exp(G) (otherwise no finite maximum exists).
SearchRun max_avoiding(const GroupSpec& g, const LengthSet& avoid, const SearchOptions& options = {});

struct SLResult {
    std::int64_t value;  // s_L(G) when exact; otherwise the sound lower bound witness_length + 1
    bool exact;
    ExtremalCertificate certificate;
};
SLResult compute_s_L(const GroupSpec& g, const LengthSet& avoid, const SearchOptions& options = {});

/// Exhaustively confirms that no sequence of length `len` over G avoids the
/// set, i.e. s_L(G) <= len.
struct UpperBoundCheck {
    bool conclusive;  // false when the budget ran out first
    bool confirmed;
    std::optional<Sequence> counterexample;  // a length-len avoider when refuted
    std::uint64_t nodes_explored;
    double elapsed_seconds;
    std::vector<WorkItem> frontier;
};
UpperBoundCheck verify_upper_bound(const GroupSpec& g, const LengthSet& avoid, int len,
                                   const SearchOptions& options = {});

/// Resumable search state, as a versioned line-oriented text file.
struct Checkpoint {
    GroupSpec group{std::vector<std::int64_t>{2}};
    LengthSet avoided = LengthSet::all_nonempty();
    int depth_cap = -1;  // -1: max search; >= 0: verify_upper_bound at that depth
    bool use_symmetry = true;
    bool complete = false;
    std::uint64_t nodes = 0;
    std::vector<WorkItem> items;
    std::optional<std::vector<std::int32_t>> best;
};
void write_checkpoint(std::ostream& out, const Checkpoint& cp);
Checkpoint read_checkpoint(std::istream& in);

}  // namespace zerosum

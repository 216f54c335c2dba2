#pragma once

#include "zerosum/group.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace zerosum {

/// Automorphism acting coordinate-wise: x -> (unit * x[perm[i]]) mod n_i,
/// where perm only permutes coordinates with equal invariant factors.
struct CoordAutomorphism {
    std::vector<int> perm;
    std::int64_t unit;
};

std::vector<CoordAutomorphism> perm_unit_automorphisms(const GroupSpec& g);
Element apply_coord_automorphism(const CoordAutomorphism& a, const Element& x, const GroupSpec& g);

/// Enumerates every invertible r x r matrix over F_p (row-major flat form).
/// Guarded: throws ResourceError when p^(r*r) is too large to stream.
void for_each_invertible_matrix(std::int64_t p, int r, const std::function<void(const std::vector<std::int64_t>&)>& fn);
Element apply_matrix(const std::vector<std::int64_t>& m, const Element& x, std::int64_t p);

/// All automorphisms in the group's symmetry action, as permutations of element
/// ranks. Guarded by a memory cap; intended for small groups (tests, search).
std::vector<std::vector<std::int32_t>> automorphism_rank_perms(const GroupSpec& g);

/// First elements and first-pairs that are lexicographic minima of their
/// orbits, used as the depth-1/depth-2 filters of the extremal search.
struct SymmetryReps {
    std::vector<std::int32_t> first;                 // sorted ranks
    std::vector<std::vector<std::int32_t>> second;   // parallel to first; sorted, each >= the first rank
};
SymmetryReps search_symmetry_reps(const GroupSpec& g);

}  // namespace zerosum

#include "doctest.h"

#include "zerosum/symmetry.hpp"

#include <algorithm>
#include <set>

using namespace zerosum;

namespace {

// Brute-force reference: orbit minima computed straight from the enumerated
// automorphism permutations.
SymmetryReps brute_reps(const GroupSpec& g) {
    const auto perms = automorphism_rank_perms(g);
    const std::int64_t n = g.order();
    SymmetryReps reps;
    for (std::int32_t e = 0; e < n; ++e) {
        bool minimal = true;
        for (const auto& perm : perms)
            if (perm[static_cast<std::size_t>(e)] < e) minimal = false;
        if (!minimal) continue;
        reps.first.push_back(e);
        std::vector<std::int32_t> seconds;
        for (std::int32_t f = e; f < n; ++f) {
            std::pair<std::int32_t, std::int32_t> mine{e, f};
            bool canonical = true;
            for (const auto& perm : perms) {
                auto a = perm[static_cast<std::size_t>(e)], b = perm[static_cast<std::size_t>(f)];
                if (a > b) std::swap(a, b);
                if (std::pair{a, b} < mine) canonical = false;
            }
            if (canonical) seconds.push_back(f);
        }
        reps.second.push_back(seconds);
    }
    return reps;
}

}  // namespace

TEST_CASE("elementary abelian reps match the full linear enumeration") {
    for (const char* spec : {"3,3", "3,3,3", "2,2,2", "5,5"}) {
        const GroupSpec g = GroupSpec::parse(spec);
        const SymmetryReps fast = search_symmetry_reps(g);
        const SymmetryReps brute = brute_reps(g);
        CHECK(fast.first == brute.first);
        REQUIRE(fast.second.size() == brute.second.size());
        for (std::size_t i = 0; i < fast.second.size(); ++i) CHECK(fast.second[i] == brute.second[i]);
    }
}

TEST_CASE("full linear group sizes") {
    // |GL(r, p)| = prod (p^r - p^i)
    CHECK(automorphism_rank_perms(GroupSpec::parse("3,3")).size() == 48);
    CHECK(automorphism_rank_perms(GroupSpec::parse("3,3,3")).size() == 11232);
    CHECK(automorphism_rank_perms(GroupSpec::parse("2,2,2")).size() == 168);
}

TEST_CASE("perm-unit reps for homocyclic non-elementary groups") {
    const GroupSpec g = GroupSpec::parse("9,9");
    const auto autos = perm_unit_automorphisms(g);
    CHECK(autos.size() == 2 * 6);  // 2 coordinate perms, phi(9) = 6 units

    const SymmetryReps reps = search_symmetry_reps(g);
    // every element must be reachable from some rep
    std::set<std::int32_t> covered;
    const auto perms = automorphism_rank_perms(g);
    for (auto e : reps.first)
        for (const auto& perm : perms) covered.insert(perm[static_cast<std::size_t>(e)]);
    CHECK(covered.size() == static_cast<std::size_t>(g.order()));
}

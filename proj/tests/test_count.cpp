#include "doctest.h"

#include "zerosum/construct.hpp"
#include "zerosum/count.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/random.hpp"
#include "zerosum/selftest.hpp"

#include <algorithm>

using namespace zerosum;

namespace {
const GroupSpec c3 = GroupSpec::parse("3");
const GroupSpec c333 = GroupSpec::parse("3,3,3");

Sequence repeated(const GroupSpec& g, const char* elem, int times) {
    Sequence s(g);
    s.push(g.parse_element(elem), times);
    return s;
}
}  // namespace

TEST_CASE("count_table on all-zero and all-one sequences") {
    const auto zeros = count_table(repeated(c3, "0", 3));
    CHECK(zeros.counts == std::vector<BigInt>{1, 3, 3, 1});  // every subset sums to zero

    const auto ones = count_table(repeated(c3, "1", 3));
    CHECK(ones.counts == std::vector<BigInt>{1, 0, 0, 1});  // only the full sequence

    const auto empty = count_table(Sequence(c3));
    CHECK(empty.counts == std::vector<BigInt>{1});
}

TEST_CASE("count_table on the minimal zero-sum construction") {
    const auto table = count_table(construct_thm2_lower(3, 3));
    REQUIRE(table.source_length == 7);
    CHECK(table.at(0) == 1);
    for (int k = 1; k <= 6; ++k) CHECK(table.at(k) == 0);
    CHECK(table.at(7) == 1);
}

TEST_CASE("count table basic invariants") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Sequence s = rng.sequence(c333, static_cast<int>(rng.below(11)));
        const auto table = count_table(s);
        REQUIRE(static_cast<int>(table.counts.size()) == s.length() + 1);
        CHECK(table.at(0) == 1);
        for (int k = 0; k <= s.length(); ++k) CHECK(table.at(k) <= binomial(s.length(), k));
    }
    const auto zeros = count_table(repeated(c333, "0,0,0", 9));
    for (int k = 0; k <= 9; ++k) CHECK(zeros.at(k) == binomial(9, k));
}

TEST_CASE("count_table equals subset enumeration") {
    Rng rng(29);
    const char* groups[] = {"3", "9", "3,3", "2,2,2", "3,3,3", "2,4"};
    for (int trial = 0; trial < 60; ++trial) {
        const GroupSpec g = GroupSpec::parse(groups[rng.below(std::size(groups))]);
        const Sequence s = rng.sequence(g, static_cast<int>(rng.below(13)));
        CHECK(count_table(s).counts == reference_count_table(s));
    }
}

TEST_CASE("count_mod_p matches the exact table") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Sequence s = rng.sequence(c333, 12);
        const auto exact = count_table(s);
        const auto mod3 = count_mod_p(s, 3);
        REQUIRE(mod3.size() == exact.counts.size());
        for (std::size_t k = 0; k < mod3.size(); ++k) CHECK(mod3[k] == mod_reduce(exact.counts[k], 3));
    }
    const auto ones = count_mod_p(repeated(c3, "1", 3), 3);
    CHECK(ones == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("find_zero_sum_of_length witnesses") {
    SUBCASE("k = 0 always yields the empty witness") {
        Rng rng(37);
        const Sequence s = rng.sequence(c333, 5);
        const auto w = find_zero_sum_of_length(s, 0);
        REQUIRE(w);
        CHECK(w->sub.length() == 0);
    }
    SUBCASE("unique candidate") {
        Sequence s(c333);
        s.push(c333.parse_element("1,0,0"), 3);
        s.push(c333.parse_element("0,1,0"));
        const auto w = find_zero_sum_of_length(s, 3);
        REQUIRE(w);
        CHECK(w->sub == repeated(c333, "1,0,0", 3));
    }
    SUBCASE("length-13 sequences always contain a length-6 zero-sum") {
        Rng rng(41);
        for (int trial = 0; trial < 100; ++trial) {
            const Sequence s = rng.sequence(c333, 13);
            const auto w = find_zero_sum_of_length(s, 6);
            REQUIRE(w);
            CHECK(w->sub.length() == 6);
            CHECK(w->sub.sigma() == c333.zero());
            CHECK(s.contains(w->sub));
        }
    }
    SUBCASE("out of range k") {
        CHECK_THROWS_AS(find_zero_sum_of_length(Sequence(c3), 1), DomainError);
    }
}

TEST_CASE("finder agrees with the count table") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const Sequence s = rng.sequence(c333, static_cast<int>(rng.below(11)));
        const auto table = count_table(s);
        for (int k = 0; k <= s.length(); ++k) {
            const auto w = find_zero_sum_of_length(s, k);
            CHECK(w.has_value() == (table.at(k) > 0));
        }
    }
}

TEST_CASE("witness extraction is deterministic") {
    Rng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        const Sequence s = rng.sequence(c333, 10);
        const auto a = find_zero_sum_length_in(s, LengthSet::range(1, 10));
        const auto b = find_zero_sum_length_in(s, LengthSet::range(1, 10));
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->sub == b->sub);
    }
}

TEST_CASE("find_zero_sum_length_in prefers the smallest length") {
    Sequence s(c333);
    s.push(c333.zero());
    s.push(c333.parse_element("1,0,0"), 3);
    const auto w = find_zero_sum_length_in(s, LengthSet::range(1, 4));
    REQUIRE(w);
    CHECK(w->target_length == 1);
    CHECK(w->sub.multiplicity(c333.zero()) == 1);

    // Theorem 1.5's S_0 at p=3: nothing of length <= 4, but {5,6} hits
    const Sequence s0 = construct_thm6_lower(3, 1);
    CHECK(!find_zero_sum_length_in(s0, LengthSet::range(1, 4)));
    const auto w56 = find_zero_sum_length_in(s0, LengthSet::parse("5..6"));
    REQUIRE(w56);
    CHECK(w56->target_length == 5);
}

TEST_CASE("zero-sum length spectrum") {
    CHECK(zero_sum_length_spectrum(construct_thm2_lower(3, 3)) == std::vector<int>{7});  // minimal
    CHECK(zero_sum_length_spectrum(construct_cor5_lower(3, 1)) == std::vector<int>{6});
    CHECK(zero_sum_length_spectrum(construct_thm6_lower(5, 1)) == std::vector<int>{9, 10});
}

TEST_CASE("count table is symmetry invariant") {
    Rng rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        const Sequence s = rng.sequence(c333, 1 + static_cast<int>(rng.below(9)));
        CHECK(count_table(s).counts == count_table(canonical_form(s)).counts);
    }
}

TEST_CASE("resource budget errors name the bound") {
    DpBudget tiny;
    tiny.max_table_cells = 8;
    const Sequence s = repeated(c333, "1,0,0", 4);
    CHECK_THROWS_WITH_AS(count_table(s, tiny), doctest::Contains("max_table_cells"), ResourceError);
    DpBudget tiny_layers;
    tiny_layers.max_layer_bytes = 16;
    CHECK_THROWS_WITH_AS(find_zero_sum_of_length(s, 3, tiny_layers), doctest::Contains("max_layer_bytes"),
                         ResourceError);
}

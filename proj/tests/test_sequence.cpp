#include "doctest.h"

#include "zerosum/construct.hpp"
#include "zerosum/count.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/random.hpp"
#include "zerosum/sequence.hpp"

using namespace zerosum;

namespace {
const GroupSpec c333 = GroupSpec::parse("3,3,3");
}

TEST_CASE("length and sigma") {
    Sequence s(c333);
    CHECK(s.length() == 0);
    CHECK(s.sigma() == c333.zero());

    s.push(c333.parse_element("1,0,0"), 2);
    s.push(c333.parse_element("0,1,0"));
    CHECK(s.length() == 3);
    CHECK(s.sigma() == c333.parse_element("2,1,0"));

    Sequence cubes(c333);
    cubes.push(c333.parse_element("1,2,1"), 3);
    CHECK(cubes.sigma() == c333.zero());  // exponent kills

    // Theorem 1.3's S_0 at p=3, r=3 has length rp - r + 1 = 7 and sum zero
    const Sequence s0 = construct_thm2_lower(3, 3);
    CHECK(s0.length() == 7);
    CHECK(s0.sigma() == c333.zero());
}

TEST_CASE("remove is exact multiset difference") {
    Sequence s(c333);
    s.push(c333.parse_element("1,0,0"), 3);
    s.push(c333.parse_element("0,1,0"));

    CHECK(s.remove(s).length() == 0);

    Sequence one(c333);
    one.push(c333.parse_element("1,0,0"));
    const Sequence rest = s.remove(one);
    CHECK(rest.length() == 3);
    CHECK(rest.multiplicity(c333.parse_element("1,0,0")) == 2);

    Sequence missing(c333);
    missing.push(c333.parse_element("2,2,2"));
    CHECK_THROWS_AS(s.remove(missing), NotContainedError);
    Sequence toomany(c333);
    toomany.push(c333.parse_element("0,1,0"), 2);
    CHECK_THROWS_AS(s.remove(toomany), NotContainedError);
}

TEST_CASE("remove then concat restores; sigma is additive") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Sequence s = rng.sequence(c333, 2 + static_cast<int>(rng.below(8)));
        // random subsequence
        Sequence t(c333);
        for (const auto& [elem, mult] : s.entries()) {
            const int take = static_cast<int>(rng.below(static_cast<std::uint64_t>(mult) + 1));
            if (take > 0) t.push(elem, take);
        }
        const Sequence rest = s.remove(t);
        CHECK(rest.concat(t) == s);
        CHECK(rest.length() == s.length() - t.length());
        CHECK(c333.add(rest.sigma(), t.sigma()) == s.sigma());
    }
}

TEST_CASE("sequence file round trip") {
    const Sequence parsed = Sequence::parse("# comment\ngroup 3,3,3\n1,0,0 x2\n0,1,0\n# more\n1,0,0\n");
    CHECK(parsed.length() == 4);
    CHECK(parsed.multiplicity(c333.parse_element("1,0,0")) == 3);  // aggregated
    CHECK(parsed.multiplicity(c333.parse_element("0,1,0")) == 1);

    CHECK(Sequence::parse(parsed.serialize()) == parsed);

    const Sequence empty = Sequence::parse("group 5,5\n");
    CHECK(empty.length() == 0);
    CHECK(empty.serialize() == "group 5,5\n");

    // round-trip an emitted construction
    const Sequence s0 = construct_thm6_lower(3, 1);
    CHECK(Sequence::parse(s0.serialize()) == s0);
}

TEST_CASE("sequence parse errors carry line numbers") {
    CHECK_THROWS_AS(Sequence::parse(""), ParseError);
    CHECK_THROWS_AS(Sequence::parse("1,0,0\n"), ParseError);  // missing header
    try {
        Sequence::parse("group 3,3,3\n1,0,0\n9,0,0\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);  // residue out of range
    }
    try {
        Sequence::parse("group 3,3,3\n1,0,0 x0\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);  // zero multiplicity
    }
    CHECK_THROWS_AS(Sequence::parse("group 3,3,3\n1,0\n"), ParseError);
    CHECK_THROWS_AS(Sequence::parse("group 3,3,3\n1,0,0 y2\n"), ParseError);
}

TEST_CASE("canonical form identifies symmetric sequences") {
    Sequence a(c333);
    a.push(c333.parse_element("1,0,0"), 2);
    Sequence b(c333);
    b.push(c333.parse_element("0,1,0"), 2);
    CHECK(canonical_form(a) == canonical_form(b));  // coordinate permutation

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Sequence s = rng.sequence(c333, 1 + static_cast<int>(rng.below(6)));
        Sequence doubled(c333);
        for (const auto& [elem, mult] : s.entries()) doubled.push(c333.scalar_mul(2, elem), mult);
        CHECK(canonical_form(s) == canonical_form(doubled));  // unit scaling
        CHECK(canonical_form(canonical_form(s)) == canonical_form(s));  // idempotent
        CHECK(canonical_form(s).length() == s.length());
    }
}

TEST_CASE("canonical form preserves the zero-sum length spectrum") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const Sequence s = rng.sequence(c333, 1 + static_cast<int>(rng.below(8)));
        const Sequence c = canonical_form(s);
        CHECK(count_table(s).counts == count_table(c).counts);
    }
    // and for a non-elementary group under the weaker action
    const GroupSpec c99 = GroupSpec::parse("9,9");
    Rng rng2(18);
    for (int trial = 0; trial < 15; ++trial) {
        const Sequence s = rng2.sequence(c99, 1 + static_cast<int>(rng2.below(7)));
        CHECK(count_table(s).counts == count_table(canonical_form(s)).counts);
        CHECK(canonical_form(canonical_form(s)) == canonical_form(s));
    }
}

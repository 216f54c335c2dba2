#include "doctest.h"

#include "zerosum/errors.hpp"
#include "zerosum/lengthset.hpp"

using namespace zerosum;

TEST_CASE("length set parsing") {
    const LengthSet r = LengthSet::parse("1..5");
    CHECK(r.contains(1));
    CHECK(r.contains(5));
    CHECK(!r.contains(6));
    CHECK(r.max() == 5);
    CHECK(r.to_string() == "1..5");

    CHECK(LengthSet::parse("{9}").contains(9));
    CHECK(LengthSet::parse("9") == LengthSet::singleton(9));
    const LengthSet u = LengthSet::parse("1..4,9");
    CHECK(u.contains(4));
    CHECK(!u.contains(5));
    CHECK(u.contains(9));
    CHECK(u.max() == 9);

    const LengthSet all = LengthSet::parse("all");
    CHECK(all.is_all_nonempty());
    CHECK(all.contains(123456));
    CHECK_THROWS_AS(all.max(), DomainError);

    CHECK_THROWS_AS(LengthSet::parse(""), ParseError);
    CHECK_THROWS_AS(LengthSet::parse("5..1"), ParseError);
    CHECK_THROWS_AS(LengthSet::parse("0..3"), ParseError);
    CHECK_THROWS_AS(LengthSet::parse("a..b"), ParseError);
}

TEST_CASE("length set membership helpers") {
    const LengthSet u = LengthSet::parse("2..4,8..9");
    CHECK(u.members(1, 10) == std::vector<int>{2, 3, 4, 8, 9});
    CHECK(u.members(5, 7).empty());
    CHECK(u.contains_multiple_of(3));
    CHECK(u.contains_multiple_of(8));
    CHECK(!u.contains_multiple_of(5));
    CHECK(LengthSet::parse("1..2").contains_multiple_of(1));
    CHECK(!LengthSet::parse("1..2").contains_multiple_of(3));
    CHECK(LengthSet::all_nonempty().contains_multiple_of(17));
}

TEST_CASE("length set normalization merges ranges") {
    const LengthSet u = LengthSet::parse("3,1..2,4..6");
    CHECK(u.to_string() == "1..6");
    CHECK(u == LengthSet::range(1, 6));
}

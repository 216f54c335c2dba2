#include "doctest.h"

#include "zerosum/construct.hpp"
#include "zerosum/count.hpp"
#include "zerosum/errors.hpp"

using namespace zerosum;

TEST_CASE("thm2 minimal zero-sum sequences") {
    const Sequence a = construct_thm2_lower(3, 3);
    CHECK(a.length() == 7);
    CHECK(zero_sum_length_spectrum(a) == std::vector<int>{7});

    const Sequence b = construct_thm2_lower(5, 3);
    CHECK(b.length() == 13);
    CHECK(zero_sum_length_spectrum(b) == std::vector<int>{13});

    const Sequence c = construct_thm2_lower(5, 4);
    CHECK(c.length() == 17);
    CHECK(zero_sum_length_spectrum(c) == std::vector<int>{17});

    CHECK_THROWS_AS(construct_thm2_lower(4, 3), DomainError);
    CHECK_THROWS_AS(construct_thm2_lower(3, 1), DomainError);
}

TEST_CASE("thm3 lower-bound sequences") {
    // length D(G) + ceil(k/(r-1)) - 1; shortest zero-sum r p^n - (r-1) ceil(k/(r-1))
    const Sequence a = construct_thm3_lower(5, 1, 3, 2);
    CHECK(a.length() == 13);
    CHECK(zero_sum_length_spectrum(a).front() == 13);  // > D - k = 11

    const Sequence b = construct_thm3_lower(5, 1, 3, 3);
    CHECK(b.length() == 14);
    CHECK(zero_sum_length_spectrum(b).front() == 11);  // > D - k = 10

    const Sequence c = construct_thm3_lower(7, 1, 3, 2);
    CHECK(c.length() == 19);
    CHECK(zero_sum_length_spectrum(c).front() == 19);  // > D - k = 17

    CHECK_THROWS_AS(construct_thm3_lower(5, 1, 3, 4), DomainError);
    CHECK_THROWS_AS(construct_thm3_lower(5, 1, 5, 2), DomainError);
    CHECK_THROWS_AS(construct_thm3_lower(5, 1, 3, 1), DomainError);
}

TEST_CASE("thm6 lower-bound sequences") {
    const Sequence a = construct_thm6_lower(3, 1);
    CHECK(a.length() == 9);
    CHECK(zero_sum_length_spectrum(a) == std::vector<int>{5, 6});

    const Sequence b = construct_thm6_lower(5, 1);
    CHECK(b.length() == 17);
    CHECK(zero_sum_length_spectrum(b) == std::vector<int>{9, 10});

    const Sequence c = construct_thm6_lower(3, 2);
    CHECK(c.length() == 33);
    CHECK(zero_sum_length_spectrum(c) == std::vector<int>{17, 18});

    CHECK_THROWS_AS(construct_thm6_lower(2, 1), DomainError);
}

TEST_CASE("cor5 lower-bound sequences") {
    const Sequence a = construct_cor5_lower(3, 1);
    CHECK(a.length() == 8);
    CHECK(zero_sum_length_spectrum(a) == std::vector<int>{6});

    const Sequence b = construct_cor5_lower(5, 1);
    CHECK(b.length() == 16);
    CHECK(zero_sum_length_spectrum(b) == std::vector<int>{10});

    const Sequence c = construct_cor5_lower(3, 2);
    CHECK(c.length() == 32);
    CHECK(zero_sum_length_spectrum(c) == std::vector<int>{18});
}

TEST_CASE("EGZ lower-bound sequences") {
    const GroupSpec c333 = GroupSpec::parse("3,3,3");
    const Sequence a = construct_egz_lower(c333, 1);
    CHECK(a.length() == 8);
    CHECK(count_table(a).at(3) == 0);

    const Sequence b = construct_egz_lower(c333, 3);
    CHECK(b.length() == 14);
    CHECK(count_table(b).at(9) == 0);

    const GroupSpec c3 = GroupSpec::parse("3");
    const Sequence c = construct_egz_lower(c3, 1);
    CHECK(c.length() == 4);  // 0^[2] 1^[2], matching s(C_3) = 5
    CHECK(c.multiplicity(c3.zero()) == 2);
    CHECK(count_table(c).at(3) == 0);

    // non-p-group path goes through the exhaustive search
    const GroupSpec c26 = GroupSpec::parse("2,6");
    const Sequence d = construct_egz_lower(c26, 1);
    CHECK(count_table(d).at(6) == 0);

    CHECK_THROWS_AS(construct_egz_lower(c333, 0), DomainError);
}

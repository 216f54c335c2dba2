#include "doctest.h"

#include "zerosum/errors.hpp"
#include "zerosum/group.hpp"
#include "zerosum/random.hpp"

using namespace zerosum;

TEST_CASE("group spec parsing and structure") {
    const GroupSpec g = GroupSpec::parse("3^2^3");
    CHECK(g.to_string() == "9,9,9");
    CHECK(g.rank() == 3);
    CHECK(g.exponent() == 9);
    CHECK(g.order() == 729);
    CHECK(g.davenport_star() == 25);

    const GroupSpec h = GroupSpec::parse("3,3,3");
    CHECK(h.davenport_star() == 7);
    CHECK(GroupSpec::parse("3,3").davenport_star() == 5);
    CHECK(GroupSpec::parse("5,5,5").davenport_star() == 13);

    CHECK(GroupSpec::parse("2,6").order() == 12);
    CHECK_THROWS_AS(GroupSpec::parse("2,3"), DomainError);   // divisibility chain
    CHECK_THROWS_AS(GroupSpec::parse("1,3"), DomainError);
    CHECK_THROWS_AS(GroupSpec::parse("4^1^2"), ParseError);  // shorthand needs p prime
    CHECK_THROWS_AS(GroupSpec::parse("3^2"), ParseError);
    CHECK_THROWS_AS(GroupSpec::parse(""), ParseError);
}

TEST_CASE("davenport star closed forms") {
    for (std::int64_t p : {2, 3, 5, 7})
        for (int r = 1; r <= 4; ++r)
            CHECK(GroupSpec(std::vector<std::int64_t>(r, p)).davenport_star() == r * (p - 1) + 1);
    // D*(C_{p^n}^3) = 3 p^n - 2
    CHECK(GroupSpec::parse("3^1^3").davenport_star() == 7);
    CHECK(GroupSpec::parse("3^2^3").davenport_star() == 25);
    CHECK(GroupSpec::parse("3^3^3").davenport_star() == 79);
    CHECK(GroupSpec::parse("5^2^3").davenport_star() == 73);
}

TEST_CASE("element arithmetic") {
    const GroupSpec c333 = GroupSpec::parse("3,3,3");
    const GroupSpec c999 = GroupSpec::parse("9,9,9");

    CHECK(c333.add(c333.parse_element("1,0,0"), c333.parse_element("2,0,0")) == c333.zero());
    CHECK(c333.add(c333.parse_element("1,1,1"), c333.zero()) == c333.parse_element("1,1,1"));
    CHECK(c999.add(c999.parse_element("5,5,5"), c999.parse_element("4,4,4")) == c999.zero());

    CHECK(c333.scalar_mul(3, c333.parse_element("1,1,1")) == c333.zero());
    CHECK(c333.scalar_mul(-1, c333.parse_element("1,1,0")) == c333.parse_element("2,2,0"));
    CHECK(c999.scalar_mul(2, c999.parse_element("4,0,1")) == c999.parse_element("8,0,2"));

    CHECK(c333.order_of(c333.zero()) == 1);
    CHECK(c999.order_of(c999.parse_element("1,0,0")) == 9);
    CHECK(c999.order_of(c999.parse_element("3,0,0")) == 3);

    CHECK_THROWS_AS(c333.add(c333.zero(), GroupSpec::parse("3,3").zero()), InvalidElementError);
    CHECK_THROWS_AS(c333.parse_element("1,0"), ParseError);
    CHECK_THROWS_AS(c333.parse_element("3,0,0"), InvalidElementError);
}

TEST_CASE("rank order matches lexicographic element order") {
    const GroupSpec g = GroupSpec::parse("3,9");
    Element prev = g.element_at(0);
    for (std::int64_t r = 1; r < g.order(); ++r) {
        const Element cur = g.element_at(r);
        CHECK(prev < cur);
        CHECK(g.rank_of(cur) == r);
        prev = cur;
    }
}

TEST_CASE("projection homomorphism") {
    const GroupSpec c999 = GroupSpec::parse("9,9,9");
    const GroupSpec c333 = projected_group(c999);
    CHECK(c333.to_string() == "3,3,3");

    CHECK(projection_hom(c999.parse_element("1,0,0"), c999) == c333.parse_element("1,0,0"));
    CHECK(projection_hom(c999.parse_element("3,6,0"), c999) == c333.zero());
    CHECK(projection_hom(c999.parse_element("8,4,2"), c999) == c333.parse_element("2,1,2"));

    CHECK_THROWS_AS(projection_hom(c333.zero(), c333), DomainError);  // n < 2 unsupported
    CHECK_THROWS_AS(projected_group(GroupSpec::parse("3,9")), DomainError);

    // homomorphism property on random pairs
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Element a = rng.element(c999), b = rng.element(c999);
        CHECK(projection_hom(c999.add(a, b), c999) ==
              c333.add(projection_hom(a, c999), projection_hom(b, c999)));
    }
}

TEST_CASE("kernel identification") {
    const GroupSpec c999 = GroupSpec::parse("9,9,9");
    const GroupSpec c333 = kernel_group(c999);
    CHECK(c333.to_string() == "3,3,3");

    CHECK(kernel_iso(c999.parse_element("3,6,0"), c999) == c333.parse_element("1,2,0"));
    CHECK(kernel_iso(c999.zero(), c999) == c333.zero());
    const GroupSpec c27 = GroupSpec::parse("27,27,27");
    CHECK(kernel_iso(c27.parse_element("6,3,3"), c27) == GroupSpec::parse("9,9,9").parse_element("2,1,1"));

    CHECK_THROWS_AS(kernel_iso(c999.parse_element("1,0,0"), c999), NotInKernelError);

    // bijection onto the kernel and additivity
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Element a = c999.scalar_mul(3, rng.element(c999));  // arbitrary kernel element
        const Element b = c999.scalar_mul(3, rng.element(c999));
        CHECK(kernel_iso_inv(kernel_iso(a, c999), c999) == a);
        CHECK(kernel_iso(c999.add(a, b), c999) == c333.add(kernel_iso(a, c999), kernel_iso(b, c999)));
    }
}

TEST_CASE("group classification helpers") {
    CHECK(*GroupSpec::parse("9,9,9").p_group_prime() == 3);
    CHECK(!GroupSpec::parse("2,6").p_group_prime());
    auto hp = GroupSpec::parse("27,27,27").homocyclic_prime_power();
    REQUIRE(hp);
    CHECK(hp->first == 3);
    CHECK(hp->second == 3);
    CHECK(!GroupSpec::parse("3,9").homocyclic_prime_power());
    CHECK(*GroupSpec::parse("5,5,5").elementary_abelian_prime() == 5);
    CHECK(!GroupSpec::parse("9,9,9").elementary_abelian_prime());
}

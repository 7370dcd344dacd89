#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permdes/permset_io.hpp"
#include "permdes/permutation.hpp"
#include "test_support.hpp"

using namespace permdes;
using permdes::testing::cycle;
using permdes::testing::perm;
using permdes::testing::random_perm;

TEST_CASE("compose applies the right factor first")
{
    const auto p = perm({2, 3, 1, 4});
    const auto q = perm({1, 2, 4, 3});
    const auto r = compose(p, q);
    for (int x = 0; x < 4; ++x) {
        CHECK(r(x) == p(q(x)));
    }
    CHECK(compose(Permutation::identity(4), p) == p);
    CHECK(compose(p, inverse(p)).is_identity());
    const auto swap12 = cycle(4, {1, 2});
    CHECK(compose(swap12, swap12).is_identity());
    CHECK_THROWS_AS(compose(p, Permutation::identity(5)), Error);
}

TEST_CASE("inverse")
{
    CHECK(inverse(Permutation::identity(6)).is_identity());
    CHECK(inverse(cycle(3, {1, 2, 3})) == cycle(3, {1, 3, 2}));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_perm(8, rng);
        CHECK(inverse(inverse(p)) == p);
    }
}

TEST_CASE("fixed points")
{
    CHECK(fixed_points(Permutation::identity(5)) == 5);
    CHECK(fixed_points(cycle(5, {1, 2})) == 3);
    CHECK(fixed_points(cycle(5, {1, 2, 3, 4, 5})) == 0);
}

TEST_CASE("distance examples")
{
    std::mt19937_64 rng(11);
    const auto sigma = random_perm(6, rng);
    CHECK(distance(sigma, sigma) == 0);
    CHECK(distance(sigma, compose(sigma, cycle(6, {1, 2}))) == 2);
    CHECK(distance(Permutation::identity(4), cycle(4, {1, 2, 3, 4})) == 4);
    CHECK_THROWS_AS(distance(sigma, Permutation::identity(5)), Error);
}

TEST_CASE("distance equals n minus fixed points of p q^-1")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_perm(7, rng);
        const auto q = random_perm(7, rng);
        CHECK(distance(p, q) == 7 - fixed_points(compose(p, inverse(q))));
    }
}

TEST_CASE("metric axioms on random samples")
{
    std::mt19937_64 rng(2024);
    for (int n : {2, 3, 5, 8, 12}) {
        for (int i = 0; i < 300; ++i) {
            const auto p = random_perm(n, rng);
            const auto q = random_perm(n, rng);
            const auto r = random_perm(n, rng);
            const int d = distance(p, q);
            CHECK(d == distance(q, p));
            CHECK((d == 0) == (p == q));
            CHECK(d != 1);
            CHECK(d <= n);
            CHECK(distance(p, r) <= d + distance(q, r));
            // Left and right invariance.
            CHECK(distance(compose(r, p), compose(r, q)) == d);
            CHECK(distance(compose(p, r), compose(q, r)) == d);
        }
    }
}

TEST_CASE("permutation validation")
{
    CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{}), Error);
    CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{0, 0, 2}), Error);
    CHECK_THROWS_AS(Permutation(std::vector<std::uint8_t>{0, 3, 1}), Error);
    CHECK(perm({3, 1, 2}).to_string() == "3 1 2");
}

TEST_CASE("parse_permset")
{
    SUBCASE("worked example")
    {
        const auto set = parse_permset("3 2\n1 2 3\n2 3 1\n");
        CHECK(set.degree() == 3);
        REQUIRE(set.size() == 2);
        CHECK(set[0].is_identity());
        CHECK(set[1] == cycle(3, {1, 2, 3}));
    }
    SUBCASE("comments, blank lines and CRLF")
    {
        const auto set = parse_permset("# cyclic 3\n\n3 3\r\n1 2 3\r\n2 3 1\n# mid\n3 1 2");
        CHECK(set.size() == 3);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_WITH_AS(parse_permset("3 1\n1 1 3\n"), doctest::Contains("not a bijection"), Error);
        CHECK_THROWS_WITH_AS(parse_permset("3 2\n1 2 3\n1 2 3\n"), doctest::Contains("duplicate"), Error);
        CHECK_THROWS_WITH_AS(parse_permset("3 3\n1 2 3\n2 3 1\n"), doctest::Contains("count mismatch"), Error);
        CHECK_THROWS_WITH_AS(parse_permset("3\n1 2 3\n"), doctest::Contains("header"), Error);
        CHECK_THROWS_WITH_AS(parse_permset("x y\n"), doctest::Contains("integers"), Error);
        CHECK_THROWS_AS(parse_permset("3 1\n1 2\n"), Error);
        CHECK_THROWS_AS(parse_permset("# only a comment\n"), Error);
        CHECK_THROWS_AS(parse_permset("3 1\n1 2 4\n"), Error);
    }
}

TEST_CASE("write then parse reproduces the set byte for byte")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto set = permdes::testing::random_subset(5, 1 + trial * 3, rng);
        const auto text = format_permset(set);
        const auto again = parse_permset(text);
        CHECK(again.elements() == set.elements());
        CHECK(format_permset(again) == text);
    }
    CHECK(format_permset(parse_permset("# c\n3  2\n1 2 3\n2  3 1\n")) == "3 2\n1 2 3\n2 3 1\n");
}

TEST_CASE("PermSet invariants and group test")
{
    CHECK_THROWS_AS(PermSet(3, {}), Error);
    CHECK_THROWS_AS(PermSet(3, {Permutation::identity(4)}), Error);
    const PermSet c3(3, {Permutation::identity(3), cycle(3, {1, 2, 3}), cycle(3, {1, 3, 2})});
    CHECK(c3.is_group());
    const PermSet not_group(3, {Permutation::identity(3), cycle(3, {1, 2, 3})});
    CHECK_FALSE(not_group.is_group());
    const PermSet no_identity(3, {cycle(3, {1, 2, 3}), cycle(3, {1, 3, 2})});
    CHECK_FALSE(no_identity.is_group());
}

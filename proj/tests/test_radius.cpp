#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permdes/groups.hpp"
#include "permdes/radius.hpp"
#include "test_support.hpp"

using namespace permdes;
using permdes::testing::brute_radius;
using permdes::testing::perm;

TEST_CASE("naive radius examples")
{
    const auto s4 = covering_radius_naive(construct_named("symmetric", 4));
    CHECK(s4.radius == 0);
    CHECK(s4.witness.is_identity());

    const auto single = covering_radius_naive(PermSet(4, {Permutation::identity(4)}));
    CHECK(single.radius == 4);
    CHECK(single.witness == perm({2, 1, 4, 3}));  // least derangement

    const auto c4 = covering_radius_naive(construct_named("cyclic", 4));
    CHECK(c4.radius == 2);
    CHECK(c4.witness == Permutation(brute_radius(construct_named("cyclic", 4)).witness));
}

TEST_CASE("naive radius matches the unpruned oracle")
{
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            const auto set = permdes::testing::random_subset(n, 1 + rng() % 12, rng);
            const auto oracle = brute_radius(set);
            const auto got = covering_radius_naive(set);
            CHECK(got.radius == oracle.radius);
            CHECK(got.witness == Permutation(oracle.witness));
        }
    }
}

TEST_CASE("coset mode equals naive on groups")
{
    std::vector<PermSet> groups;
    for (int n = 3; n <= 6; ++n) {
        groups.push_back(construct_named("cyclic", n));
        groups.push_back(construct_named("dihedral", n));
        groups.push_back(construct_named("alternating", n));
        groups.push_back(construct_named("symmetric", n));
    }
    groups.push_back(construct_named("agl1", 5));
    groups.push_back(construct_named("pgl2", 5));
    groups.push_back(construct_named("pgl2", 3));
    for (const auto& g : groups) {
        const auto naive = covering_radius(g, {RadiusMode::naive});
        const auto coset = covering_radius(g, {RadiusMode::coset});
        CHECK(coset.mode == RadiusMode::coset);
        CHECK(coset.radius == naive.radius);
        CHECK(coset.witness == naive.witness);
    }

    const auto pgl = covering_radius(construct_named("pgl2", 5), {RadiusMode::coset});
    CHECK(pgl.enumerated == 6);
    const auto c4 = covering_radius(construct_named("cyclic", 4), {RadiusMode::coset});
    CHECK(c4.enumerated == 6);
    CHECK(c4.radius == 2);
}

TEST_CASE("coset mode falls back on non-groups")
{
    const PermSet set(4, {Permutation::identity(4), perm({2, 3, 4, 1})});
    const auto result = covering_radius(set, {RadiusMode::coset});
    CHECK(result.mode == RadiusMode::naive);
    CHECK(result.notes.size() == 1);
    CHECK(result.radius == brute_radius(set).radius);
    CHECK(covering_radius(set).mode == RadiusMode::naive);
    CHECK(covering_radius(construct_named("cyclic", 5)).mode == RadiusMode::coset);
}

TEST_CASE("radius is invariant under translation and conjugation")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const auto set = permdes::testing::random_subset(6, 5 + trial, rng);
        const int base = covering_radius_naive(set).radius;
        const auto sigma = permdes::testing::random_perm(6, rng);
        CHECK(covering_radius_naive(set.left_translate(sigma)).radius == base);
        CHECK(covering_radius_naive(set.conjugate(sigma)).radius == base);
    }
}

TEST_CASE("radius is zero exactly for the whole space")
{
    std::mt19937_64 rng(4);
    CHECK(covering_radius_naive(construct_named("symmetric", 5)).radius == 0);
    for (std::size_t size : {1u, 60u, 119u}) {
        CHECK(covering_radius_naive(permdes::testing::random_subset(5, size, rng)).radius > 0);
    }
}

TEST_CASE("parallel and serial runs agree exactly")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 6; ++trial) {
        const auto set = permdes::testing::random_subset(7, 3 + trial * 5, rng);
        const auto serial = covering_radius_naive(set, 1);
        for (unsigned jobs : {2u, 4u, 7u, 0u}) {
            const auto parallel = covering_radius_naive(set, jobs);
            CHECK(parallel.radius == serial.radius);
            CHECK(parallel.witness == serial.witness);
            CHECK(parallel.enumerated == serial.enumerated);
        }
    }
}

TEST_CASE("degree cap")
{
    const auto c11 = construct_named("cyclic", 11);
    CHECK_THROWS_WITH_AS(covering_radius_naive(c11), doctest::Contains("cap"), Error);
    CHECK_THROWS_AS(covering_radius(c11, {RadiusMode::coset}), Error);
    CHECK_THROWS_AS(farthest_points(c11, 1), Error);
    CHECK(parse_radius_mode("coset") == RadiusMode::coset);
    CHECK_THROWS_AS(parse_radius_mode("fast"), Error);
}

TEST_CASE("farthest points")
{
    const auto s4 = farthest_points(construct_named("symmetric", 4), 1);
    REQUIRE(s4.size() == 1);
    CHECK(s4[0].first.is_identity());
    CHECK(s4[0].second == 0);

    const auto id3 = farthest_points(PermSet(3, {Permutation::identity(3)}), 2);
    REQUIRE(id3.size() == 2);
    CHECK(id3[0] == std::pair{perm({2, 3, 1}), 3});
    CHECK(id3[1] == std::pair{perm({3, 1, 2}), 3});

    // Oracle: sort all of S_4 by (distance desc, lex asc).
    const auto c4 = construct_named("cyclic", 4);
    std::vector<std::pair<Permutation, int>> all;
    for (const auto& a : permdes::testing::all_image_arrays(4)) {
        int dmin = 5;
        for (const auto& d : c4) {
            dmin = std::min(dmin, permdes::testing::brute_distance(a, d.images()));
        }
        all.emplace_back(Permutation(a), dmin);
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
    const auto top = farthest_points(c4, 3);
    REQUIRE(top.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(top[i] == all[i]);
        CHECK(top[i].second <= 2);
    }
    CHECK(farthest_points(c4, 24) == all);
    CHECK(farthest_points(c4, 0).empty());
}

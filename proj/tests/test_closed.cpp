#include "surfcount/closed.hpp"

#include <doctest.h>

using namespace surfcount;

TEST_CASE("closed G counts") {
    CHECK(closed_G(0, 1, {6}) == 5);
    CHECK(closed_G(0, 2, {2, 2}) == 6);
    CHECK(closed_G(1, 1, {2}) == 3);
    CHECK(closed_G(0, 3, {0, 0, 0}) == 1);
    CHECK(closed_G(0, 3, {1, 1, 2}) == 4);
    CHECK_THROWS_AS(closed_G(2, 1, {2}), Unsupported);
}

TEST_CASE("annulus insular and traversing split") {
    CHECK(annulus_split(2, 2) == std::pair<Integer, Integer>(4, 2));
    CHECK(annulus_split(1, 1) == std::pair<Integer, Integer>(0, 1));
    CHECK(annulus_split(0, 0) == std::pair<Integer, Integer>(1, 0));
    for (long a = 0; a <= 8; ++a)
        for (long b = 0; b <= 8; ++b) {
            auto [i, t] = annulus_split(a, b);
            CHECK(i + t == closed_G(0, 2, {a, b}));
        }
}

TEST_CASE("closed N counts") {
    CHECK(closed_N(0, 2, {3, 3}) == 3);
    CHECK(closed_N(0, 4, {2, 2, 2, 2}) == 96);
    CHECK(closed_N(0, 3, {1, 1, 1}) == 0);
    CHECK(closed_N(1, 1, {4}) == 3);
    CHECK(closed_N(0, 2, {2, 4}) == 0);
}

TEST_CASE("local counts") {
    CHECK(local_count(4, 2) == 8);
    CHECK(local_count(4, 0) == 6);
    CHECK(local_count(2, 3) == 0);
}

TEST_CASE("pants profiles and regions") {
    PantsProfile p = pants_classify(2, 2, 2);
    CHECK(p == PantsProfile{0, 0, 0, 1, 1, 1});
    CHECK(pants_classify(4, 1, 1) == PantsProfile{1, 0, 0, 1, 0, 1});
    CHECK(pants_classify(0, 0, 0) == PantsProfile{});
    auto r = pants_regions(2, 2, 2);
    CHECK(r.r == 2);
    CHECK(r.t == 0);
    r = pants_regions(4, 0, 0);
    CHECK(r.r == 3);
    CHECK(r.t == 2);
    r = pants_regions(0, 0, 0);
    CHECK(r.r == 1);
    CHECK(r.t == 2);
}

TEST_CASE("refined closed forms") {
    CHECK(closed_refined('N', 0, 2, {3, 3}, 0) == 3);
    CHECK(closed_refined('N', 0, 2, {3, 3}, 1) == 0);
    CHECK(closed_refined('G', 0, 2, {2, 2}, 1) == 4);
    CHECK(closed_refined('G', 0, 3, {2, 2, 2}, 0) == 8);
    CHECK_THROWS_AS(closed_refined('G', 1, 1, {2}, 0), Unsupported);
}

TEST_CASE("region and t gradings") {
    CHECK(euler_char(0, 3) == -1);
    CHECK(euler_char(1, 1) == -1);
    std::vector<long> b{2, 4, 0};
    for (long r = 1; r < 8; ++r) CHECK(r_from_t(0, b, t_from_r(0, b, r)) == r);
    // r = t + chi + sum/2
    CHECK(r_from_t(0, b, 0) == 0 - 1 + 3);
}

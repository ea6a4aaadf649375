#include "surfcount/closed.hpp"
#include "surfcount/engine.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace surfcount;

TEST_CASE("G counts from the recursion") {
    Engine eng;
    CHECK(eng.G(0, {4}) == 2);
    CHECK(eng.G(1, {4}) == 13);
    CHECK(eng.G(0, {1, 1, 2}) == 4);
    CHECK(eng.G(2, {1}) == 0);
    CHECK(eng.G(2, {0}) == 1);
    CHECK(eng.G(3, {0, 0, 0}) == 1);
}

TEST_CASE("N counts from the recursion") {
    Engine eng;
    CHECK(eng.N(1, {2}) == 1);
    CHECK(eng.N(0, {1, 1, 1, 1}) == 3);
    CHECK(eng.N(0, {2, 4}) == 0);
    CHECK(eng.N(0, {2, 2, 2, 2}) == 96);
}

TEST_CASE("region-refined counts") {
    Engine eng;
    CHECK(eng.G_r(0, {2, 2}, 2) == 2);
    CHECK(eng.G_r(0, {0, 2, 2}, 2) == 4);
    for (long m = 0; m <= 5; ++m)
        for (long r = 0; r <= m + 3; ++r) CHECK(eng.G_r(0, {2 * m}, r) == (r == m + 1 ? catalan(m) : Integer(0)));
    CHECK(eng.N_t(1, {4}, 0) == 1);
    CHECK(eng.N_t(1, {4}, 1) == 2);
    CHECK(eng.G_t(0, {2, 2, 2}, 2) == 32);
}

TEST_CASE("lattice counts") {
    Engine eng;
    CHECK(eng.lattice(1, {2}) == 0);
    CHECK(eng.lattice(0, {2, 4, 2}) == 1);
    CHECK(eng.lattice(1, {4}) == ratio(1, 4));
}

TEST_CASE("convolution and dilaton") {
    Engine eng;
    CHECK(eng.convolve_G_from_N(1, {4}) == 13);
    CHECK(eng.convolve_G_from_N(0, {1, 1}) == 1);
    CHECK(eng.convolve_G_from_N(0, {0, 0, 0}) == 1);
    CHECK(eng.dilaton_reduce(0, {0, 2, 2}, 3) == 12);
    CHECK(eng.dilaton_reduce(0, {0, 4}, 3) == 6);
    CHECK(eng.dilaton_reduce(0, {0, 4}, 7) == 0);
    CHECK_THROWS(eng.convolve_G_from_N(0, {4}));
}

TEST_CASE("recursion agrees with closed forms on a grid") {
    Engine eng;
    for (long a = 0; a <= 8; ++a)
        for (long b = 0; b <= 8; ++b)
            for (long c = 0; c <= 8; ++c) {
                std::vector<long> v{a, b, c};
                CHECK(eng.G(0, v) == closed_G(0, 3, v));
                CHECK(eng.N(0, v) == closed_N(0, 3, v));
            }
}

TEST_CASE("counts are symmetric in the boundary entries") {
    Engine eng;
    CHECK(eng.G(1, {2, 4}) == eng.G(1, {4, 2}));
    CHECK(eng.N(0, {1, 3, 2, 0}) == eng.N(0, {0, 2, 3, 1}));
    CHECK(eng.N_t(1, {2, 0}, 1) == eng.N_t(1, {0, 2}, 1));
}

TEST_CASE("cache round trip keeps values") {
    auto path = (std::filesystem::temp_directory_path() / "surfcount_engine_cache_test.txt").string();
    Engine a;
    Integer g = a.G(1, {4, 2}), n = a.N_t(1, {2, 2}, 1);
    a.save_cache(path);
    Engine b;
    CHECK(b.load_cache(path));
    CHECK(b.memo_size() == a.memo_size());
    CHECK(b.G(1, {4, 2}) == g);
    CHECK(b.N_t(1, {2, 2}, 1) == n);
    std::remove(path.c_str());
    Engine c;
    std::string warning;
    CHECK_FALSE(c.load_cache(path, &warning));
    CHECK_FALSE(warning.empty());
}

TEST_CASE("invalid arguments are rejected") {
    Engine eng;
    CHECK_THROWS(eng.G(-1, {2}));
    CHECK_THROWS(eng.G(0, {-2}));
}

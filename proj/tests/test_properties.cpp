// Randomized identities over many boundary vectors, with fixed seeds.

#include "surfcount/closed.hpp"
#include "surfcount/engine.hpp"
#include "surfcount/series.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace surfcount;

namespace {

std::vector<long> random_vector(std::mt19937& rng, int n, long max_entry) {
    std::uniform_int_distribution<long> d(0, max_entry);
    std::vector<long> b(n);
    for (auto& x : b) x = d(rng);
    if (std::accumulate(b.begin(), b.end(), 0L) % 2 != 0) b[0] += 1;
    return b;
}

}  // namespace

TEST_CASE("counts are invariant under permuting the boundary") {
    Engine eng;
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int g = trial % 2, n = 2 + trial % 3;
        auto b = random_vector(rng, n, 6);
        auto p = b;
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(eng.G(g, b) == eng.G(g, p));
        CHECK(eng.N(g, b) == eng.N(g, p));
    }
}

TEST_CASE("odd total gives zero") {
    Engine eng;
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto b = random_vector(rng, 3, 7);
        b[1] += 1;
        CHECK(eng.G(trial % 2, b) == 0);
        CHECK(eng.N(trial % 2, b) == 0);
    }
}

TEST_CASE("refinements sum to the total") {
    Engine eng;
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int g = trial % 2, n = 1 + trial % 3;
        auto b = random_vector(rng, n, 6);
        Integer nt = 0, gt = 0, nr = 0, gr = 0;
        for (long t = 0; t <= 2 * g + n + 1; ++t) {
            nt += eng.N_t(g, b, t);
            gt += eng.G_t(g, b, t);
        }
        long rmax = 2 + std::accumulate(b.begin(), b.end(), 0L) / 2 + 2 * g + n;
        for (long r = 0; r <= rmax; ++r) {
            nr += eng.N_r(g, b, r);
            gr += eng.G_r(g, b, r);
        }
        CHECK(nt == eng.N(g, b));
        CHECK(gt == eng.G(g, b));
        CHECK(nr == eng.N(g, b));
        CHECK(gr == eng.G(g, b));
    }
}

TEST_CASE("G is a local-count convolution of N") {
    Engine eng;
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        int g = trial % 2, n = 2 - g + trial % 3;
        auto b = random_vector(rng, n, 6);
        CHECK(eng.convolve_G_from_N(g, b) == eng.G(g, b));
    }
}

TEST_CASE("dilaton on random vectors") {
    Engine eng;
    std::mt19937 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        int g = trial % 2, n = 2 + trial % 2;
        auto rest = random_vector(rng, n - 1, 6);
        std::vector<long> b{0};
        b.insert(b.end(), rest.begin(), rest.end());
        for (long r = 1; r <= 8; ++r) CHECK(eng.G_r(g, b, r) == Integer(r) * eng.G_r(g, rest, r));
    }
}

TEST_CASE("series: t-refined N series sum to the unrefined series") {
    Engine eng;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 1}, {1, 2}}) {
        TruncSeries sum = build_fN(eng, g, n, 6, 0L);
        for (long t = 1; t <= 2 * g + n - 1; ++t) sum = sum + build_fN(eng, g, n, 6, t);
        CHECK(sum == build_fN(eng, g, n, 6));
    }
}

TEST_CASE("series: truncation is stable") {
    Engine eng;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 1}}) {
        CHECK(build_fG(eng, g, n, 8).truncated(5) == build_fG(eng, g, n, 5));
        CHECK(build_fN(eng, g, n, 8).truncated(5) == build_fN(eng, g, n, 5));
        CHECK(pullback_check(eng, g, n, 6).is_zero());
    }
}

TEST_CASE("series: alpha collapse recovers the unrefined series") {
    Engine eng;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}}) {
        const int T = 6;
        CHECK(build_frak_f(eng, g, n, T, complete_alpha_bound(n, T, false)).aux_collapsed() == build_fG(eng, g, n, T));
    }
}

TEST_CASE("closed forms agree with the recursion on random vectors") {
    Engine eng;
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        auto b = random_vector(rng, 4, 9);
        CHECK(eng.N(0, b) == closed_N(0, 4, b));
    }
}

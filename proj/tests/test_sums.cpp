#include "surfcount/sums.hpp"

#include <doctest.h>

using namespace surfcount;

TEST_CASE("direct special sums") {
    CHECK(sum_direct({Family::A, 0, 0}, 3) == 2);
    CHECK(sum_direct({Family::A, 0, 0}, 4) == 8);
    CHECK(sum_direct({Family::S, 0, 0}, 4) == 4);
    for (Family f : {Family::A, Family::S, Family::B, Family::R}) CHECK(sum_direct({f, 0, 0}, 0) == 0);
    // Odd in k.
    CHECK(sum_direct({Family::A, 1, 0}, -5) == -sum_direct({Family::A, 1, 0}, 5));
}

TEST_CASE("fitted special sums match the printed branches") {
    auto p = [](const char* s) { return parse_poly(s, 1, "k"); };
    CHECK(fit_sum({Family::A, 0, 0}).branches.at("e") == p("1/12*k^3 + 2/3*k"));
    CHECK(fit_sum({Family::A, 1, 0}).branches.at("o") == p("1/40*k^5 - 1/6*k^3 + 17/120*k"));
    CHECK(fit_sum({Family::B, 0, 0}).branches.at("e") == p("1/240*k^5 + 1/8*k^3 + 13/30*k"));
}

TEST_CASE("fitted sums reproduce direct values beyond the grid") {
    for (Family f : {Family::A, Family::S, Family::B, Family::B0, Family::B1, Family::R, Family::R0, Family::R1}) {
        SumFamily sf{f, 1, is_two_index(f) ? 1 : 0};
        QuasiPoly q = fit_sum(sf);
        for (long k = 1; k <= 30; ++k) CHECK(q.eval({k}) == Rational(sum_direct(sf, k)));
    }
}

TEST_CASE("corrected Norbury polynomials") {
    auto n = [](const char* s) { return parse_poly(s, 1, "n"); };
    CHECK(norbury_pq(0).p == n("1"));
    CHECK(norbury_pq(0).q == n("1"));
    CHECK(norbury_pq(1).p == n("4*n"));
    CHECK(norbury_pq(1).q == n("4*n + 1"));
    CHECK(norbury_pq(2).q == n("32*n^2 + 8*n + 1"));
}

TEST_CASE("tilde sums") {
    CHECK(tilde_sum(Tilde::p, 1, 2) == 96);
    CHECK(tilde_sum(Tilde::P, 0, 2) == 18);
    CHECK(tilde_sum(Tilde::Q, 0, 0) == 1);
    CHECK(parse_tilde("Q") == Tilde::Q);
    CHECK_THROWS(parse_tilde("x"));
}

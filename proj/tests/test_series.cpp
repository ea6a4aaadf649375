#include "surfcount/series.hpp"

#include <doctest.h>

using namespace surfcount;

TEST_CASE("truncated series arithmetic") {
    TruncSeries a = TruncSeries::y_type(1, 4);
    a.add_term({1}, 0, 2);
    a.add_term({5}, 0, 7);  // beyond the truncation
    CHECK(a.coeff({1}) == 2);
    CHECK(a.coeff({5}) == 0);
    CHECK_THROWS(a.add_term({-1}, 0, 1));
    TruncSeries sq = a * a;
    CHECK(sq.coeff({2}) == 4);
    CHECK((a - a).is_zero());
    CHECK(a.derivative(0).coeff({0}) == 2);
    TruncSeries z = TruncSeries::z_type(2, 4);
    z.add_term({-1, -1}, 0, 1);
    CHECK(z.coeff({-1, -1}) == 1);
    CHECK_THROWS(z * z);
}

TEST_CASE("count-built series") {
    Engine eng;
    TruncSeries n02 = build_fN(eng, 0, 2, 6);
    CHECK(n02.coeff({1, 1}) == 2);
    TruncSeries n01 = build_fN(eng, 0, 1, 8);
    CHECK(n01.terms().size() == 1);
    CHECK(n01.coeff({-1}) == 1);
    TruncSeries n03 = build_fN(eng, 0, 3, 6);
    CHECK(n03.coeff({0, 0, 0}) == 0);    // nu = (1,1,1) has odd sum
    CHECK(n03.coeff({0, 0, -1}) == 1);   // nu = (1,1,0) has even sum
    CHECK(n03.coeff({0, -1, -1}) == 0);  // nu = (1,0,0) has odd sum
    TruncSeries g01 = build_fG(eng, 0, 1, 7);
    CHECK(g01.coeff({1}) == 1);
    CHECK(g01.coeff({3}) == 1);
    CHECK(g01.coeff({5}) == 2);
    CHECK(g01.coeff({7}) == 5);
    CHECK(build_fG(eng, 1, 2, 4).coeff({1, 1}) == 1);
    CHECK(build_fG(eng, 0, 2, 6).coeff({3, 3}) == 6);
}

TEST_CASE("region-graded series") {
    Engine eng;
    TruncSeries f = build_frak_f(eng, 0, 1, 5, 4);
    CHECK(f.coeff({1}, 1) == 1);
    CHECK(f.coeff({3}, 2) == 1);
    CHECK(f.coeff({5}, 3) == 2);
    CHECK(build_frak_f(eng, 1, 1, 3, 4).coeff({1}, 1) == 1);
    CHECK(build_frak_f(eng, 0, 2, 6, 4).coeff({3, 3}, 2) == 2);
}

TEST_CASE("pullback to the N side") {
    Engine eng;
    CHECK(pullback_check(eng, 0, 2, 8).is_zero());
    for (long t = 0; t <= 2; ++t) CHECK(pullback_check(eng, 0, 3, 6, t).is_zero());
    CHECK_THROWS(pullback_check(eng, 0, 1, 6));
}

TEST_CASE("closed-form catalogue") {
    Engine eng;
    CHECK(expand_closed_form("fN02", 6) == build_fN(eng, 0, 2, 6));
    TruncSeries t1 = expand_closed_form("fN02_t1", 6);
    CHECK(t1.terms().size() == 1);
    CHECK(t1.coeff({-1, -1}) == 1);
    TruncSeries frak = expand_closed_form("frakf01G", 9);
    for (int m = 0; 2 * m + 1 <= 9; ++m) CHECK(frak.coeff({2 * m + 1}, m + 1) == Rational(catalan(m)));
    CHECK(expand_closed_form("fN03_factored", 8) == closed_form_counterpart(eng, "fN03_factored", 8));
    CHECK(expand_closed_form("fG02_minus", 8) == closed_form_counterpart(eng, "fG02_minus", 8));
    CHECK_THROWS_AS(expand_closed_form("nonsense", 4), std::invalid_argument);
}

TEST_CASE("differential recursions") {
    Engine eng;
    CHECK(diff_recursion_residual(eng, 0, 1, 9, complete_alpha_bound(1, 10, false)).is_zero());
    CHECK(diff_recursion_residual(eng, 0, 2, 7, complete_alpha_bound(2, 8, false)).is_zero());
    CHECK(diff_recursion_residual(eng, 1, 1, 7, complete_alpha_bound(1, 8, false)).is_zero());
    CHECK(first_diff_residual(eng, 0, 2, 7).is_zero());
}

TEST_CASE("region and t scaling") {
    Engine eng;
    CHECK(scaling_check(eng, 0, 1, 8));
    CHECK(scaling_check(eng, 0, 2, 8));
    CHECK(scaling_check(eng, 1, 1, 8));
}

TEST_CASE("series JSON shape") {
    Engine eng;
    std::string j = build_fN(eng, 0, 2, 2).to_json();
    CHECK(j.find("\"aux\":\"none\"") != std::string::npos);
    CHECK(j.find("\"terms\":[") != std::string::npos);
    CHECK(build_frak_f(eng, 0, 1, 3, 2).to_json().find("\"aux\":\"alpha\"") != std::string::npos);
}

#include "surfcount/fit.hpp"

#include <doctest.h>

using namespace surfcount;

namespace {
MultiPoly b(const char* s, int n) { return parse_poly(s, n, "b"); }
}  // namespace

TEST_CASE("N-hat fits") {
    Engine eng;
    CHECK(fit_Nhat(eng, 1, 1, "e").poly() == b("1/48*b1^2 + 5/12", 1));
    CHECK(fit_Nhat(eng, 0, 4, "ooee").poly() == b("1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 + 1/4*b4^2 + 1/2", 4));
    CHECK(fit_Nhat(eng, 0, 3, "eee").poly() == b("1", 3));
    FitReport r = fit_Nhat(eng, 1, 2, "ee");
    CHECK(r.validation.size() >= 10);
    for (const auto& v : r.validation) CHECK(v.expected == v.got);
}

TEST_CASE("refined N-hat fits") {
    Engine eng;
    CHECK(fit_Nhat_refined(eng, 0, 4, 0, 0, "eeee").poly() == b("1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 + 1/4*b4^2 - 1", 4));
    CHECK(fit_Nhat_refined(eng, 0, 4, 3, 3, "e").poly() == b("1/4*b1^2 + 2", 1));
    CHECK(fit_Nhat_refined(eng, 0, 4, 3, 2, "oo").poly().is_zero());
    CHECK(fit_Nhat_refined(eng, 1, 1, 0, 0, "e").poly() == b("1/48*b1^2 - 1/12", 1));
    CHECK_THROWS(fit_Nhat_refined(eng, 0, 4, 0, 1, "eeee"));
}

TEST_CASE("G over central binomials") {
    Engine eng;
    auto m = [](const char* s, int n) { return parse_poly(s, n, "m"); };
    CHECK(fit_G_poly(eng, 1, 1, "e", std::nullopt).poly() == m("1/12*m1^2 + 5/12*m1 + 1", 1));
    CHECK(fit_G_poly(eng, 0, 3, "eee", std::nullopt).poly() ==
          m("m1*m2*m3 + m1*m2 + m1*m3 + m2*m3 + m1 + m2 + m3 + 1", 3));
    CHECK(fit_G_poly(eng, 0, 3, "eee", 0L).poly() == m("m1*m2*m3", 3));
}

TEST_CASE("intersection numbers") {
    Engine eng;
    auto t = extract_psi(eng, 1, 1);
    REQUIRE(t.size() == 1);
    CHECK(t[0].value == ratio(1, 24));
    CHECK(psi_json_line(t[0]) == "{\"d\":[1],\"value\":\"1/24\"}");
    for (const auto& v : extract_psi(eng, 0, 4)) CHECK(v.value == 1);
    auto p = extract_psi(eng, 0, 3);
    REQUIRE(p.size() == 1);
    CHECK(p[0].value == 1);
    CHECK_THROWS(extract_psi(eng, 0, 2));
}

TEST_CASE("top-degree agreement with lattice counts") {
    Engine eng;
    CHECK(compare_top_degree(eng, 1, 1));
    CHECK(compare_top_degree(eng, 0, 4));
    CHECK(compare_top_degree(eng, 0, 3));
}

TEST_CASE("zero entries on the even branch") {
    Engine eng;
    // The (0,4) data lies on the even branch when some entries vanish.
    for (const auto& z : zero_entry_check(eng, 0, 4, 4)) CHECK(z.fitted == z.actual);
}

TEST_CASE("parity parsing") {
    CHECK(parse_parity("e,e,o,o", 4) == "eeoo");
    CHECK_THROWS(parse_parity("e,x", 2));
    CHECK_THROWS(parse_parity("e,e", 3));
    CHECK(check_branches(4).front() == "eeee");
}

TEST_CASE("fit JSON is deterministic across threads") {
    Engine a, c;
    FitOptions one, eight;
    eight.threads = 8;
    CHECK(fit_Nhat(a, 1, 2, "oo", one).to_json() == fit_Nhat(c, 1, 2, "oo", eight).to_json());
}

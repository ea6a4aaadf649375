#include "surfcount/exact.hpp"
#include "surfcount/sums.hpp"

#include <doctest.h>

using namespace surfcount;

TEST_CASE("ratio is canonical") {
    CHECK(ratio(4, 6) == ratio(2, 3));
    CHECK(to_string(ratio(4, -6)) == "-2/3");
    CHECK(to_string(ratio(6, 3)) == "2");
    CHECK(parse_rational("-10/4") == ratio(-5, 2));
}

TEST_CASE("binomials with half-integer lower index") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial_half(3, 3) == 0);  // k = 3/2
    CHECK(binomial_half(4, 4) == 6);  // k = 2
    CHECK(catalan(5) == 42);
    CHECK(factorial(6) == 720);
}

TEST_CASE("multivariate polynomial arithmetic") {
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    MultiPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.total_degree() == 2);
    CHECK(p.eval(std::vector<long>{3, 1}) == 8);
    CHECK((p - p).is_zero());
    CHECK((p - p).total_degree() == -1);
    CHECK(p.homogeneous_part(2) == p);
    CHECK(p.all_exponents_even());
    CHECK(p.permuted({1, 0}) == p * Rational(-1));
}

TEST_CASE("polynomial text round trip") {
    MultiPoly p = parse_poly("1/4*b1^2 + 1/4*b2^2 - 1/2", 2, "b");
    CHECK(p.eval(std::vector<long>{2, 2}) == ratio(3, 2));
    CHECK(parse_poly(p.to_string(var_names("b", 2)), 2, "b") == p);
    CHECK(parse_poly("1/12*m^2 + 5/12*m + 1", 1, "m").eval(std::vector<long>{1}) == ratio(3, 2));
    CHECK_THROWS(parse_poly("b3 + 1", 2, "b"));
}

TEST_CASE("tensor interpolation") {
    SUBCASE("constant grid") {
        Grid grid;
        for (long a = 0; a < 3; ++a)
            for (long b = 0; b < 3; ++b) grid[{a, b}] = 7;
        CHECK(interpolate_tensor(grid, 2) == MultiPoly::constant(2, 7));
    }
    SUBCASE("linear grid") {
        Grid grid;
        for (long a = 0; a < 3; ++a)
            for (long b = 0; b < 3; ++b) grid[{a, b}] = Rational(a + b);
        CHECK(interpolate_tensor(grid, 2) == MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1));
    }
    SUBCASE("special sum A0 at even k") {
        Grid grid;
        for (long k : {2, 4, 6, 8}) grid[{k}] = Rational(sum_direct({Family::A, 0, 0}, k));
        CHECK(interpolate_tensor(grid, 3) == parse_poly("1/12*k^3 + 2/3*k", 1, "k"));
    }
}

TEST_CASE("quasi-polynomial evaluation by parity branch") {
    QuasiPoly q;
    q.nvars = 1;
    q.branches["e"] = parse_poly("1/48*b1^2 + 5/12", 1, "b");
    CHECK(q.eval({2}) == ratio(1, 2));
    CHECK(q.eval({3}) == 0);
    QuasiPoly pants;
    pants.nvars = 3;
    pants.branches["eee"] = MultiPoly::constant(3, 1);
    CHECK(pants.eval({2, 2, 2}) == 1);
    CHECK(parity_of({1, 2, 3}) == "oeo");
}

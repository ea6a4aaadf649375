#include "surfcount/verify.hpp"

#include <doctest.h>

using namespace surfcount;

TEST_CASE("suite names") {
    CHECK(suite_names().back() == "all");
    CHECK(valid_suite("series"));
    CHECK_FALSE(valid_suite("nonsense"));
    Engine eng;
    CHECK_THROWS(run_suite("nonsense", eng));
}

TEST_CASE("passing suites report PASS lines") {
    for (const char* s : {"closed-forms", "recursion-consistency", "sums", "fits", "psi", "oracles"}) {
        Engine eng;
        SuiteReport r = run_suite(s, eng);
        CAPTURE(s);
        CHECK(!r.results.empty());
        CHECK(r.all_pass());
        CHECK(r.to_text().rfind("PASS", 0) == 0);
    }
}

TEST_CASE("reports do not depend on thread count") {
    Engine a, b;
    VerifyOptions eight;
    eight.threads = 8;
    CHECK(run_suite("fits", a).to_text() == run_suite("fits", b, eight).to_text());
}

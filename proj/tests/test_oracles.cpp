#include "surfcount/closed.hpp"
#include "surfcount/engine.hpp"
#include "surfcount/oracles.hpp"

#include <doctest.h>

#include <set>

using namespace surfcount;

TEST_CASE("noncrossing matchings") {
    CHECK(enumerate_disc(0).size() == 1);
    CHECK(enumerate_disc(2).size() == 2);
    CHECK(enumerate_disc(5).size() == 42);
    Engine eng;
    CHECK(Integer(static_cast<unsigned long>(enumerate_disc(5).size())) == closed_G(0, 1, {10}));
    for (const auto& m : enumerate_disc(4)) {
        CHECK(m.regions == 5);
        for (size_t i = 0; i < m.pairs.size(); ++i)
            for (size_t j = i + 1; j < m.pairs.size(); ++j) CHECK_FALSE(pairs_cross(m.pairs[i], m.pairs[j]));
    }
}

TEST_CASE("crossing test") {
    CHECK(pairs_cross({0, 2}, {1, 3}));
    CHECK_FALSE(pairs_cross({0, 3}, {1, 2}));
    CHECK_FALSE(pairs_cross({0, 1}, {2, 3}));
}

TEST_CASE("arrow diagrams to arcs") {
    ArcStructure a = arrows_to_arcs({true, false});
    CHECK(a.arcs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(a.wraps == std::vector<int>{0});
    ArcStructure w = arrows_to_arcs({false, true});
    CHECK(w.arcs == std::vector<std::pair<int, int>>{{1, 0}});
    CHECK(w.wraps == std::vector<int>{1});
    CHECK_THROWS(arrows_to_arcs({true, true}));
    std::set<ArcStructure> seen;
    auto all = all_arrow_diagrams(2);
    CHECK(all.size() == 6);
    for (const auto& d : all) {
        CHECK(valid_arrow_diagram(d));
        seen.insert(arrows_to_arcs(d));
    }
    CHECK(seen.size() == 6);
    Engine eng;
    CHECK(eng.G(0, {4, 0}) == 6);
}

TEST_CASE("pants search") {
    auto one = [](long a, long b, long c) {
        auto s = pants_search(a, b, c);
        REQUIRE(s.size() == 1);
        return s[0];
    };
    CHECK(one(2, 2, 2) == PantsProfile{0, 0, 0, 1, 1, 1});
    CHECK(one(6, 2, 2) == PantsProfile{1, 0, 0, 2, 0, 2});
    CHECK(one(0, 0, 0) == PantsProfile{});
    CHECK(pants_search(1, 1, 1).empty());
}

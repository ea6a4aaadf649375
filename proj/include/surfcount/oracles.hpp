#pragma once

#include "surfcount/closed.hpp"

#include <utility>
#include <vector>

namespace surfcount {

// Perfect matching of labels 0..2m-1 in cyclic order.
struct Matching {
    int m = 0;
    std::vector<std::pair<int, int>> pairs;  // (smaller, larger), sorted by first label
    long regions = 0;                        // complementary regions of the disc
    bool operator==(const Matching&) const = default;
};

// Pairs {a,b}, {c,d} cross iff exactly one of c, d lies strictly between a and b.
bool pairs_cross(std::pair<int, int> x, std::pair<int, int> y);

// Number of faces cut out of the disc, traced as cycles of i -> partner(i + 1).
long count_regions(int m, const std::vector<std::pair<int, int>>& pairs);

// Noncrossing matchings, smallest unpaired label matched to each larger label in turn.
std::vector<Matching> enumerate_disc(int m);

// Arrow labels on the marked boundary of an annulus with (2m, 0) points; true means "in".
using ArrowDiagram = std::vector<bool>;

struct ArcStructure {
    // (in, out) endpoints; each arc runs anticlockwise from in to out.
    std::vector<std::pair<int, int>> arcs;
    // Basepoint crossings of each arc, aligned with arcs.
    std::vector<int> wraps;
    auto operator<=>(const ArcStructure&) const = default;
};

bool valid_arrow_diagram(const ArrowDiagram& a);
// Repeatedly joins an "in" to the next remaining "out" anticlockwise. Throws std::logic_error if stuck.
ArcStructure arrows_to_arcs(const ArrowDiagram& a);
// All arrow diagrams on 2m points, lexicographic with out before in.
std::vector<ArrowDiagram> all_arrow_diagrams(int m);

// Every profile satisfying the boundary equations and exclusions, by exhaustive scan.
std::vector<PantsProfile> pants_search(long b1, long b2, long b3);

}  // namespace surfcount

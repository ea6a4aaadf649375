#include "surfcount/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfcount {

namespace {

bool strictly_between(int x, int a, int b) { return a < x && x < b; }

void extend(int m, std::vector<int>& partner, std::vector<std::pair<int, int>>& pairs, std::vector<Matching>& out) {
    auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
        Matching mt;
        mt.m = m;
        mt.pairs = pairs;
        std::sort(mt.pairs.begin(), mt.pairs.end());
        mt.regions = count_regions(m, mt.pairs);
        out.push_back(std::move(mt));
        return;
    }
    int a = static_cast<int>(first - partner.begin());
    for (int b = a + 1; b < 2 * m; ++b) {
        if (partner[b] != -1) continue;
        std::pair<int, int> p{a, b};
        bool ok = std::none_of(pairs.begin(), pairs.end(), [&](const auto& q) { return pairs_cross(p, q); });
        if (!ok) continue;
        partner[a] = b;
        partner[b] = a;
        pairs.push_back(p);
        extend(m, partner, pairs, out);
        pairs.pop_back();
        partner[a] = partner[b] = -1;
    }
}

// Boundary positions enclosed by the arc, walking anticlockwise from in to out.
std::vector<bool> segment(int size, std::pair<int, int> arc) {
    std::vector<bool> s(size, false);
    for (int i = arc.first;; i = (i + 1) % size) {
        s[i] = true;
        if (i == arc.second) break;
    }
    return s;
}

void check_nested(int size, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<bool>> segs;
    for (const auto& a : arcs) segs.push_back(segment(size, a));
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            bool meet = false, i_in_j = true, j_in_i = true;
            for (int k = 0; k < size; ++k) {
                if (segs[i][k] && segs[j][k]) meet = true;
                if (segs[i][k] && !segs[j][k]) i_in_j = false;
                if (segs[j][k] && !segs[i][k]) j_in_i = false;
            }
            if (meet && !i_in_j && !j_in_i) throw std::logic_error("arrows_to_arcs produced crossing arcs");
        }
    }
}

}  // namespace

bool pairs_cross(std::pair<int, int> x, std::pair<int, int> y) {
    auto [a, b] = std::minmax(x.first, x.second);
    return strictly_between(y.first, a, b) != strictly_between(y.second, a, b);
}

long count_regions(int m, const std::vector<std::pair<int, int>>& pairs) {
    if (m == 0) return 1;
    int size = 2 * m;
    std::vector<int> partner(size, -1);
    for (auto [a, b] : pairs) {
        partner[a] = b;
        partner[b] = a;
    }
    std::vector<bool> seen(size, false);
    long cycles = 0;
    for (int s = 0; s < size; ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (int i = s; !seen[i]; i = partner[(i + 1) % size]) seen[i] = true;
    }
    return cycles;
}

std::vector<Matching> enumerate_disc(int m) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    std::vector<Matching> out;
    std::vector<int> partner(2 * m, -1);
    std::vector<std::pair<int, int>> pairs;
    extend(m, partner, pairs, out);
    return out;
}

bool valid_arrow_diagram(const ArrowDiagram& a) {
    auto ins = std::count(a.begin(), a.end(), true);
    return 2 * static_cast<size_t>(ins) == a.size();
}

ArcStructure arrows_to_arcs(const ArrowDiagram& a) {
    if (!valid_arrow_diagram(a)) throw std::invalid_argument("arrow diagram needs equal numbers of in and out");
    int size = static_cast<int>(a.size());
    std::vector<int> remaining(size);
    for (int i = 0; i < size; ++i) remaining[i] = i;
    std::vector<std::pair<int, int>> arcs;
    while (!remaining.empty()) {
        int len = static_cast<int>(remaining.size());
        int found = -1;
        for (int i = 0; i < len; ++i) {
            if (a[remaining[i]] && !a[remaining[(i + 1) % len]]) {
                found = i;
                break;
            }
        }
        if (found < 0) throw std::logic_error("arrows_to_arcs found no in/out pair");
        int next = (found + 1) % len;
        arcs.emplace_back(remaining[found], remaining[next]);
        remaining.erase(remaining.begin() + std::max(found, next));
        remaining.erase(remaining.begin() + std::min(found, next));
    }
    check_nested(size, arcs);
    std::sort(arcs.begin(), arcs.end());
    ArcStructure s;
    s.arcs = arcs;
    for (auto [in, out] : arcs) s.wraps.push_back(out < in ? 1 : 0);
    return s;
}

std::vector<ArrowDiagram> all_arrow_diagrams(int m) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    ArrowDiagram a(2 * m, false);
    std::fill(a.begin() + m, a.end(), true);
    std::vector<ArrowDiagram> out;
    do out.push_back(a);
    while (std::next_permutation(a.begin(), a.end()));
    return out;
}

std::vector<PantsProfile> pants_search(long b1, long b2, long b3) {
    if (b1 < 0 || b2 < 0 || b3 < 0) throw std::invalid_argument("boundary lengths must be nonnegative");
    std::vector<PantsProfile> out;
    // Each boundary equation bounds p_i by b_i / 2 and t12 by min(b1, b2); t31 and t23 are then forced.
    for (long p1 = 0; 2 * p1 <= b1; ++p1)
        for (long p2 = 0; 2 * p2 <= b2; ++p2)
            for (long p3 = 0; 2 * p3 <= b3; ++p3)
                for (long t12 = 0; t12 <= std::min(b1, b2); ++t12) {
                    PantsProfile p{p1, p2, p3, t12, b2 - t12 - 2 * p2, b1 - t12 - 2 * p1};
                    if (pants_admissible(p, b1, b2, b3)) out.push_back(p);
                }
    return out;
}

}  // namespace surfcount

#pragma once

#include "surfcount/exact.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surfcount {

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

Integer closed_G(int g, int n, const std::vector<long>& b);
Integer closed_N(int g, int n, const std::vector<long>& b);
bool has_closed_G(int g, int n);
bool has_closed_N(int g, int n);

// (insular, traversing) diagrams on the annulus.
std::pair<Integer, Integer> annulus_split(long b1, long b2);

Integer local_count(long b, long a);

struct PantsProfile {
    long p1 = 0, p2 = 0, p3 = 0;
    long t12 = 0, t23 = 0, t31 = 0;
    bool operator==(const PantsProfile& o) const = default;
    std::string to_string() const;
};

PantsProfile pants_classify(long b1, long b2, long b3);
// Boundary equations and the one-prodigal-family exclusions.
bool pants_admissible(const PantsProfile& p, long b1, long b2, long b3);

struct PantsRegions {
    long r = 0;
    long t = 0;
};
PantsRegions pants_regions(long b1, long b2, long b3);

// mode 'G' or 'N'; (g,n) in {(0,1),(0,2),(0,3)}.
Integer closed_refined(char mode, int g, int n, const std::vector<long>& b, long t);

long euler_char(int g, int n);
// t = r - chi - sum(b)/2
long t_from_r(int g, const std::vector<long>& b, long r);
long r_from_t(int g, const std::vector<long>& b, long t);

}  // namespace surfcount

#include "surfcount/closed.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace surfcount {

namespace {

void check_args(int n, const std::vector<long>& b) {
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("expected " + std::to_string(n) + " boundary lengths");
    for (long x : b)
        if (x < 0) throw std::invalid_argument("boundary lengths must be nonnegative");
}

long total(const std::vector<long>& b) { return std::accumulate(b.begin(), b.end(), 0L); }

Integer to_integer(const Rational& q) {
    if (q.get_den() != 1) throw std::logic_error("non-integral closed form value");
    return q.get_num();
}

Integer central(long m) { return binomial(2 * m, m); }

Integer closed_G02(long b1, long b2) {
    auto [ins, trav] = annulus_split(b1, b2);
    return ins + trav;
}

// Per-entry factor for the pants: even entries (m+1)C(2m,m), odd entries (2m+1)C(2m,m).
Integer pants_G_factor(long b) {
    long m = b / 2;
    return (b % 2 == 0 ? Integer(m + 1) : Integer(2 * m + 1)) * central(m);
}

}  // namespace

long euler_char(int g, int n) { return 2 - 2 * g - n; }

long t_from_r(int g, const std::vector<long>& b, long r) {
    return r - euler_char(g, static_cast<int>(b.size())) - total(b) / 2;
}

long r_from_t(int g, const std::vector<long>& b, long t) {
    return t + euler_char(g, static_cast<int>(b.size())) + total(b) / 2;
}

bool has_closed_G(int g, int n) { return (g == 0 && n >= 1 && n <= 3) || (g == 1 && n == 1); }
bool has_closed_N(int g, int n) { return (g == 0 && n >= 1 && n <= 4) || (g == 1 && n == 1); }

std::pair<Integer, Integer> annulus_split(long b1, long b2) {
    if (b1 < 0 || b2 < 0) throw std::invalid_argument("boundary lengths must be nonnegative");
    if ((b1 + b2) % 2 != 0) return {0, 0};
    if (b1 % 2 == 0) {
        long m1 = b1 / 2, m2 = b2 / 2;
        Integer ins = central(m1) * central(m2);
        if (m1 + m2 == 0) return {ins, 0};
        Rational trav = ratio(m1 * m2, m1 + m2) * Rational(ins);
        return {ins, to_integer(trav)};
    }
    long m1 = b1 / 2, m2 = b2 / 2;
    Rational trav = ratio((2 * m1 + 1) * (2 * m2 + 1), m1 + m2 + 1) * Rational(central(m1) * central(m2));
    return {0, to_integer(trav)};
}

Integer closed_G(int g, int n, const std::vector<long>& b) {
    if (!has_closed_G(g, n)) throw Unsupported("no closed form");
    check_args(n, b);
    if (total(b) % 2 != 0) return 0;
    if (g == 1) {
        long m = b[0] / 2;
        Rational v = (ratio(m * m, 12) + ratio(5 * m, 12) + 1) * Rational(central(m));
        return to_integer(v);
    }
    switch (n) {
        case 1: return catalan(b[0] / 2);
        case 2: return closed_G02(b[0], b[1]);
        default: {
            int odd = 0;
            for (long x : b) odd += x % 2;
            if (odd != 0 && odd != 2) return 0;
            Integer r = 1;
            for (long x : b) r *= pants_G_factor(x);
            return r;
        }
    }
}

Integer closed_N(int g, int n, const std::vector<long>& b) {
    if (!has_closed_N(g, n)) throw Unsupported("no closed form");
    check_args(n, b);
    if (total(b) % 2 != 0) return 0;
    if (g == 1) {
        long x = b[0];
        if (x == 0) return 1;
        return to_integer(Rational(x) * (ratio(x * x, 48) + ratio(5, 12)));
    }
    Integer barprod = 1;
    for (long x : b) barprod *= bar(x);
    switch (n) {
        case 1: return b[0] == 0 ? 1 : 0;
        case 2: return b[0] == b[1] ? Integer(bar(b[0])) : Integer(0);
        case 3: return barprod;
        default: {
            if (std::all_of(b.begin(), b.end(), [](long x) { return x == 0; })) return 1;
            int odd = 0;
            long sq = 0;
            for (long x : b) {
                odd += x % 2;
                sq += x * x;
            }
            Rational hat = ratio(sq, 4) + (odd == 2 ? ratio(1, 2) : Rational(2));
            return to_integer(hat * Rational(barprod));
        }
    }
}

Integer local_count(long b, long a) {
    if (a < 0 || a > b || (b - a) % 2 != 0) return 0;
    return binomial(b, (b - a) / 2) * bar(a);
}

std::string PantsProfile::to_string() const {
    std::ostringstream os;
    os << "p=(" << p1 << "," << p2 << "," << p3 << ") t12=" << t12 << " t23=" << t23 << " t31=" << t31;
    return os.str();
}

PantsProfile pants_classify(long b1, long b2, long b3) {
    if (b1 < 0 || b2 < 0 || b3 < 0) throw std::invalid_argument("boundary lengths must be nonnegative");
    if ((b1 + b2 + b3) % 2 != 0) throw std::invalid_argument("no diagram");
    PantsProfile p;
    if (b1 > b2 + b3) {
        p.p1 = (b1 - b2 - b3) / 2;
        p.t12 = b2;
        p.t31 = b3;
    } else if (b2 > b1 + b3) {
        p.p2 = (b2 - b1 - b3) / 2;
        p.t12 = b1;
        p.t23 = b3;
    } else if (b3 > b1 + b2) {
        p.p3 = (b3 - b1 - b2) / 2;
        p.t23 = b2;
        p.t31 = b1;
    } else {
        p.t12 = (b1 + b2 - b3) / 2;
        p.t23 = (b2 + b3 - b1) / 2;
        p.t31 = (b3 + b1 - b2) / 2;
    }
    return p;
}

bool pants_admissible(const PantsProfile& p, long b1, long b2, long b3) {
    if (p.p1 < 0 || p.p2 < 0 || p.p3 < 0 || p.t12 < 0 || p.t23 < 0 || p.t31 < 0) return false;
    if (b1 != p.t12 + p.t31 + 2 * p.p1) return false;
    if (b2 != p.t12 + p.t23 + 2 * p.p2) return false;
    if (b3 != p.t23 + p.t31 + 2 * p.p3) return false;
    int positive = (p.p1 > 0) + (p.p2 > 0) + (p.p3 > 0);
    if (positive > 1) return false;
    if (p.p1 > 0 && p.t23 != 0) return false;
    if (p.p2 > 0 && p.t31 != 0) return false;
    if (p.p3 > 0 && p.t12 != 0) return false;
    return true;
}

PantsRegions pants_regions(long b1, long b2, long b3) {
    long s = b1 + b2 + b3;
    if (s % 2 != 0) throw std::invalid_argument("no diagram");
    int zeros = (b1 == 0) + (b2 == 0) + (b3 == 0);
    switch (zeros) {
        case 3: return {1, 2};
        case 2: return {s / 2 + 1, 2};
        case 1: return {s / 2, 1};
        default: return {s / 2 - 1, 0};
    }
}

Integer closed_refined(char mode, int g, int n, const std::vector<long>& b, long t) {
    if (g != 0 || n < 1 || n > 3 || (mode != 'G' && mode != 'N')) throw Unsupported("no closed form");
    check_args(n, b);
    if (total(b) % 2 != 0) return 0;
    if (mode == 'N') {
        switch (n) {
            case 1: return (b[0] == 0 && t == 0) ? 1 : 0;
            case 2:
                if (b[0] != b[1]) return 0;
                if (b[0] == 0) return t == 1 ? 1 : 0;
                return t == 0 ? Integer(b[0]) : Integer(0);
            default:
                if (pants_regions(b[0], b[1], b[2]).t != t) return 0;
                return Integer(bar(b[0]) * bar(b[1]) * bar(b[2]));
        }
    }
    switch (n) {
        case 1: return t == 0 ? catalan(b[0] / 2) : Integer(0);
        case 2: {
            auto [ins, trav] = annulus_split(b[0], b[1]);
            if (t == 0) return trav;
            if (t == 1) return ins;
            return 0;
        }
        default: {
            std::vector<long> even, odd;
            for (long x : b) (x % 2 == 0 ? even : odd).push_back(x / 2);
            Integer binoms = 1;
            for (long x : b) binoms *= central(x / 2);
            if (odd.empty()) {
                long m1 = even[0], m2 = even[1], m3 = even[2];
                switch (t) {
                    case 0: return binoms * (m1 * m2 * m3);
                    case 1: return binoms * (m1 * m2 + m2 * m3 + m3 * m1);
                    case 2: return binoms * (m1 + m2 + m3 + 1);
                    default: return 0;
                }
            }
            if (odd.size() != 2) return 0;
            Integer oo = Integer(2 * odd[0] + 1) * (2 * odd[1] + 1);
            switch (t) {
                case 0: return binoms * oo * even[0];
                case 1: return binoms * oo;
                default: return 0;
            }
        }
    }
}

}  // namespace surfcount

#include "surfcount/sums.hpp"

#include <stdexcept>

namespace surfcount {

namespace {

Integer ipow(long base, unsigned long e) {
    Integer r;
    Integer b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Integer sum_two(const SumFamily& f, long k) {
    Integer total = 0;
    for (long q = 0; q <= k; q += 2) {
        long p = k - q;
        if (f.family == Family::A)
            total += bar(p) * ipow(p, 2 * f.m) * q;
        else
            total += ipow(p, 2 * f.m + 1) * q;
    }
    return total;
}

Integer sum_three(const SumFamily& f, long k) {
    Integer total = 0;
    bool barred = f.family == Family::B || f.family == Family::B0 || f.family == Family::B1;
    int parity = -1;
    if (f.family == Family::B0 || f.family == Family::R0) parity = 0;
    if (f.family == Family::B1 || f.family == Family::R1) parity = 1;
    for (long r = 0; r <= k; r += 2) {
        for (long p = 0; p + r <= k; ++p) {
            if (parity >= 0 && p % 2 != parity) continue;
            long q = k - r - p;
            if (barred)
                total += bar(p) * bar(q) * ipow(p, 2 * f.m) * ipow(q, 2 * f.n) * r;
            else
                total += ipow(p, 2 * f.m + 1) * ipow(q, 2 * f.n + 1) * r;
        }
    }
    return total;
}

}  // namespace

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "S") return Family::S;
    if (s == "B") return Family::B;
    if (s == "B0") return Family::B0;
    if (s == "B1") return Family::B1;
    if (s == "R") return Family::R;
    if (s == "R0") return Family::R0;
    if (s == "R1") return Family::R1;
    throw std::invalid_argument("unknown family: " + s);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::S: return "S";
        case Family::B: return "B";
        case Family::B0: return "B0";
        case Family::B1: return "B1";
        case Family::R: return "R";
        case Family::R0: return "R0";
        case Family::R1: return "R1";
    }
    return "?";
}

bool is_two_index(Family f) { return f != Family::A && f != Family::S; }

int family_degree(const SumFamily& f) {
    return is_two_index(f.family) ? 2 * f.m + 2 * f.n + 5 : 2 * f.m + 3;
}

Integer sum_direct(const SumFamily& f, long k) {
    if (k < 0) return -sum_direct(f, -k);
    if (k == 0) return 0;
    return is_two_index(f.family) ? sum_three(f, k) : sum_two(f, k);
}

QuasiPoly fit_sum(const SumFamily& f) {
    const int D = family_degree(f);
    QuasiPoly qp;
    qp.nvars = 1;
    for (int parity = 0; parity < 2; ++parity) {
        auto kval = [&](int idx) { return static_cast<long>(2 * idx + (parity == 0 ? 2 : 1)); };
        Grid grid;
        for (int i = 0; i <= D; ++i) grid[{kval(i)}] = Rational(sum_direct(f, kval(i)));
        MultiPoly poly = interpolate_tensor(grid, D);
        for (int i = D + 1; i <= D + 5; ++i) {
            long k = kval(i);
            if (poly.eval(std::vector<long>{k}) != Rational(sum_direct(f, k))) throw std::runtime_error("fit invalid");
            if (poly.eval(std::vector<long>{-k}) != Rational(sum_direct(f, -k))) throw std::runtime_error("fit invalid");
        }
        for (const auto& [e, c] : poly.terms())
            if (e[0] % 2 == 0) throw std::runtime_error("fit invalid");
        if (poly.total_degree() != D || poly.coeff({D}) <= 0) throw std::runtime_error("fit invalid");
        qp.branches[parity == 0 ? "e" : "o"] = poly;
    }
    return qp;
}

MultiPoly shift_variable(const MultiPoly& p, int var, long shift) {
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        int d = e[var];
        Exponents f = e;
        for (int j = 0; j <= d; ++j) {
            f[var] = j;
            Rational coef = c * Rational(binomial(d, j)) * pow_rational(Rational(shift), d - j);
            out.add_term(f, coef);
        }
    }
    return out;
}

NorburyPolyPair norbury_pq(int alpha) {
    MultiPoly n = MultiPoly::variable(1, 0);
    MultiPoly p = MultiPoly::constant(1, 1);
    MultiPoly q = MultiPoly::constant(1, 1);
    MultiPoly four_n2 = n * n * Rational(4);
    MultiPoly four_n = n * Rational(4);
    MultiPoly one = MultiPoly::constant(1, 1);
    for (int a = 0; a < alpha; ++a) {
        MultiPoly p_prev = shift_variable(p, 0, -1);
        MultiPoly q_prev = shift_variable(q, 0, -1);
        p = four_n2 * (p - p_prev) + four_n * p_prev;
        q = four_n2 * (q - q_prev) + (four_n + one) * q;
    }
    return {alpha, p, q};
}

Tilde parse_tilde(const std::string& s) {
    if (s == "p") return Tilde::p;
    if (s == "q") return Tilde::q;
    if (s == "P") return Tilde::P;
    if (s == "Q") return Tilde::Q;
    throw std::invalid_argument("unknown tilde sum: " + s);
}

Integer tilde_sum(Tilde which, int alpha, long n) {
    Integer total = 0;
    for (long l = 0; l <= n; ++l) {
        switch (which) {
            case Tilde::p:
                total += binomial(2 * n, n - l) * ipow(2 * l, 2 * alpha + 1);
                break;
            case Tilde::P:
                total += binomial(2 * n, n - l) * bar(2 * l) * ipow(2 * l, 2 * alpha);
                break;
            case Tilde::q:
            case Tilde::Q:
                total += binomial(2 * n + 1, n - l) * ipow(2 * l + 1, 2 * alpha + 1);
                break;
        }
    }
    return total;
}

}  // namespace surfcount

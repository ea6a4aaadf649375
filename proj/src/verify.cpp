#include "surfcount/verify.hpp"

#include "surfcount/closed.hpp"
#include "surfcount/fit.hpp"
#include "surfcount/oracles.hpp"
#include "surfcount/series.hpp"
#include "surfcount/sums.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace surfcount {

bool SuiteReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << r.id << "  (" << r.anchor << ")";
        if (!r.detail.empty()) os << "  " << r.detail;
        os << "\n";
    }
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"closed-forms", "recursion-consistency", "refined", "sums", "fits",
                                                "psi",          "series",                "oracles", "all"};
    return names;
}

bool valid_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

// Returns an empty string on success, otherwise the failure detail.
using CheckFn = std::function<std::string()>;

class Recorder {
public:
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

    void check(const std::string& id, const std::string& anchor, int criterion, const CheckFn& fn,
               const std::string& pass_detail = "") {
        CheckResult r{id, anchor, criterion, false, ""};
        try {
            std::string failure = fn();
            r.pass = failure.empty();
            r.detail = r.pass ? pass_detail : failure;
        } catch (const std::exception& e) {
            r.detail = std::string("error: ") + e.what();
        }
        out_.push_back(std::move(r));
    }

private:
    std::vector<CheckResult>& out_;
};

std::string vec(const std::vector<long>& b) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
}

long total(const std::vector<long>& b) { return std::accumulate(b.begin(), b.end(), 0L); }

// Nonnegative vectors of length n with even sum at most max_sum.
std::vector<std::vector<long>> even_sum_vectors(int n, long max_sum) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(n, 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == n) {
            if (total(cur) % 2 == 0) out.push_back(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, max_sum);
    return out;
}

std::string mismatch(const std::string& what, const std::vector<long>& b, const Rational& got, const Rational& want) {
    return what + " at " + vec(b) + ": got " + to_string(got) + ", expected " + to_string(want);
}

std::string poly_mismatch(const MultiPoly& got, const MultiPoly& want, const std::vector<std::string>& names) {
    return "got " + got.to_string(names) + ", expected " + want.to_string(names);
}

// Sets every variable past the first nv to zero.
MultiPoly restrict_leading(const MultiPoly& p, int nv) {
    MultiPoly out(nv);
    for (const auto& [e, c] : p.terms()) {
        if (std::any_of(e.begin() + nv, e.end(), [](int x) { return x != 0; })) continue;
        out.add_term(Exponents(e.begin(), e.begin() + nv), c);
    }
    return out;
}

// ---------------------------------------------------------------- closed-forms

void closed_forms_suite(Recorder& rec, Engine& eng) {
    rec.check("catalan.recursion", "disc counts are Catalan numbers", 1, [&]() -> std::string {
        for (long m = 0; m <= 12; ++m) {
            Integer got = eng.G(0, {2 * m});
            if (got != catalan(m)) return mismatch("G(0,1)", {2 * m}, Rational(got), Rational(catalan(m)));
        }
        return "";
    }, "m = 0..12");

    struct Family {
        std::string id;
        std::string anchor;
        int g, n;
        std::function<bool(const std::vector<long>&)> member;
    };
    auto all_even = [](const std::vector<long>& b) {
        return std::all_of(b.begin(), b.end(), [](long x) { return x % 2 == 0; });
    };
    auto any_odd = [&](const std::vector<long>& b) { return !all_even(b); };
    auto any = [](const std::vector<long>&) { return true; };
    std::vector<Family> families{
        {"G.closed.disc", "disc closed form", 0, 1, any},
        {"G.closed.annulus.even", "annulus closed form, even lengths", 0, 2, all_even},
        {"G.closed.annulus.odd", "annulus closed form, odd lengths", 0, 2, any_odd},
        {"G.closed.pants.even", "pants closed form, all lengths even", 0, 3, all_even},
        {"G.closed.pants.odd", "pants closed form, two odd lengths", 0, 3, any_odd},
        {"G.closed.torus", "once-punctured torus closed form", 1, 1, any},
    };
    for (const auto& f : families) {
        rec.check(f.id, f.anchor + " equals the recursion", 2, [&]() -> std::string {
            size_t checked = 0;
            for (const auto& b : even_sum_vectors(f.n, 14)) {
                if (!f.member(b)) continue;
                ++checked;
                Integer got = eng.G(f.g, b), want = closed_G(f.g, f.n, b);
                if (got != want) return mismatch("G", b, Rational(got), Rational(want));
            }
            return checked == 0 ? "no admissible vectors" : "";
        }, "sum <= 14");
    }

    std::vector<std::pair<int, int>> nfam{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 1}};
    for (auto [g, n] : nfam) {
        std::string id = "N.closed." + std::to_string(g) + std::to_string(n);
        rec.check(id, "non-boundary-parallel closed form", 3, [&, g = g, n = n]() -> std::string {
            for (const auto& b : even_sum_vectors(n, 14)) {
                Integer got = eng.N(g, b), want = closed_N(g, n, b);
                if (got != want) return mismatch("N", b, Rational(got), Rational(want));
            }
            return "";
        }, "sum <= 14");
    }
}

// ------------------------------------------------------- recursion-consistency

void recursion_suite(Recorder& rec, Engine& eng) {
    std::vector<std::pair<int, int>> fams{{0, 2}, {0, 3}, {0, 4}, {1, 1}, {1, 2}};
    for (auto [g, n] : fams) {
        std::string id = "convolution." + std::to_string(g) + std::to_string(n);
        rec.check(id, "G is the local-count convolution of N", 4, [&, g = g, n = n]() -> std::string {
            for (const auto& b : even_sum_vectors(n, 12)) {
                Integer got = eng.convolve_G_from_N(g, b), want = eng.G(g, b);
                if (got != want) return mismatch("convolution", b, Rational(got), Rational(want));
            }
            return "";
        }, "sum <= 12");
    }
}

// --------------------------------------------------------------------- refined

struct RefinedCell {
    long k, t;
    std::string poly;
};

// Every (k, t) cell for one parity class; cells not listed are zero.
void refined_table(Recorder& rec, Engine& eng, int g, int n, const std::string& cls,
                   const std::vector<RefinedCell>& cells, const std::string& id) {
    rec.check(id, "refined N-hat table, parity class " + cls, 7, [&]() -> std::string {
        const long tmax = 2L * g + n - 1;
        int odd_needed = static_cast<int>(std::count(cls.begin(), cls.end(), 'o'));
        int checked = 0;
        for (long k = 0; k <= n; ++k) {
            for (long t = 0; t <= tmax; ++t) {
                const int nv = static_cast<int>(n - k);
                MultiPoly want(nv);
                for (const auto& c : cells)
                    if (c.k == k && c.t == t) want = parse_poly(c.poly, nv, "b");
                // Zero entries are even, so the class is empty when its odd entries do not fit.
                if (odd_needed > nv) {
                    if (!want.is_zero()) return "nonzero cell for an empty class";
                    ++checked;
                    continue;
                }
                FitReport r = fit_Nhat_refined(eng, g, n, t, k, cls.substr(0, nv));
                ++checked;
                if (r.poly() != want)
                    return "cell k=" + std::to_string(k) + " t=" + std::to_string(t) + ": " +
                           poly_mismatch(r.poly(), want, var_names("b", nv));
            }
        }
        return "";
    });
}

void refined_suite(Recorder& rec, Engine& eng) {
    refined_table(rec, eng, 0, 4, "eeee",
                  {{0, 0, "1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 + 1/4*b4^2 - 1"},
                   {0, 1, "3"},
                   {1, 1, "1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 - 1"},
                   {1, 2, "3"},
                   {2, 2, "1/4*b1^2 + 1/4*b2^2"},
                   {2, 3, "2"},
                   {3, 3, "1/4*b1^2 + 2"},
                   {4, 3, "1"}},
                  "refined.table.04.even");
    refined_table(rec, eng, 0, 4, "ooee",
                  {{0, 0, "1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 + 1/4*b4^2 - 1/2"},
                   {0, 1, "1"},
                   {1, 1, "1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 - 1/2"},
                   {1, 2, "1"},
                   {2, 2, "1/4*b1^2 + 1/4*b2^2 + 1/2"}},
                  "refined.table.04.two-odd");
    refined_table(rec, eng, 0, 4, "oooo",
                  {{0, 0, "1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 + 1/4*b4^2 - 1"}, {0, 1, "3"}},
                  "refined.table.04.four-odd");
    refined_table(rec, eng, 1, 1, "e", {{0, 0, "1/48*b1^2 - 1/12"}, {0, 1, "1/2"}, {1, 2, "1"}},
                  "refined.table.11");
    refined_table(rec, eng, 0, 3, "eee", {{0, 0, "1"}, {1, 1, "1"}, {2, 2, "1"}, {3, 2, "1"}},
                  "refined.table.03.even");
    refined_table(rec, eng, 0, 3, "ooe", {{0, 0, "1"}, {1, 1, "1"}}, "refined.table.03.two-odd");

    std::vector<std::pair<int, int>> fams{{0, 3}, {0, 4}, {1, 1}, {1, 2}};
    for (auto [g, n] : fams) {
        std::string tag = std::to_string(g) + std::to_string(n);
        const long tmax = 2L * g + n - 1;
        rec.check("refinement-sum.N." + tag, "N is the sum of its t-refinements", 8,
                  [&, g = g, n = n]() -> std::string {
                      for (const auto& b : even_sum_vectors(n, 12)) {
                          Integer s = 0;
                          for (long t = 0; t <= tmax + 2; ++t) s += eng.N_t(g, b, t);
                          if (s != eng.N(g, b)) return mismatch("sum of N_t", b, Rational(s), Rational(eng.N(g, b)));
                      }
                      return "";
                  },
                  "sum <= 12");
        rec.check("refinement-sum.G." + tag, "G is the sum of its t-refinements", 8,
                  [&, g = g, n = n]() -> std::string {
                      for (const auto& b : even_sum_vectors(n, 12)) {
                          Integer s = 0;
                          for (long t = 0; t <= tmax + 2; ++t) s += eng.G_t(g, b, t);
                          if (s != eng.G(g, b)) return mismatch("sum of G_t", b, Rational(s), Rational(eng.G(g, b)));
                      }
                      return "";
                  },
                  "sum <= 12");
        rec.check("refined-G.routes." + tag, "refined G by convolution equals refined G by region translation", 8,
                  [&, g = g, n = n]() -> std::string {
                      for (const auto& b : even_sum_vectors(n, 12)) {
                          for (long t = 0; t <= tmax + 1; ++t) {
                              Integer a = eng.convolve_G_from_N(g, b, t), c = eng.G_t_via_r(g, b, t);
                              if (a != c) return mismatch("G_t t=" + std::to_string(t), b, Rational(a), Rational(c));
                          }
                      }
                      return "";
                  },
                  "sum <= 12");
        rec.check("t-bounds." + tag,
                  "for k < n, N_t vanishes outside max(k, 2g+n-1-sum/2) <= t <= min(2g+n-1, k+3g-3+n) and is positive "
                  "at t = k once sum/2 >= 2g+n-1-k; for k = n only t = 2g+n-1 occurs",
                  10, [&, g = g, n = n]() -> std::string {
                      // Collect every violation so the report shows where the bound breaks.
                      std::vector<std::string> bad;
                      for (const auto& b : even_sum_vectors(n, 12)) {
                          const long k = std::count(b.begin(), b.end(), 0L);
                          const long half = total(b) / 2;
                          const long lo = k == n ? tmax : std::max(k, tmax - half);
                          const long hi = k == n ? tmax : std::min(tmax, k + 3L * g - 3 + n);
                          for (long t = 0; t <= tmax + 2; ++t) {
                              Integer v = eng.N_t(g, b, t);
                              if ((t < lo || t > hi) && v != 0)
                                  bad.push_back("N_t=" + to_string(v) + " at " + vec(b) + " t=" + std::to_string(t));
                          }
                          if (k == n && eng.N_t(g, b, tmax) != 1) bad.push_back("empty diagram missing at " + vec(b));
                          if (k < n && half >= tmax - k && eng.N_t(g, b, k) <= 0)
                              bad.push_back("N_t not positive at t = k for " + vec(b));
                      }
                      std::string out;
                      for (const auto& x : bad) out += (out.empty() ? "" : "; ") + x;
                      return out;
                  },
                  "sum <= 12");
    }

    std::vector<std::pair<int, int>> dil{{0, 2}, {0, 3}, {0, 4}, {1, 2}};
    for (auto [g, n] : dil) {
        rec.check("dilaton." + std::to_string(g) + std::to_string(n),
                  "filling an unmarked boundary multiplies by the region count", 9, [&, g = g, n = n]() -> std::string {
                      for (const auto& rest : even_sum_vectors(n - 1, 10)) {
                          std::vector<long> b{0};
                          b.insert(b.end(), rest.begin(), rest.end());
                          long rmax = 2 + total(rest) / 2 + 2L * g + n;
                          for (long r = 1; r <= rmax; ++r) {
                              Integer lhs = eng.G_r(g, b, r), rhs = Integer(r) * eng.G_r(g, rest, r);
                              if (lhs != rhs)
                                  return mismatch("G_r r=" + std::to_string(r), b, Rational(lhs), Rational(rhs));
                          }
                      }
                      return "";
                  },
                  "sum <= 10");
    }
}

// ------------------------------------------------------------------------ sums

void sums_suite(Recorder& rec) {
    struct Expected {
        SumFamily f;
        std::string id, even, odd;
    };
    const std::string l3 = "1/144*k^9 - 1/6*k^7 + 7/5*k^5 - 40/9*k^3";
    const std::string b02 = "1/6048*k^9 + 1/144*k^7 - 169/1440*k^5 + 185/378*k^3";
    const std::string b11 = "1/20160*k^9 - 1/840*k^7 + 1/96*k^5 - 23/630*k^3";
    std::vector<Expected> table{
        {{Family::A, 0, 0}, "A0", "1/12*k^3 + 2/3*k", "1/12*k^3 - 1/12*k"},
        {{Family::A, 1, 0}, "A1", "1/40*k^5 - 1/6*k^3 + 4/15*k", "1/40*k^5 - 1/6*k^3 + 17/120*k"},
        {{Family::A, 2, 0}, "A2", "1/84*k^7 - 1/6*k^5 + 2/3*k^3 - 16/21*k", "1/84*k^7 - 1/6*k^5 + 2/3*k^3 - 43/84*k"},
        {{Family::A, 3, 0}, "A3", l3 + " + 64/15*k", l3 + " + 769/240*k"},
        {{Family::B, 0, 0}, "B00", "1/240*k^5 + 1/8*k^3 + 13/30*k", "1/240*k^5 + 1/8*k^3 - 31/240*k"},
        {{Family::B, 0, 1}, "B01", "1/1680*k^7 + 7/480*k^5 - 7/60*k^3 + 41/210*k",
         "1/1680*k^7 + 7/480*k^5 - 7/60*k^3 + 341/3360*k"},
        {{Family::B, 0, 2}, "B02", b02 + " - 17/30*k", b02 + " - 91/240*k"},
        {{Family::B, 1, 1}, "B11", b11 + " + 3/70*k", b11 + " + 61/2240*k"},
    };
    for (const auto& e : table) {
        rec.check("sum-fit." + e.id, "odd quasi-polynomial for the special sum, both parities", 5,
                  [&]() -> std::string {
                      QuasiPoly q = fit_sum(e.f);
                      MultiPoly even = parse_poly(e.even, 1, "k"), odd = parse_poly(e.odd, 1, "k");
                      if (q.branches.at("e") != even) return "even: " + poly_mismatch(q.branches.at("e"), even, {"k"});
                      if (q.branches.at("o") != odd) return "odd: " + poly_mismatch(q.branches.at("o"), odd, {"k"});
                      return "";
                  },
                  "validated at 5 extra points per branch");
    }

    const std::vector<std::string> P{"n + 1", "4*n^2", "32*n^3 - 16*n^2", "384*n^4 - 512*n^3 + 192*n^2"};
    const std::vector<std::string> Q{"2*n + 1", "8*n^2 + 6*n + 1", "64*n^3 + 48*n^2 + 10*n + 1",
                                     "768*n^4 + 320*n^3 - 8*n^2 + 14*n + 1"};
    for (int a = 0; a <= 3; ++a) {
        rec.check("tilde-sums." + std::to_string(a), "central-binomial factorization of the tilde sums", 5,
                  [&, a]() -> std::string {
                      NorburyPolyPair pq = norbury_pq(a);
                      MultiPoly n = MultiPoly::variable(1, 0);
                      MultiPoly one = MultiPoly::constant(1, 1);
                      MultiPoly Pa = n * pq.p + (a == 0 ? one : MultiPoly(1));
                      MultiPoly Qa = (n * Rational(2) + one) * pq.q;
                      MultiPoly Pw = parse_poly(P[a], 1, "n"), Qw = parse_poly(Q[a], 1, "n");
                      if (Pa != Pw) return "P: " + poly_mismatch(Pa, Pw, {"n"});
                      if (Qa != Qw) return "Q: " + poly_mismatch(Qa, Qw, {"n"});
                      for (long m = 0; m <= 12; ++m) {
                          Rational c(binomial(2 * m, m));
                          std::vector<long> x{m};
                          if (Rational(tilde_sum(Tilde::P, a, m)) != c * Pa.eval(x)) return "direct P at n=" + std::to_string(m);
                          if (Rational(tilde_sum(Tilde::Q, a, m)) != c * Qa.eval(x)) return "direct Q at n=" + std::to_string(m);
                          if (Rational(tilde_sum(Tilde::p, a, m)) != c * (n * pq.p).eval(x))
                              return "direct p at n=" + std::to_string(m);
                          if (Rational(tilde_sum(Tilde::q, a, m)) != c * Qa.eval(x))
                              return "direct q at n=" + std::to_string(m);
                      }
                      return "";
                  },
                  "direct sums n = 0..12");
    }
}

// ------------------------------------------------------------------------ fits

void fits_suite(Recorder& rec, Engine& eng, const FitOptions& opt) {
    struct Printed {
        int g, n;
        std::string parity, poly, id;
    };
    std::vector<Printed> printed{
        {0, 4, "eeee", "1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 + 1/4*b4^2 + 2", "nhat.04.even"},
        {0, 4, "ooee", "1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 + 1/4*b4^2 + 1/2", "nhat.04.two-odd"},
        {0, 4, "oooo", "1/4*b1^2 + 1/4*b2^2 + 1/4*b3^2 + 1/4*b4^2 + 2", "nhat.04.four-odd"},
        {1, 1, "e", "1/48*b1^2 + 5/12", "nhat.11"},
        {0, 3, "eee", "1", "nhat.03.even"},
    };
    for (const auto& p : printed) {
        rec.check(p.id, "N-hat quasi-polynomial branch", 6, [&]() -> std::string {
            FitReport r = fit_Nhat(eng, p.g, p.n, p.parity, opt);
            MultiPoly want = parse_poly(p.poly, p.n, "b");
            return r.poly() == want ? "" : poly_mismatch(r.poly(), want, var_names("b", p.n));
        });
    }
    std::vector<std::pair<int, int>> open{{1, 2}, {0, 5}};
    for (auto [g, n] : open) {
        for (const auto& parity : check_branches(n)) {
            rec.check("nhat." + std::to_string(g) + std::to_string(n) + "." + parity,
                      "N-hat is a quasi-polynomial of degree 3g-3+n in the squares", 6,
                      [&, g = g, n = n, parity]() -> std::string {
                          FitReport r = fit_Nhat(eng, g, n, parity, opt);
                          if (r.validation.size() < 10) return "fewer than 10 held-out points";
                          if (r.poly().total_degree() != 2 * (3 * g - 3 + n)) return "wrong degree";
                          return "";
                      },
                      "held-out points validated");
        }
    }
    struct GPoly {
        int g, n;
        std::string parity, poly, id;
    };
    std::vector<GPoly> gpolys{
        {0, 3, "eee", "m1*m2*m3 + m1*m2 + m1*m3 + m2*m3 + m1 + m2 + m3 + 1", "gpoly.03.even"},
        {0, 3, "ooe", "4*m1*m2*m3 + 4*m1*m2 + 2*m1*m3 + 2*m2*m3 + 2*m1 + 2*m2 + m3 + 1", "gpoly.03.two-odd"},
        {1, 1, "e", "1/12*m1^2 + 5/12*m1 + 1", "gpoly.11"},
    };
    for (const auto& p : gpolys) {
        rec.check(p.id, "G over central binomials is the printed polynomial", 6, [&]() -> std::string {
            FitReport r = fit_G_poly(eng, p.g, p.n, p.parity, std::nullopt, opt);
            MultiPoly want = parse_poly(p.poly, p.n, "m");
            return r.poly() == want ? "" : poly_mismatch(r.poly(), want, var_names("m", p.n));
        });
    }
}

// ------------------------------------------------------------------------- psi

void psi_suite(Recorder& rec, Engine& eng, const FitOptions& opt) {
    rec.check("psi.11", "top coefficient of N-hat gives <psi_1> = 1/24", 11, [&]() -> std::string {
        auto v = extract_psi(eng, 1, 1, opt);
        if (v.size() != 1 || v[0].value != ratio(1, 24)) return "got " + psi_json_line(v.at(0));
        return "";
    });
    rec.check("psi.04", "top coefficients of N-hat give <psi_i> = 1 on the four-holed sphere", 11,
              [&]() -> std::string {
                  auto v = extract_psi(eng, 0, 4, opt);
                  if (v.size() != 4) return "expected 4 values";
                  for (const auto& p : v)
                      if (p.value != 1) return "got " + psi_json_line(p);
                  return "";
              });
    std::vector<std::pair<int, int>> fams{{0, 3}, {0, 4}, {1, 1}, {1, 2}};
    for (auto [g, n] : fams) {
        std::string tag = std::to_string(g) + std::to_string(n);
        rec.check("branches-top." + tag, "all parity branches agree in top degree", 11,
                  [&, g = g, n = n]() -> std::string {
                      const int D = 2 * (3 * g - 3 + n);
                      std::vector<ParitySignature> ps{std::string(n, 'e')};
                      if (n >= 2) ps.push_back("oo" + std::string(n - 2, 'e'));
                      if (n >= 4) ps.push_back(std::string(4, 'o') + std::string(n - 4, 'e'));
                      MultiPoly top = fit_Nhat(eng, g, n, ps[0], opt).poly().homogeneous_part(D);
                      for (size_t i = 1; i < ps.size(); ++i)
                          if (fit_Nhat(eng, g, n, ps[i], opt).poly().homogeneous_part(D) != top)
                              return "branch " + ps[i] + " differs";
                      return "";
                  });
        rec.check("lattice-top." + tag, "N-hat and the lattice count share top-degree terms", 11,
                  [&, g = g, n = n]() -> std::string {
                      return compare_top_degree(eng, g, n, opt) ? "" : "top-degree mismatch";
                  });
        rec.check("refined-top." + tag, "the t = k refinements share the top coefficients of N-hat", 11,
                  [&, g = g, n = n]() -> std::string {
                      const int D = 2 * (3 * g - 3 + n);
                      MultiPoly top = fit_Nhat(eng, g, n, std::string(n, 'e'), opt).poly().homogeneous_part(D);
                      for (int k = 0; k < n; ++k) {
                          const int nv = n - k;
                          MultiPoly want = restrict_leading(top, nv);
                          MultiPoly got =
                              fit_Nhat_refined(eng, g, n, k, k, std::string(nv, 'e'), opt).poly().homogeneous_part(D);
                          if (got != want)
                              return "k=" + std::to_string(k) + ": " + poly_mismatch(got, want, var_names("b", nv));
                      }
                      return "";
                  });
    }
}

// ---------------------------------------------------------------------- series

void series_suite(Recorder& rec, Engine& eng, int threads) {
    struct PB {
        int g, n, T;
    };
    for (const auto& p : {PB{0, 2, 10}, PB{0, 3, 8}, PB{1, 1, 8}}) {
        std::string tag = std::to_string(p.g) + std::to_string(p.n);
        rec.check("pullback." + tag, "x = z + 1/z turns the G series into the N series", 12, [&]() -> std::string {
            TruncSeries r = pullback_check(eng, p.g, p.n, p.T, std::nullopt, threads);
            return r.is_zero() ? "" : "residual " + r.first_term();
        }, "T = " + std::to_string(p.T));
        for (long t = 0; t <= 2L * p.g + p.n - 1; ++t) {
            rec.check("pullback." + tag + ".t" + std::to_string(t), "the change of coordinates respects t", 12,
                      [&, t]() -> std::string {
                          TruncSeries r = pullback_check(eng, p.g, p.n, p.T, t, threads);
                          return r.is_zero() ? "" : "residual " + r.first_term();
                      },
                      "T = " + std::to_string(p.T));
        }
    }
    for (const auto& name : closed_form_names()) {
        rec.check("closed-series." + name, "closed-form expansion equals the count-built series", 12,
                  [&]() -> std::string {
                      TruncSeries d = expand_closed_form(name, 10) - closed_form_counterpart(eng, name, 10, threads);
                      return d.is_zero() ? "" : "difference " + d.first_term();
                  },
                  "T = 10");
    }
    for (const auto& p : {PB{0, 1, 9}, PB{0, 2, 7}, PB{0, 3, 6}, PB{1, 1, 7}}) {
        std::string tag = std::to_string(p.g) + std::to_string(p.n);
        rec.check("diff-recursion." + tag, "region-refined differential recursion", 12, [&]() -> std::string {
            TruncSeries r = diff_recursion_residual(eng, p.g, p.n, p.T, complete_alpha_bound(p.n, p.T + 1, false),
                                                    threads);
            return r.is_zero() ? "" : "residual " + r.first_term();
        }, "T = " + std::to_string(p.T));
        rec.check("first-diff." + tag, "differentiated recursion at alpha = 1", 12, [&]() -> std::string {
            TruncSeries r = first_diff_residual(eng, p.g, p.n, p.T, threads);
            return r.is_zero() ? "" : "residual " + r.first_term();
        }, "T = " + std::to_string(p.T));
    }
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}}) {
        rec.check("scaling." + std::to_string(g) + std::to_string(n), "region and t gradings differ by r = t + chi + sum/2",
                  12, [&, g = g, n = n]() -> std::string {
                      std::string detail;
                      return scaling_check(eng, g, n, 8, &detail, threads) ? "" : detail;
                  },
                  "T = 8");
    }
}

// --------------------------------------------------------------------- oracles

void oracles_suite(Recorder& rec, Engine& eng) {
    rec.check("disc-enumeration", "noncrossing matchings are counted by Catalan numbers with m+1 regions", 1,
              [&]() -> std::string {
                  for (int m = 0; m <= 8; ++m) {
                      auto ms = enumerate_disc(m);
                      if (Integer(static_cast<unsigned long>(ms.size())) != catalan(m))
                          return "count at m=" + std::to_string(m);
                      if (Integer(static_cast<unsigned long>(ms.size())) != eng.G(0, {2L * m}))
                          return "recursion disagrees at m=" + std::to_string(m);
                      for (const auto& x : ms)
                          if (x.regions != m + 1) return "region count at m=" + std::to_string(m);
                  }
                  return "";
              },
              "m = 0..8");
    rec.check("pants-search", "pants profiles are unique and match the classification", 13, [&]() -> std::string {
        size_t count = 0;
        for (const auto& b : even_sum_vectors(3, 30)) {
            auto found = pants_search(b[0], b[1], b[2]);
            if (found.size() != 1) return std::to_string(found.size()) + " profiles at " + vec(b);
            if (!(found[0] == pants_classify(b[0], b[1], b[2]))) return "classification differs at " + vec(b);
            Integer prod = Integer(bar(b[0])) * bar(b[1]) * bar(b[2]);
            if (prod != eng.N(0, b)) return mismatch("N(0,3)", b, Rational(eng.N(0, b)), Rational(prod));
            ++count;
        }
        return "";
    }, "sum <= 30");
    rec.check("arrow-construction", "arrow diagrams determine arc diagrams injectively", 13, [&]() -> std::string {
        for (int m = 0; m <= 6; ++m) {
            auto all = all_arrow_diagrams(m);
            std::set<ArcStructure> seen;
            for (const auto& a : all) seen.insert(arrows_to_arcs(a));
            Integer size(static_cast<unsigned long>(all.size()));
            if (size != binomial(2 * m, m)) return "arrow count at m=" + std::to_string(m);
            if (seen.size() != all.size()) return "collision at m=" + std::to_string(m);
            if (size != eng.G(0, {2L * m, 0})) return "annulus count disagrees at m=" + std::to_string(m);
        }
        return "";
    }, "m = 0..6");
}

void run_one(const std::string& name, Recorder& rec, Engine& eng, const VerifyOptions& opt) {
    FitOptions fo;
    fo.threads = opt.threads;
    if (name == "closed-forms") closed_forms_suite(rec, eng);
    else if (name == "recursion-consistency") recursion_suite(rec, eng);
    else if (name == "refined") refined_suite(rec, eng);
    else if (name == "sums") sums_suite(rec);
    else if (name == "fits") fits_suite(rec, eng, fo);
    else if (name == "psi") psi_suite(rec, eng, fo);
    else if (name == "series") series_suite(rec, eng, opt.threads);
    else if (name == "oracles") oracles_suite(rec, eng);
    else throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

SuiteReport run_suite(const std::string& name, Engine& eng, const VerifyOptions& opt) {
    if (!valid_suite(name)) throw std::invalid_argument("unknown suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    Recorder rec(rep.results);
    if (name == "all") {
        for (const auto& s : suite_names())
            if (s != "all") run_one(s, rec, eng, opt);
    } else {
        run_one(name, rec, eng, opt);
    }
    return rep;
}

}  // namespace surfcount

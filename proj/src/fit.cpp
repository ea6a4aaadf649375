#include "surfcount/fit.hpp"

#include "surfcount/parallel.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace surfcount {

namespace {

using Evaluator = std::function<Rational(const std::vector<long>&)>;

struct FitSetup {
    std::vector<std::vector<long>> nodes;     // per variable
    std::vector<std::vector<long>> held_out;  // extra points
};

std::vector<long> parity_nodes(char parity, int count, long start_m) {
    std::vector<long> v;
    for (int i = 0; i < count; ++i) v.push_back(parity == 'e' ? 2 * (start_m + i) : 2 * (start_m + i) + 1);
    return v;
}

std::vector<std::vector<long>> cartesian(const std::vector<std::vector<long>>& nodes) {
    std::vector<std::vector<long>> out{{}};
    for (const auto& axis : nodes) {
        std::vector<std::vector<long>> next;
        for (const auto& prefix : out)
            for (long x : axis) {
                auto p = prefix;
                p.push_back(x);
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

// Held-out points: the next two values along each axis, then seeded random points off the grid.
std::vector<std::vector<long>> held_out_points(const std::vector<std::vector<long>>& nodes,
                                               const std::vector<std::vector<long>>& extra_axis, int count,
                                               unsigned seed) {
    const size_t n = nodes.size();
    std::vector<std::vector<long>> pts;
    std::set<std::vector<long>> seen;
    std::set<std::vector<long>> grid;
    for (auto& p : cartesian(nodes)) grid.insert(p);
    auto push = [&](const std::vector<long>& p) {
        if (grid.count(p) || seen.count(p)) return;
        seen.insert(p);
        pts.push_back(p);
    };
    for (size_t v = 0; v < n; ++v) {
        for (size_t e = 0; e < std::min<size_t>(2, extra_axis[v].size()); ++e) {
            std::vector<long> p;
            for (size_t w = 0; w < n; ++w) p.push_back(nodes[w].front());
            p[v] = extra_axis[v][e];
            push(p);
        }
    }
    if (n == 0) return pts;
    std::mt19937 rng(seed);
    std::vector<std::vector<long>> pools(n);
    for (size_t v = 0; v < n; ++v) {
        pools[v] = nodes[v];
        pools[v].insert(pools[v].end(), extra_axis[v].begin(), extra_axis[v].end());
    }
    int attempts = 0;
    size_t target = pts.size() + static_cast<size_t>(count);
    while (pts.size() < target && attempts < 10000) {
        ++attempts;
        std::vector<long> p;
        for (size_t v = 0; v < n; ++v) p.push_back(pools[v][rng() % pools[v].size()]);
        push(p);
    }
    return pts;
}

MultiPoly fit_and_validate(Evaluator eval, const std::vector<std::vector<long>>& nodes,
                           const std::vector<std::vector<long>>& held_out, int degree_bound, int threads,
                           std::vector<ValidationPoint>& validation) {
    const int n = static_cast<int>(nodes.size());
    auto grid_pts = cartesian(nodes);
    std::vector<Rational> grid_vals(grid_pts.size());
    parallel_for(grid_pts.size(), threads, [&](size_t i) { grid_vals[i] = eval(grid_pts[i]); });
    MultiPoly poly(n);
    if (n == 0) {
        poly = MultiPoly::constant(0, grid_vals[0]);
    } else {
        Grid grid;
        for (size_t i = 0; i < grid_pts.size(); ++i) grid[grid_pts[i]] = grid_vals[i];
        poly = interpolate_tensor(grid, degree_bound);
    }
    std::vector<Rational> expected(held_out.size());
    parallel_for(held_out.size(), threads, [&](size_t i) { expected[i] = eval(held_out[i]); });
    validation.clear();
    std::string first_bad;
    for (size_t i = 0; i < held_out.size(); ++i) {
        Rational got = poly.eval(held_out[i]);
        validation.push_back({held_out[i], expected[i], got});
        if (got != expected[i] && first_bad.empty()) {
            std::ostringstream os;
            os << "fit invalid: held-out mismatch at (";
            for (size_t j = 0; j < held_out[i].size(); ++j) os << (j ? "," : "") << held_out[i][j];
            os << "): expected " << to_string(expected[i]) << ", fitted " << to_string(got);
            first_bad = os.str();
        }
    }
    if (!first_bad.empty()) throw std::runtime_error(first_bad);
    return poly;
}

bool symmetric_within_parity(const MultiPoly& p, const ParitySignature& parity) {
    const int n = p.nvars();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (parity[i] != parity[j]) continue;
            std::vector<int> perm(n);
            for (int k = 0; k < n; ++k) perm[k] = k;
            std::swap(perm[i], perm[j]);
            if (p.permuted(perm) != p) return false;
        }
    return true;
}

bool top_positive(const MultiPoly& p) {
    MultiPoly top = p.top_part();
    for (const auto& [e, c] : top.terms())
        if (c <= 0) return false;
    return true;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error("fit invalid: " + what);
}

int parity_sum(const ParitySignature& parity) {
    int odd = 0;
    for (char c : parity) odd += c == 'o';
    return odd;
}

Rational nhat_value(Engine& eng, int g, const std::vector<long>& b) {
    Integer barprod = 1;
    for (long x : b) barprod *= bar(x);
    return Rational(eng.N(g, b)) / Rational(barprod);
}

std::string parity_csv(const ParitySignature& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += p[i];
    }
    return s;
}

void check_fit_args(int g, int n) {
    if (g < 0 || n < 1) throw std::invalid_argument("need g >= 0 and n >= 1");
    if (g == 0 && n <= 2) throw std::invalid_argument("no quasi-polynomial for discs and annuli");
}

}  // namespace

std::string target_name(FitTarget t) {
    switch (t) {
        case FitTarget::Nhat: return "Nhat";
        case FitTarget::NhatRefined: return "NhatRefined";
        case FitTarget::Gpoly: return "Gpoly";
        case FitTarget::GpolyRefined: return "GpolyRefined";
        case FitTarget::Lattice: return "Lattice";
    }
    return "?";
}

ParitySignature parse_parity(const std::string& csv, int n) {
    ParitySignature p;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item != "e" && item != "o") throw std::invalid_argument("parity entries must be e or o");
        p += item[0];
    }
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("parity length must equal n");
    return p;
}

std::string FitReport::to_json() const {
    std::ostringstream os;
    const int nv = branches.nvars;
    bool gvars = target == FitTarget::Gpoly || target == FitTarget::GpolyRefined;
    auto names = var_names(gvars ? "m" : "b", nv);
    os << "{\"target\":\"" << target_name(target) << "\",\"g\":" << g << ",\"n\":" << n;
    if (t) os << ",\"t\":" << *t;
    if (k) os << ",\"k\":" << *k;
    os << ",\"parity\":\"" << parity_csv(parity) << "\",\"degree\":" << degree;
    os << ",\"polynomial\":" << poly().to_json(names);
    os << ",\"text\":\"" << poly().to_string(names) << "\"";
    os << ",\"validation\":[";
    for (size_t i = 0; i < validation.size(); ++i) {
        const auto& v = validation[i];
        os << (i ? "," : "") << "{\"b\":[";
        for (size_t j = 0; j < v.b.size(); ++j) os << (j ? "," : "") << v.b[j];
        os << "],\"expected\":\"" << to_string(v.expected) << "\",\"got\":\"" << to_string(v.got) << "\"}";
    }
    os << "]}";
    return os.str();
}

FitReport fit_Nhat(Engine& eng, int g, int n, const ParitySignature& parity, const FitOptions& opt) {
    check_fit_args(g, n);
    if (static_cast<int>(parity.size()) != n) throw std::invalid_argument("parity length must equal n");
    FitReport rep;
    rep.target = FitTarget::Nhat;
    rep.g = g;
    rep.n = n;
    rep.parity = parity;
    const int D = 2 * (3 * g - 3 + n);
    rep.degree = D;
    rep.branches.nvars = n;
    if (parity_sum(parity) % 2 != 0) {
        rep.branches.branches[parity] = MultiPoly(n);
        return rep;
    }
    std::vector<std::vector<long>> nodes, extra;
    for (char c : parity) {
        nodes.push_back(parity_nodes(c, D + 1, 1));
        extra.push_back(parity_nodes(c, 2, D + 2));
    }
    auto held = held_out_points(nodes, extra, opt.held_out, opt.seed);
    MultiPoly p = fit_and_validate([&](const std::vector<long>& b) { return nhat_value(eng, g, b); }, nodes, held, D,
                                   opt.threads, rep.validation);
    require(p.all_exponents_even(), "odd exponent");
    require(p.total_degree() == D, "degree");
    require(top_positive(p), "top-degree sign");
    require(symmetric_within_parity(p, parity), "symmetry");
    rep.branches.branches[parity] = p;
    return rep;
}

FitReport fit_Nhat_refined(Engine& eng, int g, int n, long t, long k, const ParitySignature& parity,
                           const FitOptions& opt) {
    check_fit_args(g, n);
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    if (static_cast<long>(parity.size()) != n - k) throw std::invalid_argument("parity length must equal n - k");
    FitReport rep;
    rep.target = FitTarget::NhatRefined;
    rep.g = g;
    rep.n = n;
    rep.t = t;
    rep.k = k;
    rep.parity = parity;
    const int nv = static_cast<int>(n - k);
    const long bound = 2 * (3 * g - 3 + n - t + k);
    rep.degree = static_cast<int>(std::max(bound, -1L));
    rep.branches.nvars = nv;
    auto eval = [&](const std::vector<long>& nz) -> Rational {
        std::vector<long> b = nz;
        b.resize(n, 0);
        Integer barprod = 1;
        for (long x : b) barprod *= bar(x);
        return Rational(eng.N_t(g, b, t)) / Rational(barprod);
    };
    ParitySignature sig = parity + std::string(k, 'z');
    if (parity_sum(parity) % 2 != 0) {
        rep.branches.branches[sig] = MultiPoly(nv);
        return rep;
    }
    const int per_var = static_cast<int>(std::max(bound, 0L));
    std::vector<std::vector<long>> nodes, extra;
    for (char c : parity) {
        nodes.push_back(parity_nodes(c, per_var + 1, 1));
        extra.push_back(parity_nodes(c, 2, per_var + 2));
    }
    auto held = held_out_points(nodes, extra, nv == 0 ? 0 : opt.held_out, opt.seed);
    MultiPoly p = fit_and_validate(eval, nodes, held, per_var, opt.threads, rep.validation);
    require(p.all_exponents_even(), "odd exponent");
    require(p.is_zero() || p.total_degree() <= bound, "degree bound");
    if (t == k && nv > 0) require(p.total_degree() == 2 * (3 * g - 3 + n), "degree at t = k");
    rep.branches.branches[sig] = p;
    return rep;
}

FitReport fit_G_poly(Engine& eng, int g, int n, const ParitySignature& parity, std::optional<long> t,
                     const FitOptions& opt) {
    check_fit_args(g, n);
    if (static_cast<int>(parity.size()) != n) throw std::invalid_argument("parity length must equal n");
    FitReport rep;
    rep.target = t ? FitTarget::GpolyRefined : FitTarget::Gpoly;
    rep.g = g;
    rep.n = n;
    rep.t = t;
    rep.parity = parity;
    const long full = 3 * g - 3 + 2 * n;
    const long bound = t ? full - *t : full;
    rep.degree = static_cast<int>(std::max(bound, -1L));
    rep.branches.nvars = n;
    if (parity_sum(parity) % 2 != 0) {
        rep.branches.branches[parity] = MultiPoly(n);
        return rep;
    }
    auto eval = [&](const std::vector<long>& m) -> Rational {
        std::vector<long> b(n);
        Integer binoms = 1;
        for (int i = 0; i < n; ++i) {
            b[i] = parity[i] == 'e' ? 2 * m[i] : 2 * m[i] + 1;
            binoms *= binomial(2 * m[i], m[i]);
        }
        Integer c = t ? eng.G_t(g, b, *t) : eng.G(g, b);
        return Rational(c) / Rational(binoms);
    };
    const int per_var = static_cast<int>(std::max(bound, 0L));
    std::vector<std::vector<long>> nodes, extra;
    for (int i = 0; i < n; ++i) {
        std::vector<long> axis;
        for (int j = 1; j <= per_var + 1; ++j) axis.push_back(j);
        nodes.push_back(axis);
        extra.push_back({0, per_var + 2});
    }
    auto held = held_out_points(nodes, extra, opt.held_out, opt.seed);
    held.push_back(std::vector<long>(n, 0));
    MultiPoly p = fit_and_validate(eval, nodes, held, per_var, opt.threads, rep.validation);
    if (!t) {
        require(p.total_degree() == full, "degree");
        require(top_positive(p), "top-degree sign");
    } else {
        require(p.is_zero() || p.total_degree() <= bound, "degree bound");
        long even = n - parity_sum(parity);
        if (even >= *t && bound >= 0) require(p.total_degree() == bound, "degree equality");
    }
    require(symmetric_within_parity(p, parity), "symmetry");
    rep.branches.branches[parity] = p;
    return rep;
}

FitReport fit_lattice(Engine& eng, int g, int n, const ParitySignature& parity, const FitOptions& opt) {
    check_fit_args(g, n);
    if (static_cast<int>(parity.size()) != n) throw std::invalid_argument("parity length must equal n");
    FitReport rep;
    rep.target = FitTarget::Lattice;
    rep.g = g;
    rep.n = n;
    rep.parity = parity;
    const int D = 2 * (3 * g - 3 + n);
    rep.degree = D;
    rep.branches.nvars = n;
    if (parity_sum(parity) % 2 != 0) {
        rep.branches.branches[parity] = MultiPoly(n);
        return rep;
    }
    std::vector<std::vector<long>> nodes, extra;
    for (char c : parity) {
        nodes.push_back(parity_nodes(c, D + 1, 1));
        extra.push_back(parity_nodes(c, 2, D + 2));
    }
    auto held = held_out_points(nodes, extra, opt.held_out, opt.seed);
    MultiPoly p = fit_and_validate([&](const std::vector<long>& b) { return eng.lattice(g, b); }, nodes, held, D,
                                   opt.threads, rep.validation);
    require(p.all_exponents_even(), "odd exponent");
    require(p.total_degree() <= D, "degree");
    rep.branches.branches[parity] = p;
    return rep;
}

std::vector<ParitySignature> check_branches(int n) {
    std::vector<ParitySignature> out{std::string(n, 'e')};
    if (n >= 2) out.push_back(std::string("oo") + std::string(n - 2, 'e'));
    return out;
}

std::vector<PsiValue> psi_from_poly(const MultiPoly& p, int g, int n) {
    const int top = 3 * g - 3 + n;
    const Rational scale = pow_rational(Rational(2), 5 * g - 6 + 2 * n);
    std::vector<PsiValue> out;
    std::vector<int> d(n, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == n - 1) {
            d[idx] = left;
            Exponents e(n);
            Rational fact = 1;
            for (int i = 0; i < n; ++i) {
                e[i] = 2 * d[i];
                fact *= Rational(factorial(d[i]));
            }
            out.push_back({d, p.coeff(e) * scale * fact});
            return;
        }
        for (int x = 0; x <= left; ++x) {
            d[idx] = x;
            rec(idx + 1, left - x);
        }
    };
    if (top >= 0) rec(0, top);
    return out;
}

std::vector<PsiValue> extract_psi(Engine& eng, int g, int n, const FitOptions& opt) {
    if (3 * g - 3 + n < 0) throw std::invalid_argument("no intersection numbers for discs and annuli");
    auto branches = check_branches(n);
    FitReport even = fit_Nhat(eng, g, n, branches[0], opt);
    auto values = psi_from_poly(even.poly(), g, n);
    for (size_t i = 1; i < branches.size(); ++i) {
        FitReport mixed = fit_Nhat(eng, g, n, branches[i], opt);
        if (mixed.poly().top_part() != even.poly().top_part())
            throw std::runtime_error("branch disagreement in top degree");
    }
    return values;
}

std::string psi_json_line(const PsiValue& v) {
    std::ostringstream os;
    os << "{\"d\":[";
    for (size_t i = 0; i < v.d.size(); ++i) os << (i ? "," : "") << v.d[i];
    os << "],\"value\":\"" << to_string(v.value) << "\"}";
    return os.str();
}

bool compare_top_degree(Engine& eng, int g, int n, const FitOptions& opt) {
    const int D = 2 * (3 * g - 3 + n);
    for (const auto& parity : check_branches(n)) {
        FitReport nh = fit_Nhat(eng, g, n, parity, opt);
        FitReport lat = fit_lattice(eng, g, n, parity, opt);
        if (nh.poly().homogeneous_part(D) != lat.poly().homogeneous_part(D)) return false;
    }
    return true;
}

std::vector<ZeroEntryCheck> zero_entry_check(Engine& eng, int g, int n, long max_entry, const FitOptions& opt) {
    FitReport even = fit_Nhat(eng, g, n, std::string(n, 'e'), opt);
    std::vector<ZeroEntryCheck> out;
    std::vector<long> b(n, 0);
    std::function<void(int)> rec = [&](int idx) {
        if (idx == n) {
            bool has_zero = std::any_of(b.begin(), b.end(), [](long x) { return x == 0; });
            bool all_zero = std::all_of(b.begin(), b.end(), [](long x) { return x == 0; });
            if (!has_zero || all_zero) return;
            out.push_back({b, even.poly().eval(b), nhat_value(eng, g, b)});
            return;
        }
        for (long x = 0; x <= max_entry; x += 2) {
            b[idx] = x;
            rec(idx + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace surfcount

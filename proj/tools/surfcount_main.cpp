// surfcount: command-line access to arc-diagram counts, fits, series and checks.

#include "surfcount/closed.hpp"
#include "surfcount/engine.hpp"
#include "surfcount/fit.hpp"
#include "surfcount/oracles.hpp"
#include "surfcount/parallel.hpp"
#include "surfcount/series.hpp"
#include "surfcount/sums.hpp"
#include "surfcount/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace surfcount;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kUnsupported = 3, kIo = 4 };

std::vector<long> parse_list(const std::string& s) {
    std::vector<long> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("malformed list: " + s);
        out.push_back(v);
    }
    return out;
}

std::string join(const std::vector<long>& b) {
    std::string s;
    for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s;
}

struct Common {
    int threads = 1;
    std::string cache;
    bool json = false;
};

struct CountArgs {
    std::string mode = "G";
    int g = 0, n = 1;
    std::string b;
    std::optional<long> r, t;
    bool closed_only = false;
};

Integer count_value(Engine& eng, const CountArgs& a, const std::vector<long>& b) {
    const char mode = a.mode[0];
    if (a.closed_only) {
        if (a.r || a.t) {
            long t = a.t ? *a.t : t_from_r(a.g, b, *a.r);
            return closed_refined(mode, a.g, a.n, b, t);
        }
        return mode == 'G' ? closed_G(a.g, a.n, b) : closed_N(a.g, a.n, b);
    }
    if (mode == 'G') {
        if (a.r) return eng.G_r(a.g, b, *a.r);
        if (a.t) return eng.G_t(a.g, b, *a.t);
        return eng.G(a.g, b);
    }
    if (a.r) return eng.N_r(a.g, b, *a.r);
    if (a.t) return eng.N_t(a.g, b, *a.t);
    return eng.N(a.g, b);
}

void check_count_args(const CountArgs& a) {
    if (a.mode != "G" && a.mode != "N") throw std::invalid_argument("--mode must be G or N");
    if (a.r && a.t) throw std::invalid_argument("--r and --t are exclusive");
    if (a.g < 0 || a.n < 1) throw std::invalid_argument("need g >= 0 and n >= 1");
}

int cmd_count(Engine& eng, const Common& c, const CountArgs& a) {
    check_count_args(a);
    auto b = parse_list(a.b);
    if (static_cast<int>(b.size()) != a.n) throw std::invalid_argument("--b must have n entries");
    Integer v = count_value(eng, a, b);
    if (c.json) {
        json j{{"mode", a.mode}, {"g", a.g}, {"n", a.n}, {"b", b}, {"value", to_string(v)}};
        if (a.r) j["r"] = *a.r;
        if (a.t) j["t"] = *a.t;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string(v) << "\n";
    }
    return kOk;
}

int cmd_table(Engine& eng, const Common& c, const CountArgs& a, long b_max) {
    check_count_args(a);
    if (b_max < 0) throw std::invalid_argument("--b-max must be nonnegative");
    std::vector<std::vector<long>> grid{{}};
    for (int i = 0; i < a.n; ++i) {
        std::vector<std::vector<long>> next;
        for (const auto& p : grid)
            for (long v = 0; v <= b_max; ++v) {
                auto q = p;
                q.push_back(v);
                next.push_back(q);
            }
        grid = std::move(next);
    }
    std::vector<Integer> values(grid.size());
    parallel_for(grid.size(), c.threads, [&](size_t i) { values[i] = count_value(eng, a, grid[i]); });
    for (int i = 0; i < a.n; ++i) std::cout << "b" << i + 1 << ",";
    std::cout << "value\n";
    for (size_t i = 0; i < grid.size(); ++i) std::cout << join(grid[i]) << "," << to_string(values[i]) << "\n";
    return kOk;
}

struct FitArgs {
    std::string mode = "nhat";
    int g = 0, n = 3;
    std::string parity;
    std::optional<long> t, k;
    int held_out = 10;
};

int cmd_fit(Engine& eng, const Common& c, const FitArgs& a) {
    FitOptions opt;
    opt.threads = c.threads;
    opt.held_out = a.held_out;
    FitReport rep;
    if (a.mode == "nhat") {
        rep = fit_Nhat(eng, a.g, a.n, parse_parity(a.parity, a.n), opt);
    } else if (a.mode == "nhat-refined") {
        if (!a.t) throw std::invalid_argument("nhat-refined needs --t");
        long k = a.k.value_or(0);
        std::string csv = a.parity;
        rep = fit_Nhat_refined(eng, a.g, a.n, *a.t, k, parse_parity(csv, static_cast<int>(a.n - k)), opt);
    } else if (a.mode == "gpoly") {
        rep = fit_G_poly(eng, a.g, a.n, parse_parity(a.parity, a.n), a.t, opt);
    } else if (a.mode == "lattice") {
        rep = fit_lattice(eng, a.g, a.n, parse_parity(a.parity, a.n), opt);
    } else {
        throw std::invalid_argument("--mode must be nhat, nhat-refined, gpoly or lattice");
    }
    std::cout << rep.to_json() << "\n";
    return kOk;
}

int cmd_psi(Engine& eng, const Common& c, int g, int n) {
    FitOptions opt;
    opt.threads = c.threads;
    for (const auto& v : extract_psi(eng, g, n, opt)) std::cout << psi_json_line(v) << "\n";
    return kOk;
}

struct SeriesArgs {
    std::string which = "fN";
    std::string closed;
    int g = 0, n = 1, order = 8;
    std::optional<long> t;
    std::optional<int> alpha_bound;
};

int cmd_series(Engine& eng, const Common& c, const SeriesArgs& a) {
    TruncSeries s;
    if (!a.closed.empty()) {
        s = expand_closed_form(a.closed, a.order);
    } else if (a.which == "fN") {
        s = build_fN(eng, a.g, a.n, a.order, a.t, c.threads);
    } else if (a.which == "fG") {
        s = build_fG(eng, a.g, a.n, a.order, a.t, c.threads);
    } else if (a.which == "frakf") {
        s = build_frak_f(eng, a.g, a.n, a.order, a.alpha_bound.value_or(complete_alpha_bound(a.n, a.order, false)),
                         c.threads);
    } else if (a.which == "frakfN") {
        s = build_frak_fN(eng, a.g, a.n, a.order, a.alpha_bound.value_or(complete_alpha_bound(a.n, a.order, true)),
                          c.threads);
    } else if (a.which == "boldfG") {
        s = build_bold_fG(eng, a.g, a.n, a.order, c.threads);
    } else if (a.which == "boldfN") {
        s = build_bold_fN(eng, a.g, a.n, a.order, c.threads);
    } else if (a.which == "pullback") {
        s = pullback_check(eng, a.g, a.n, a.order, a.t, c.threads);
    } else {
        throw std::invalid_argument("--which must be fN, fG, frakf, frakfN, boldfG, boldfN or pullback");
    }
    std::cout << s.to_json() << "\n";
    return kOk;
}

struct OracleArgs {
    std::optional<int> disc, arrows;
    std::string pants;
    bool list = false;
};

int cmd_oracle(const Common& c, const OracleArgs& a) {
    if (!a.disc && !a.arrows && a.pants.empty()) throw std::invalid_argument("give --disc, --arrows or --pants");
    if (a.disc) {
        if (*a.disc < 0) throw std::invalid_argument("--disc must be nonnegative");
        auto ms = enumerate_disc(*a.disc);
        if (c.json) {
            json j{{"m", *a.disc}, {"count", std::to_string(ms.size())}};
            if (a.list) {
                j["matchings"] = json::array();
                for (const auto& x : ms) j["matchings"].push_back({{"pairs", x.pairs}, {"regions", x.regions}});
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << ms.size() << "\n";
            if (a.list)
                for (const auto& x : ms) {
                    for (auto [p, q] : x.pairs) std::cout << "(" << p << "," << q << ")";
                    std::cout << " regions=" << x.regions << "\n";
                }
        }
    }
    if (a.arrows) {
        if (*a.arrows < 0) throw std::invalid_argument("--arrows must be nonnegative");
        auto all = all_arrow_diagrams(*a.arrows);
        std::set<ArcStructure> seen;
        for (const auto& d : all) seen.insert(arrows_to_arcs(d));
        if (c.json)
            std::cout << json{{"m", *a.arrows}, {"diagrams", all.size()}, {"distinct", seen.size()}}.dump() << "\n";
        else
            std::cout << all.size() << " diagrams, " << seen.size() << " distinct arc structures\n";
    }
    if (!a.pants.empty()) {
        auto b = parse_list(a.pants);
        if (b.size() != 3) throw std::invalid_argument("--pants needs three lengths");
        auto found = pants_search(b[0], b[1], b[2]);
        if (c.json) {
            json arr = json::array();
            for (const auto& p : found) arr.push_back(p.to_string());
            std::cout << json{{"b", b}, {"profiles", arr}}.dump() << "\n";
        } else {
            for (const auto& p : found) std::cout << p.to_string() << "\n";
        }
    }
    return kOk;
}

struct SumsArgs {
    std::string family = "A";
    std::string tilde;
    int m = 0, n = 0;
    long k_max = 12;
};

int cmd_sums(const SumsArgs& a) {
    if (!a.tilde.empty()) {
        Tilde w = parse_tilde(a.tilde);
        std::cout << "n,value\n";
        for (long x = 0; x <= a.k_max; ++x) std::cout << x << "," << to_string(tilde_sum(w, a.m, x)) << "\n";
        return kOk;
    }
    SumFamily f{parse_family(a.family), a.m, a.n};
    std::cout << "k,value\n";
    for (long k = 0; k <= a.k_max; ++k) std::cout << k << "," << to_string(sum_direct(f, k)) << "\n";
    std::cout << fit_sum(f).to_json({"k"}) << "\n";
    return kOk;
}

int cmd_verify(Engine& eng, const Common& c, const std::string& suite) {
    if (!valid_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    VerifyOptions opt;
    opt.threads = c.threads;
    SuiteReport rep = run_suite(suite, eng, opt);
    std::cout << rep.to_text();
    return rep.all_pass() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of arc diagrams on surfaces with boundary"};
    app.require_subcommand(1);
    Common common;
    if (const char* env = std::getenv("SURFCOUNT_CACHE")) common.cache = env;
    app.add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", common.cache, "Persistent memo file (default $SURFCOUNT_CACHE)");
    app.add_flag("--json", common.json, "Machine-readable output");

    CountArgs count;
    auto add_count_flags = [&](CLI::App* s) {
        s->add_option("--mode", count.mode, "G or N")->required();
        s->add_option("--g", count.g, "Genus")->required();
        s->add_option("--n", count.n, "Boundary components")->required();
        s->add_option("--r", count.r, "Region count refinement");
        s->add_option("--t", count.t, "t refinement");
        s->add_flag("--closed-only", count.closed_only, "Use the closed form, never the recursion");
    };
    auto* c_count = app.add_subcommand("count", "Exact count for one boundary vector");
    add_count_flags(c_count);
    c_count->add_option("--b", count.b, "Comma-separated boundary point counts")->required();

    long b_max = 6;
    auto* c_table = app.add_subcommand("table", "CSV of counts over the grid 0..b-max");
    add_count_flags(c_table);
    c_table->add_option("--b-max", b_max, "Largest entry");

    FitArgs fit;
    auto* c_fit = app.add_subcommand("fit", "Fit and validate a quasi-polynomial branch");
    c_fit->add_option("--mode", fit.mode, "nhat, nhat-refined, gpoly or lattice");
    c_fit->add_option("--g", fit.g)->required();
    c_fit->add_option("--n", fit.n)->required();
    c_fit->add_option("--parity", fit.parity, "Comma-separated e/o per nonzero entry")->required();
    c_fit->add_option("--t", fit.t);
    c_fit->add_option("--k", fit.k, "Number of zero entries (nhat-refined)");
    c_fit->add_option("--held-out", fit.held_out, "Random held-out validation points");

    int psi_g = 1, psi_n = 1;
    auto* c_psi = app.add_subcommand("psi", "Intersection numbers from top-degree coefficients");
    c_psi->add_option("--g", psi_g)->required();
    c_psi->add_option("--n", psi_n)->required();

    SeriesArgs series;
    auto* c_series = app.add_subcommand("series", "Truncated generating series as JSON");
    c_series->add_option("--which", series.which, "fN, fG, frakf, frakfN, boldfG, boldfN or pullback");
    c_series->add_option("--closed", series.closed, "Expand a named closed form instead");
    c_series->add_option("--g", series.g);
    c_series->add_option("--n", series.n);
    c_series->add_option("--order", series.order, "Total-degree truncation");
    c_series->add_option("--t", series.t);
    c_series->add_option("--alpha-bound", series.alpha_bound);

    OracleArgs oracle;
    auto* c_oracle = app.add_subcommand("oracle", "Brute-force enumerations");
    c_oracle->add_option("--disc", oracle.disc, "Noncrossing matchings of 2m points");
    c_oracle->add_option("--arrows", oracle.arrows, "Arrow diagrams with m in and m out labels");
    c_oracle->add_option("--pants", oracle.pants, "Pants profile search for b1,b2,b3");
    c_oracle->add_flag("--list", oracle.list, "Print every matching");

    SumsArgs sums;
    auto* c_sums = app.add_subcommand("sums", "Special sums and their fitted quasi-polynomials");
    c_sums->add_option("--family", sums.family, "A, S, B, B0, B1, R, R0 or R1");
    c_sums->add_option("--tilde", sums.tilde, "p, q, P or Q (uses --m as alpha)");
    c_sums->add_option("--m", sums.m);
    c_sums->add_option("--n", sums.n, "Second index for two-index families");
    c_sums->add_option("--k-max", sums.k_max);

    std::string suite = "all";
    auto* c_verify = app.add_subcommand("verify", "Run verification suites");
    c_verify->add_option("--suite", suite, "closed-forms, recursion-consistency, refined, sums, fits, psi, series, "
                                           "oracles or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    Engine eng;
    if (!common.cache.empty()) {
        std::string warning;
        if (!eng.load_cache(common.cache, &warning) && std::ifstream(common.cache).good())
            std::cerr << "warning: " << warning << "\n";
    }

    int rc = kOk;
    try {
        if (c_count->parsed()) rc = cmd_count(eng, common, count);
        else if (c_table->parsed()) rc = cmd_table(eng, common, count, b_max);
        else if (c_fit->parsed()) rc = cmd_fit(eng, common, fit);
        else if (c_psi->parsed()) rc = cmd_psi(eng, common, psi_g, psi_n);
        else if (c_series->parsed()) rc = cmd_series(eng, common, series);
        else if (c_oracle->parsed()) rc = cmd_oracle(common, oracle);
        else if (c_sums->parsed()) rc = cmd_sums(sums);
        else if (c_verify->parsed()) rc = cmd_verify(eng, common, suite);
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }

    if (!common.cache.empty()) {
        try {
            eng.save_cache(common.cache);
        } catch (const std::exception& e) {
            std::cerr << "i/o error: " << e.what() << "\n";
            return kIo;
        }
    }
    return rc;
}

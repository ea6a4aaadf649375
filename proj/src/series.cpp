#include "surfcount/series.hpp"

#include "surfcount/closed.hpp"
#include "surfcount/parallel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace surfcount {

std::string aux_name(Aux a) {
    switch (a) {
        case Aux::Alpha: return "alpha";
        case Aux::Beta: return "beta";
        default: return "none";
    }
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    GradedLex lex;
    if (lex(a.e, b.e)) return true;
    if (lex(b.e, a.e)) return false;
    return a.aux > b.aux;
}

TruncSeries::TruncSeries(std::vector<std::string> vars, int min_exp, int truncation, Aux aux, int aux_bound)
    : vars_(std::move(vars)), min_exp_(min_exp), truncation_(truncation), aux_(aux), aux_bound_(aux_bound) {}

TruncSeries TruncSeries::y_type(int n, int truncation, Aux aux, int aux_bound) {
    return TruncSeries(var_names("y", n), 0, truncation, aux, aux_bound);
}

TruncSeries TruncSeries::z_type(int n, int truncation, Aux aux, int aux_bound) {
    return TruncSeries(var_names("z", n), -1, truncation, aux, aux_bound);
}

bool TruncSeries::keeps(const Exponents& e, int aux) const {
    if (std::accumulate(e.begin(), e.end(), 0L) > truncation_) return false;
    if (aux_ == Aux::None) return aux == 0;
    return aux <= aux_bound_;
}

void TruncSeries::add_term(const Exponents& e, int aux, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars()) throw std::logic_error("series exponent arity mismatch");
    for (int x : e)
        if (x < min_exp_) throw std::logic_error("series exponent below minimum");
    if (aux < 0) throw std::logic_error("negative aux exponent");
    if (c == 0 || !keeps(e, aux)) return;
    Monomial m{e, aux};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational TruncSeries::coeff(const Exponents& e, int aux) const {
    auto it = terms_.find(Monomial{e, aux});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncSeries::check_shape(const TruncSeries& o) const {
    if (vars_ != o.vars_ || min_exp_ != o.min_exp_ || aux_ != o.aux_)
        throw std::logic_error("series shapes differ");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_shape(o);
    TruncSeries r(vars_, min_exp_, std::min(truncation_, o.truncation_), aux_, std::min(aux_bound_, o.aux_bound_));
    for (const auto& [m, c] : terms_) r.add_term(m.e, m.aux, c);
    for (const auto& [m, c] : o.terms_) r.add_term(m.e, m.aux, c);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + o * Rational(-1); }

TruncSeries TruncSeries::operator*(const Rational& c) const {
    TruncSeries r(vars_, min_exp_, truncation_, aux_, aux_bound_);
    for (const auto& [m, v] : terms_) r.add_term(m.e, m.aux, v * c);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_shape(o);
    if (min_exp_ != 0) throw std::logic_error("series product needs nonnegative exponents");
    TruncSeries r(vars_, 0, std::min(truncation_, o.truncation_), aux_, std::min(aux_bound_, o.aux_bound_));
    Exponents e(vars_.size());
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = m1.e[i] + m2.e[i];
            r.add_term(e, m1.aux + m2.aux, c1 * c2);
        }
    }
    return r;
}

TruncSeries TruncSeries::truncated(int truncation) const {
    TruncSeries r(vars_, min_exp_, std::min(truncation, truncation_), aux_, aux_bound_);
    for (const auto& [m, c] : terms_) r.add_term(m.e, m.aux, c);
    return r;
}

TruncSeries TruncSeries::shifted(const Exponents& delta, int min_exp, int truncation) const {
    TruncSeries r(vars_, min_exp, truncation, aux_, aux_bound_);
    for (const auto& [m, c] : terms_) {
        Exponents e = m.e;
        for (size_t i = 0; i < e.size(); ++i) e[i] += delta.at(i);
        r.add_term(e, m.aux, c);
    }
    return r;
}

TruncSeries TruncSeries::embedded(const std::vector<std::string>& vars, const std::vector<int>& slots) const {
    if (slots.size() != vars_.size()) throw std::logic_error("embedding arity mismatch");
    TruncSeries r(vars, min_exp_, truncation_, aux_, aux_bound_);
    for (const auto& [m, c] : terms_) {
        Exponents e(vars.size(), 0);
        for (size_t i = 0; i < slots.size(); ++i) e.at(slots[i]) += m.e[i];
        r.add_term(e, m.aux, c);
    }
    return r;
}

TruncSeries TruncSeries::derivative(int var) const {
    TruncSeries r(vars_, min_exp_, truncation_ - 1, aux_, aux_bound_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Exponents e = m.e;
        Rational k(e[var]);
        e[var] -= 1;
        r.add_term(e, m.aux, c * k);
    }
    return r;
}

TruncSeries TruncSeries::aux_euler() const {
    TruncSeries r(vars_, min_exp_, truncation_, aux_, aux_bound_);
    for (const auto& [m, c] : terms_) r.add_term(m.e, m.aux, c * Rational(m.aux));
    return r;
}

TruncSeries TruncSeries::aux_collapsed() const {
    TruncSeries r(vars_, min_exp_, truncation_);
    for (const auto& [m, c] : terms_) r.add_term(m.e, 0, c);
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return vars_ == o.vars_ && min_exp_ == o.min_exp_ && truncation_ == o.truncation_ && aux_ == o.aux_ &&
           aux_bound_ == o.aux_bound_ && terms_ == o.terms_;
}

std::string TruncSeries::first_term() const {
    if (terms_.empty()) return "none";
    const auto& [m, c] = *terms_.begin();
    std::ostringstream os;
    os << "coefficient " << surfcount::to_string(c) << " at (";
    for (size_t i = 0; i < m.e.size(); ++i) os << (i ? "," : "") << m.e[i];
    os << ")";
    if (aux_ != Aux::None) os << " " << aux_name(aux_) << "^" << m.aux;
    return os.str();
}

std::string TruncSeries::to_json() const {
    nlohmann::ordered_json j;
    j["vars"] = vars_;
    j["aux"] = aux_name(aux_);
    j["truncation"] = truncation_;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::ordered_json t;
        t["exps"] = m.e;
        t["aux_exp"] = m.aux;
        t["coeff"] = surfcount::to_string(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

namespace {

// Nonnegative integer vectors of length n with sum <= max_sum, lexicographic.
std::vector<std::vector<long>> bounded_vectors(int n, long max_sum) {
    std::vector<std::vector<long>> out;
    if (max_sum < 0) return out;
    std::vector<long> cur(n, 0);
    std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == n) {
            out.push_back(cur);
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

Exponents shift_exps(const std::vector<long>& b, int delta) {
    Exponents e(b.size());
    for (size_t i = 0; i < b.size(); ++i) e[i] = static_cast<int>(b[i]) + delta;
    return e;
}

long total(const std::vector<long>& b) { return std::accumulate(b.begin(), b.end(), 0L); }

using CountFn = std::function<Integer(const std::vector<long>&, long)>;

// Evaluates count(b, aux) for every b and aux in [aux_lo, aux_hi], in parallel, then inserts in order.
void fill(TruncSeries& s, const std::vector<std::vector<long>>& points, int delta, long aux_lo, long aux_hi,
          const CountFn& count, int threads) {
    size_t width = static_cast<size_t>(aux_hi - aux_lo + 1);
    std::vector<Integer> values(points.size() * width);
    parallel_for(values.size(), threads, [&](size_t idx) {
        const auto& b = points[idx / width];
        if (total(b) % 2 != 0) return;
        values[idx] = count(b, aux_lo + static_cast<long>(idx % width));
    });
    for (size_t idx = 0; idx < values.size(); ++idx) {
        if (values[idx] == 0) continue;
        long a = aux_lo + static_cast<long>(idx % width);
        s.add_term(shift_exps(points[idx / width], delta), s.aux() == Aux::None ? 0 : static_cast<int>(a),
                   Rational(values[idx]));
    }
}

long max_t(int g, int n) { return 2L * g + n - 1; }

}  // namespace

TruncSeries build_fN(Engine& eng, int g, int n, int T, std::optional<long> t, int threads) {
    TruncSeries s = TruncSeries::z_type(n, T);
    auto points = bounded_vectors(n, static_cast<long>(T) + n);
    fill(s, points, -1, 0, 0,
         [&](const std::vector<long>& b, long) { return t ? eng.N_t(g, b, *t) : eng.N(g, b); }, threads);
    return s;
}

TruncSeries build_fG(Engine& eng, int g, int n, int T, std::optional<long> t, int threads) {
    TruncSeries s = TruncSeries::y_type(n, T);
    auto points = bounded_vectors(n, static_cast<long>(T) - n);
    fill(s, points, 1, 0, 0,
         [&](const std::vector<long>& b, long) { return t ? eng.G_t(g, b, *t) : eng.G(g, b); }, threads);
    return s;
}

TruncSeries build_frak_f(Engine& eng, int g, int n, int T, int alpha_bound, int threads) {
    if (alpha_bound < 1) throw std::invalid_argument("alpha bound must be at least 1");
    TruncSeries s = TruncSeries::y_type(n, T, Aux::Alpha, alpha_bound);
    auto points = bounded_vectors(n, static_cast<long>(T) - n);
    fill(s, points, 1, 1, alpha_bound,
         [&](const std::vector<long>& b, long r) { return eng.G_r(g, b, r); }, threads);
    return s;
}

TruncSeries build_frak_fN(Engine& eng, int g, int n, int T, int alpha_bound, int threads) {
    if (alpha_bound < 1) throw std::invalid_argument("alpha bound must be at least 1");
    TruncSeries s = TruncSeries::z_type(n, T, Aux::Alpha, alpha_bound);
    auto points = bounded_vectors(n, static_cast<long>(T) + n);
    fill(s, points, -1, 1, alpha_bound,
         [&](const std::vector<long>& b, long r) { return eng.N_r(g, b, r); }, threads);
    return s;
}

TruncSeries build_bold_fG(Engine& eng, int g, int n, int T, int threads) {
    TruncSeries s = TruncSeries::y_type(n, T, Aux::Beta, static_cast<int>(max_t(g, n)));
    auto points = bounded_vectors(n, static_cast<long>(T) - n);
    fill(s, points, 1, 0, max_t(g, n),
         [&](const std::vector<long>& b, long t) { return eng.G_t(g, b, t); }, threads);
    return s;
}

TruncSeries build_bold_fN(Engine& eng, int g, int n, int T, int threads) {
    TruncSeries s = TruncSeries::z_type(n, T, Aux::Beta, static_cast<int>(max_t(g, n)));
    auto points = bounded_vectors(n, static_cast<long>(T) + n);
    fill(s, points, -1, 0, max_t(g, n),
         [&](const std::vector<long>& b, long t) { return eng.N_t(g, b, t); }, threads);
    return s;
}

int complete_alpha_bound(int n, int T, bool z_type) {
    // r <= 1 + sum/2, and the largest sum reachable at total degree T.
    long sum = z_type ? static_cast<long>(T) + n : static_cast<long>(T) - n;
    return static_cast<int>(std::max(1L, 1 + std::max(0L, sum) / 2));
}

namespace {

// Coefficient of z^e in z^a (1 + z^2)^-a (1 - z^-2).
Integer pullback_coeff(int a, int e) {
    if ((e - a) % 2 != 0) return 0;
    long k = (e - a) / 2;
    return binomial(-a, k) - binomial(-a, k + 1);
}

}  // namespace

TruncSeries pullback(const TruncSeries& fG, int T) {
    if (fG.min_exp() != 0) throw std::invalid_argument("pullback needs a y-type series");
    int n = fG.nvars();
    TruncSeries out(var_names("z", n), -1, T, fG.aux(), fG.aux_bound());
    Exponents e(n);
    for (const auto& [m, c] : fG.terms()) {
        long floor = 0;
        for (int a : m.e) floor += a - 2;
        if (floor > T) continue;
        std::function<void(int, long, const Rational&)> rec = [&](int i, long used, const Rational& acc) {
            if (i == n) {
                out.add_term(e, m.aux, acc);
                return;
            }
            int a = m.e[i];
            long rest_floor = 0;
            for (int j = i + 1; j < n; ++j) rest_floor += m.e[j] - 2;
            for (int x = a - 2; used + x + rest_floor <= T; x += 2) {
                Integer k = pullback_coeff(a, x);
                if (k == 0) continue;
                e[i] = x;
                rec(i + 1, used + x, Rational(acc * Rational(k)));
            }
        };
        rec(0, 0, c);
    }
    return out;
}

TruncSeries pullback_check(Engine& eng, int g, int n, int T, std::optional<long> t, int threads) {
    if (g == 0 && n == 1) throw std::invalid_argument("the change of coordinates fails for the disc");
    TruncSeries fG = build_fG(eng, g, n, T + 2 * n, t, threads);
    TruncSeries fN = build_fN(eng, g, n, T, t, threads);
    Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    return pullback(fG, T) - fN * sign;
}

namespace {

std::vector<std::string> z_names(int n) { return var_names("z", n); }

TruncSeries power_series(const std::vector<std::string>& vars, int T, Aux aux = Aux::None, int aux_bound = 0) {
    return TruncSeries(vars, 0, T, aux, aux_bound);
}

TruncSeries polynomial(const std::vector<std::string>& vars, int T,
                       const std::vector<std::pair<Exponents, Rational>>& terms) {
    TruncSeries s = power_series(vars, T);
    for (const auto& [e, c] : terms) s.add_term(e, 0, c);
    return s;
}

// Generalized binomial coefficient p choose k for rational p.
Rational binom_rational(const Rational& p, long k) {
    Rational r(1);
    for (long i = 0; i < k; ++i) r = Rational(r * (p - i) / (i + 1));
    return r;
}

// Sum_k binom(p, k) c^k u^k aux^(k * aux_step), with u a monomial of positive degree.
TruncSeries binomial_series(const std::vector<std::string>& vars, int T, const Rational& p, const Rational& c,
                            const Exponents& u, int aux_step = 0, Aux aux = Aux::None, int aux_bound = 0) {
    TruncSeries s = power_series(vars, T, aux, aux_bound);
    long deg = std::accumulate(u.begin(), u.end(), 0L);
    if (deg <= 0) throw std::logic_error("binomial series needs a monomial of positive degree");
    Rational ck(1);
    for (long k = 0; k * deg <= T; ++k) {
        Exponents e(u.size());
        for (size_t i = 0; i < u.size(); ++i) e[i] = static_cast<int>(k * u[i]);
        s.add_term(e, static_cast<int>(k * aux_step), Rational(binom_rational(p, k) * ck));
        ck *= c;
    }
    return s;
}

// 1 / (1 - u)^2
TruncSeries inverse_square(const std::vector<std::string>& vars, int T, const Exponents& u) {
    return binomial_series(vars, T, Rational(-2), Rational(-1), u);
}

Exponents unit(int n, int i, int power) {
    Exponents e(n, 0);
    e[i] = power;
    return e;
}

// Images of e under the cyclic or full permutation group on three variables, with multiplicity.
std::vector<Exponents> orbit(const Exponents& e, bool symmetric) {
    static const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    static const int sym[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    std::vector<Exponents> out;
    int count = symmetric ? 6 : 3;
    for (int p = 0; p < count; ++p) {
        const int* s = symmetric ? sym[p] : cyc[p];
        Exponents img(3, 0);
        for (int i = 0; i < 3; ++i) img[s[i]] = e[i];
        out.push_back(img);
    }
    return out;
}

void add_orbit(std::vector<std::pair<Exponents, Rational>>& terms, const Exponents& e, bool symmetric,
               const Rational& c = Rational(1)) {
    for (auto& img : orbit(e, symmetric)) terms.emplace_back(img, c);
}

// prod_i 1 / (1 - z_i^2)^2 over three variables.
TruncSeries pants_denominator(int T) {
    auto vars = z_names(3);
    return inverse_square(vars, T, unit(3, 0, 2)) * inverse_square(vars, T, unit(3, 1, 2)) *
           inverse_square(vars, T, unit(3, 2, 2));
}

TruncSeries to_z_type(const TruncSeries& p, const Exponents& delta, int T) {
    return p.shifted(delta, -1, T);
}

TruncSeries fN03_numerator_form(int T) {
    std::vector<std::pair<Exponents, Rational>> terms{{{0, 0, 0}, 1}, {{4, 4, 4}, 1}};
    for (const Exponents& e : {Exponents{4, 0, 0}, Exponents{1, 1, 0}, Exponents{3, 3, 0}, Exponents{4, 4, 0}})
        add_orbit(terms, e, false);
    for (const Exponents& e : {Exponents{3, 1, 0}, Exponents{4, 3, 1}, Exponents{4, 1, 1}}) add_orbit(terms, e, true);
    int inner = T + 3;
    return to_z_type(polynomial(z_names(3), inner, terms) * pants_denominator(inner), {-1, -1, -1}, T);
}

// Product form rho(z1)rho(z2)rho(z3) + sum_cyc rho(z1)sigma(z2)sigma(z3), with
// z rho (1 - z^2)^2 = 1 + z^4 and z sigma (1 - z^2)^2 = z + z^3.
TruncSeries fN03_factored_form(int T) {
    auto vars = z_names(3);
    int inner = T + 3;
    auto rho = [&](int i) { return polynomial(vars, inner, {{unit(3, i, 0), 1}, {unit(3, i, 4), 1}}); };
    auto sigma = [&](int i) { return polynomial(vars, inner, {{unit(3, i, 1), 1}, {unit(3, i, 3), 1}}); };
    TruncSeries num = rho(0) * rho(1) * rho(2);
    for (int c = 0; c < 3; ++c) num = num + rho(c) * sigma((c + 1) % 3) * sigma((c + 2) % 3);
    return to_z_type(num * pants_denominator(inner), {-1, -1, -1}, T);
}

TruncSeries fN03_t0_form(int T) {
    auto vars = z_names(3);
    TruncSeries a = polynomial(vars, T, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{1, 1, 1}, 1}});
    TruncSeries b = polynomial(vars, T, {{{0, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}});
    return to_z_type(a * b * pants_denominator(T) * Rational(2), {0, 0, 0}, T);
}

TruncSeries fN03_t1_form(int T) {
    auto vars = z_names(3);
    int inner = T + 1;
    TruncSeries total = TruncSeries::z_type(3, T);
    for (int c = 0; c < 3; ++c) {
        int i = c, j = (c + 1) % 3, k = (c + 2) % 3;
        auto mono = [&](int pi, int pj) {
            Exponents e(3, 0);
            e[i] = pi;
            e[j] = pj;
            return e;
        };
        TruncSeries num = polynomial(
            vars, inner,
            {{mono(0, 0), 1}, {mono(1, 1), 4}, {mono(2, 0), 1}, {mono(0, 2), 1}, {mono(2, 2), 1}});
        TruncSeries p = num * inverse_square(vars, inner, unit(3, i, 2)) * inverse_square(vars, inner, unit(3, j, 2));
        total = total + to_z_type(p, unit(3, k, -1), T);
    }
    return total;
}

TruncSeries fN03_t2_form(int T) {
    std::vector<std::pair<Exponents, Rational>> terms{{{0, 0, 0}, 1}, {{2, 2, 2}, 16}, {{4, 4, 4}, 1}};
    add_orbit(terms, {4, 0, 0}, false);
    add_orbit(terms, {2, 2, 0}, false, Rational(-4));
    add_orbit(terms, {4, 4, 0}, false);
    add_orbit(terms, {4, 2, 2}, false, Rational(-4));
    int inner = T + 3;
    return to_z_type(polynomial(z_names(3), inner, terms) * pants_denominator(inner), {-1, -1, -1}, T);
}

// (1 - sqrt(1 - 4 alpha y^2)) / (2y) in y; alpha is set to 1 when aux is None.
TruncSeries disc_form(int T, Aux aux, int aux_bound) {
    std::vector<std::string> vars = var_names("y", 1);
    int inner = T + 1;
    TruncSeries root =
        binomial_series(vars, inner, ratio(1, 2), Rational(-4), {2}, aux == Aux::None ? 0 : 1, aux, aux_bound);
    TruncSeries one(vars, 0, inner, aux, aux_bound);
    one.add_term({0}, 0, 1);
    return (one - root).shifted({-1}, 0, T) * ratio(1, 2);
}

// Exact quotient of a two-variable series by (y1 - y2), one homogeneous part at a time.
TruncSeries divide_by_difference(const TruncSeries& s) {
    std::map<std::pair<int, int>, std::map<int, Rational>> parts;  // (degree, aux) -> y1 exponent -> coeff
    for (const auto& [m, c] : s.terms()) parts[{m.e[0] + m.e[1], m.aux}][m.e[0]] = c;
    TruncSeries out(s.vars(), 0, s.truncation() - 1, s.aux(), s.aux_bound());
    for (const auto& [key, coeffs] : parts) {
        auto [d, aux] = key;
        if (d > s.truncation()) continue;
        auto c = [&](int k) -> Rational {
            auto it = coeffs.find(k);
            return it == coeffs.end() ? Rational(0) : it->second;
        };
        if (d == 0) throw std::logic_error("fG02 numerator not divisible by y1 - y2");
        std::vector<Rational> q(d);
        q[d - 1] = c(d);
        for (int k = d - 1; k >= 1; --k) q[k - 1] = c(k) + q[k];
        if (c(0) != -q[0]) throw std::logic_error("fG02 numerator not divisible by y1 - y2");
        for (int k = 0; k < d; ++k) out.add_term({k, d - 1 - k}, aux, q[k]);
    }
    return out;
}

// sign = +1 expands 1 + Q / sqrt(...); sign = -1 expands -1 + Q / sqrt(...).
TruncSeries fG02_form(int T, int sign) {
    std::vector<std::string> vars = var_names("y", 2);
    TruncSeries q = polynomial(vars, T, {{{2, 0}, 2}, {{1, 1}, -3}, {{0, 2}, 2}, {{2, 2}, -4}});
    TruncSeries inv1 = binomial_series(vars, T, ratio(-1, 2), Rational(-4), {2, 0});
    TruncSeries inv2 = binomial_series(vars, T, ratio(-1, 2), Rational(-4), {0, 2});
    TruncSeries inner = polynomial(vars, T, {{{1, 1}, Rational(sign)}}) + q * inv1 * inv2;
    TruncSeries numer = polynomial(vars, T + 2, {{{1, 1}, 1}}) * inner.shifted({0, 0}, 0, T + 2);
    // inner is exact through degree T, so numer is exact through T + 2.
    TruncSeries quotient = divide_by_difference(divide_by_difference(numer.truncated(T + 2)));
    return quotient * ratio(1, 2);
}

}  // namespace

const std::vector<std::string>& closed_form_names() {
    static const std::vector<std::string> names{"fN01",    "fG01",    "fN02",    "fN03",
                                                "fN02_t0", "fN02_t1", "fN03_t0", "fN03_t1",
                                                "fN03_t2", "frakf01G", "fG02", "fN03_factored", "fG02_minus"};
    return names;
}

TruncSeries expand_closed_form(const std::string& name, int T) {
    if (name == "fN01") {
        TruncSeries s = TruncSeries::z_type(1, T);
        s.add_term({-1}, 0, 1);
        return s;
    }
    if (name == "fG01") return disc_form(T, Aux::None, 0);
    if (name == "frakf01G") return disc_form(T, Aux::Alpha, complete_alpha_bound(1, T, false));
    if (name == "fN02" || name == "fN02_t0" || name == "fN02_t1") {
        TruncSeries s = TruncSeries::z_type(2, T);
        if (name != "fN02_t1") s = s + to_z_type(inverse_square(z_names(2), T, {1, 1}), {0, 0}, T);
        if (name != "fN02_t0") s.add_term({-1, -1}, 0, 1);
        return s;
    }
    if (name == "fN03") return fN03_numerator_form(T);
    if (name == "fN03_t0") return fN03_t0_form(T);
    if (name == "fN03_t1") return fN03_t1_form(T);
    if (name == "fN03_t2") return fN03_t2_form(T);
    if (name == "fG02") return fG02_form(T, 1);
    if (name == "fG02_minus") return fG02_form(T, -1);
    if (name == "fN03_factored") return fN03_factored_form(T);
    throw std::invalid_argument("unknown closed form: " + name);
}

TruncSeries closed_form_counterpart(Engine& eng, const std::string& name, int T, int threads) {
    if (name == "fN01") return build_fN(eng, 0, 1, T, std::nullopt, threads);
    if (name == "fG01") return build_fG(eng, 0, 1, T, std::nullopt, threads);
    if (name == "frakf01G") return build_frak_f(eng, 0, 1, T, complete_alpha_bound(1, T, false), threads);
    if (name == "fN02") return build_fN(eng, 0, 2, T, std::nullopt, threads);
    if (name == "fN03" || name == "fN03_factored") return build_fN(eng, 0, 3, T, std::nullopt, threads);
    if (name == "fG02" || name == "fG02_minus") return build_fG(eng, 0, 2, T, std::nullopt, threads);
    if (name.size() == 7 && name.compare(0, 3, "fN0") == 0 && name.compare(4, 2, "_t") == 0) {
        int n = name[3] - '0';
        long t = name[6] - '0';
        return build_fN(eng, 0, n, T, t, threads);
    }
    throw std::invalid_argument("unknown closed form: " + name);
}

namespace {

using SeriesFn = std::function<const TruncSeries&(int g, int n)>;

// x1 f_{g,n} minus the diagonal, divided-difference and splitting terms, plus
// the alpha-derivative term when with_alpha holds.
TruncSeries recursion_residual(int g, int n, int T, bool with_alpha, const SeriesFn& f) {
    const TruncSeries& self = f(g, n);
    std::vector<std::string> vars = self.vars();
    Exponents lower(n, 0);
    lower[0] = -1;
    TruncSeries res = self.shifted(lower, 0, T);

    if (g >= 1) {
        std::vector<int> slots{0, 0};
        for (int i = 1; i < n; ++i) slots.push_back(i);
        res = res - f(g - 1, n + 1).embedded(vars, slots).truncated(T);
    }

    if (n >= 2) {
        const TruncSeries& prev = f(g, n - 1);
        TruncSeries b(vars, 0, T, self.aux(), self.aux_bound());
        for (int k = 1; k < n; ++k) {
            std::vector<int> rest;
            for (int i = 1; i < n; ++i)
                if (i != k) rest.push_back(i);
            for (const auto& [m, c] : prev.terms()) {
                int a = m.e[0];
                Exponents e(n, 0);
                for (size_t s = 0; s < rest.size(); ++s) e[rest[s]] = m.e[s + 1];
                // y_k^2 d/dy_k [y1 y_k h_{a-1}(y1, y_k)] = sum (j+1) y1^(i+1) y_k^(j+2) over i+j = a-1
                for (int j = 0; j <= a - 1; ++j) {
                    int i = a - 1 - j;
                    e[0] = i + 1;
                    e[k] = j + 2;
                    b.add_term(e, m.aux, Rational(c * (j + 1)));
                }
            }
        }
        res = res - b;
    }

    int others = n - 1;
    for (int g1 = 0; g1 <= g; ++g1) {
        for (unsigned mask = 0; mask < (1u << others); ++mask) {
            std::vector<int> s1{0}, s2{0};
            for (int i = 0; i < others; ++i) ((mask >> i) & 1u ? s1 : s2).push_back(i + 1);
            TruncSeries p1 = f(g1, static_cast<int>(s1.size())).embedded(vars, s1);
            TruncSeries p2 = f(g - g1, static_cast<int>(s2.size())).embedded(vars, s2);
            res = res - (p1 * p2).truncated(T);
        }
    }

    if (with_alpha) {
        TruncSeries d(vars, 0, T, self.aux(), self.aux_bound());
        if (n == 1) {
            // f_{g,0} = alpha: closed surface, empty diagram, one region.
            d.add_term({0}, 1, 1);
        } else {
            std::vector<int> slots;
            for (int i = 1; i < n; ++i) slots.push_back(i);
            d = f(g, n - 1).aux_euler().embedded(vars, slots).truncated(T);
        }
        res = res - d;
    }
    return res;
}

}  // namespace

TruncSeries diff_recursion_residual(Engine& eng, int g, int n, int T, int alpha_bound, int threads) {
    if (g < 0 || n < 1) throw std::invalid_argument("need g >= 0 and n >= 1");
    std::map<std::pair<int, int>, TruncSeries> cache;
    SeriesFn f = [&](int gg, int nn) -> const TruncSeries& {
        auto key = std::make_pair(gg, nn);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, build_frak_f(eng, gg, nn, T + 1, alpha_bound, threads)).first;
        return it->second;
    };
    return recursion_residual(g, n, T, true, f);
}

TruncSeries first_diff_residual(Engine& eng, int g, int n, int T, int threads) {
    if (g < 0 || n < 1) throw std::invalid_argument("need g >= 0 and n >= 1");
    std::map<std::pair<int, int>, TruncSeries> cache;
    SeriesFn f = [&](int gg, int nn) -> const TruncSeries& {
        auto key = std::make_pair(gg, nn);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, build_fG(eng, gg, nn, T + 1, std::nullopt, threads)).first;
        return it->second;
    };
    return recursion_residual(g, n, T, false, f).derivative(0);
}

namespace {

// Every term of `region` matches `graded` at t = r - chi - sum/2 and vice versa.
bool regrade_match(const TruncSeries& region, const TruncSeries& graded, int g, int shift, std::string* detail) {
    long chi = euler_char(g, region.nvars());
    auto sum_of = [&](const Exponents& e) {
        long s = 0;
        for (int x : e) s += x - shift;
        return s;
    };
    auto fail = [&](const std::string& why) {
        if (detail) *detail = why;
        return false;
    };
    for (const auto& [m, c] : region.terms()) {
        long s = sum_of(m.e);
        if (s % 2 != 0) return fail("odd boundary sum with nonzero coefficient");
        long t = m.aux - chi - s / 2;
        if (t < 0 || t > graded.aux_bound() || graded.coeff(m.e, static_cast<int>(t)) != c)
            return fail("region-graded term without matching t-graded term");
    }
    for (const auto& [m, c] : graded.terms()) {
        long r = m.aux + chi + sum_of(m.e) / 2;
        if (r < 1 || r > region.aux_bound() || region.coeff(m.e, static_cast<int>(r)) != c)
            return fail("t-graded term without matching region-graded term");
    }
    return true;
}

}  // namespace

bool scaling_check(Engine& eng, int g, int n, int T, std::string* detail, int threads) {
    TruncSeries frakN = build_frak_fN(eng, g, n, T, complete_alpha_bound(n, T, true), threads);
    TruncSeries boldN = build_bold_fN(eng, g, n, T, threads);
    if (!regrade_match(frakN, boldN, g, -1, detail)) return false;
    TruncSeries frakG = build_frak_f(eng, g, n, T, complete_alpha_bound(n, T, false), threads);
    TruncSeries boldG = build_bold_fG(eng, g, n, T, threads);
    if (!regrade_match(frakG, boldG, g, 1, detail)) {
        if (detail) *detail = "G side: " + *detail;
        return false;
    }
    return true;
}

}  // namespace surfcount

#include "surfcount/exact.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace surfcount {

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    Rational c(v);
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

Rational ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    Integer r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        Integer nn(n);
        mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

Integer binomial_half(long n, long twice_k) {
    if (twice_k % 2 != 0) return 0;
    return binomial(n, twice_k / 2);
}

Integer catalan(long m) {
    if (m < 0) return 0;
    Integer c = binomial(2 * m, m);
    return c / (m + 1);
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    Rational r(1);
    Rational b = e >= 0 ? base : Rational(1) / base;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
    return r;
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db;
    return a > b;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("evaluation length mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational t(c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        total += t;
    }
    return total;
}

Rational MultiPoly::eval(const std::vector<long>& x) const {
    std::vector<Rational> q;
    q.reserve(x.size());
    for (long v : x) q.emplace_back(v);
    return eval(q);
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s == degree) r.terms_.emplace(e, c);
    }
    return r;
}

bool MultiPoly::all_exponents_even() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x % 2 != 0) return false;
    return true;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    MultiPoly r(nvars_);
    Exponents f(nvars_);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) f[perm[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        bool wrote = false;
        if (a != 1 || is_const) {
            os << surfcount::to_string(a);
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::string MultiPoly::to_json(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << "{\"vars\":[";
    for (int i = 0; i < nvars_; ++i) os << (i ? "," : "") << "\"" << names[i] << "\"";
    os << "],\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : ",") << "{\"exps\":[";
        for (int i = 0; i < nvars_; ++i) os << (i ? "," : "") << e[i];
        os << "],\"coeff\":\"" << surfcount::to_string(c) << "\"}";
        first = false;
    }
    os << "]}";
    return os.str();
}

std::vector<std::string> var_names(const std::string& prefix, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

MultiPoly parse_poly(const std::string& text, int nvars, const std::string& prefix) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    MultiPoly p(nvars);
    size_t pos = 0;
    auto fail = [&]() { throw std::invalid_argument("cannot parse polynomial: " + text); };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        Rational coef(sign);
        Exponents e(nvars, 0);
        bool any = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (s[pos] == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                size_t end = pos;
                while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
                coef *= parse_rational(s.substr(pos, end - pos));
                pos = end;
                any = true;
            } else if (s.compare(pos, prefix.size(), prefix) == 0) {
                pos += prefix.size();
                size_t end = pos;
                while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
                if (end == pos && nvars != 1) fail();
                int idx = end == pos ? 0 : std::stoi(s.substr(pos, end - pos)) - 1;
                if (idx < 0 || idx >= nvars) fail();
                pos = end;
                int power = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    end = pos;
                    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
                    if (end == pos) fail();
                    power = std::stoi(s.substr(pos, end - pos));
                    pos = end;
                }
                e[idx] += power;
                any = true;
            } else {
                fail();
            }
        }
        if (!any) fail();
        p.add_term(e, coef);
    }
    return p;
}

ParitySignature parity_of(const std::vector<long>& b) {
    ParitySignature s;
    for (long x : b) s += (x % 2 == 0) ? 'e' : 'o';
    return s;
}

Rational QuasiPoly::eval(const std::vector<long>& b) const {
    if (static_cast<int>(b.size()) != nvars) throw std::invalid_argument("quasi-polynomial length mismatch");
    auto it = branches.find(parity_of(b));
    if (it == branches.end()) return 0;
    return it->second.eval(b);
}

std::string QuasiPoly::to_json(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [sig, poly] : branches) {
        os << (first ? "" : ",") << "\"" << sig << "\":" << poly.to_json(names);
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {

// Row k holds the x^k coefficients of the Lagrange basis polynomials.
std::vector<std::vector<Rational>> lagrange_matrix(const std::vector<long>& nodes) {
    const size_t m = nodes.size();
    std::vector<std::vector<Rational>> M(m, std::vector<Rational>(m));
    for (size_t j = 0; j < m; ++j) {
        std::vector<Rational> poly{Rational(1)};
        Rational denom(1);
        for (size_t i = 0; i < m; ++i) {
            if (i == j) continue;
            std::vector<Rational> next(poly.size() + 1);
            for (size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k];
                next[k] -= poly[k] * nodes[i];
            }
            poly = std::move(next);
            denom *= Rational(nodes[j] - nodes[i]);
        }
        for (size_t k = 0; k < m; ++k) M[k][j] = poly[k] / denom;
    }
    return M;
}

}  // namespace

MultiPoly interpolate_tensor(const Grid& grid, int degree_bound) {
    if (grid.empty()) throw std::runtime_error("degenerate grid");
    const int n = static_cast<int>(grid.begin()->first.size());
    if (n == 0) return MultiPoly::constant(0, grid.begin()->second);

    std::vector<std::vector<long>> nodes(n);
    {
        std::vector<std::set<long>> coords(n);
        for (const auto& [pt, v] : grid) {
            if (static_cast<int>(pt.size()) != n) throw std::runtime_error("degenerate grid");
            for (int i = 0; i < n; ++i) coords[i].insert(pt[i]);
        }
        size_t total = 1;
        for (int i = 0; i < n; ++i) {
            nodes[i].assign(coords[i].begin(), coords[i].end());
            if (static_cast<int>(nodes[i].size()) < degree_bound + 1) throw std::runtime_error("degenerate grid");
            total *= nodes[i].size();
        }
        if (total != grid.size()) throw std::runtime_error("degenerate grid");
    }

    std::vector<size_t> dims(n), stride(n);
    size_t total = 1;
    for (int i = n - 1; i >= 0; --i) {
        dims[i] = nodes[i].size();
        stride[i] = total;
        total *= dims[i];
    }
    std::vector<Rational> vals(total);
    for (const auto& [pt, v] : grid) {
        size_t idx = 0;
        for (int i = 0; i < n; ++i) {
            size_t pos = std::lower_bound(nodes[i].begin(), nodes[i].end(), pt[i]) - nodes[i].begin();
            idx += pos * stride[i];
        }
        vals[idx] = v;
    }

    for (int axis = 0; axis < n; ++axis) {
        auto M = lagrange_matrix(nodes[axis]);
        const size_t m = dims[axis];
        std::vector<Rational> fiber(m), out(m);
        for (size_t base = 0; base < total; ++base) {
            if ((base / stride[axis]) % m != 0) continue;
            for (size_t j = 0; j < m; ++j) fiber[j] = vals[base + j * stride[axis]];
            for (size_t k = 0; k < m; ++k) {
                Rational acc(0);
                for (size_t j = 0; j < m; ++j)
                    if (fiber[j] != 0 && M[k][j] != 0) acc += M[k][j] * fiber[j];
                out[k] = acc;
            }
            for (size_t k = 0; k < m; ++k) vals[base + k * stride[axis]] = out[k];
        }
    }

    MultiPoly p(n);
    Exponents e(n);
    for (size_t idx = 0; idx < total; ++idx) {
        if (vals[idx] == 0) continue;
        for (int i = 0; i < n; ++i) {
            e[i] = static_cast<int>((idx / stride[i]) % dims[i]);
            if (e[i] > degree_bound) throw std::runtime_error("grid inconsistent with degree bound");
        }
        p.add_term(e, vals[idx]);
    }
    return p;
}

}  // namespace surfcount

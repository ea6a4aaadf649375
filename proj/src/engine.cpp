#include "surfcount/engine.hpp"

#include "surfcount/closed.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace surfcount {

namespace {

constexpr const char* kCacheHeader = "surfcount-cache v1";

void canonicalize(std::vector<long>& b) { std::sort(b.begin(), b.end(), std::greater<long>()); }

long total(const std::vector<long>& b) { return std::accumulate(b.begin(), b.end(), 0L); }

bool all_zero(const std::vector<long>& b) {
    return std::all_of(b.begin(), b.end(), [](long x) { return x == 0; });
}

void check_input(int g, const std::vector<long>& b) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    if (b.empty()) throw std::invalid_argument("at least one boundary component required");
    for (long x : b)
        if (x < 0) throw std::invalid_argument("boundary lengths must be nonnegative");
}

std::vector<long> with_front(long first, const std::vector<long>& rest) {
    std::vector<long> v;
    v.reserve(rest.size() + 1);
    v.push_back(first);
    v.insert(v.end(), rest.begin(), rest.end());
    return v;
}

std::vector<long> without(const std::vector<long>& v, size_t idx) {
    std::vector<long> out;
    out.reserve(v.size() - 1);
    for (size_t i = 0; i < v.size(); ++i)
        if (i != idx) out.push_back(v[i]);
    return out;
}

void split_mask(const std::vector<long>& rest, unsigned mask, std::vector<long>& I, std::vector<long>& J) {
    I.clear();
    J.clear();
    for (size_t k = 0; k < rest.size(); ++k) ((mask >> k) & 1u ? I : J).push_back(rest[k]);
}

bool disc_or_annulus(int g, size_t n) { return g == 0 && n <= 2; }

Integer as_integer(const Rational& q) { return q.get_num(); }

}  // namespace

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::G: return "G";
        case Mode::N: return "N";
        case Mode::Gr: return "Gr";
        case Mode::Nt: return "Nt";
        case Mode::Nr: return "Nr";
        case Mode::Lattice: return "LatticeN";
    }
    return "?";
}

std::optional<Mode> parse_mode(const std::string& s) {
    for (int i = 0; i < kModeCount; ++i)
        if (mode_name(static_cast<Mode>(i)) == s) return static_cast<Mode>(i);
    return std::nullopt;
}

bool Engine::find(Mode m, const CountKey& k, Rational& out) const {
    const Table& t = tables_[static_cast<int>(m)];
    std::shared_lock lock(t.mutex);
    auto it = t.values.find(k);
    if (it == t.values.end()) return false;
    out = it->second;
    return true;
}

void Engine::store(Mode m, const CountKey& k, const Rational& v) {
    Table& t = tables_[static_cast<int>(m)];
    std::unique_lock lock(t.mutex);
    t.values.emplace(k, v);
}

size_t Engine::memo_size() const {
    size_t s = 0;
    for (const auto& t : tables_) {
        std::shared_lock lock(t.mutex);
        s += t.values.size();
    }
    return s;
}

void Engine::clear() {
    for (auto& t : tables_) {
        std::unique_lock lock(t.mutex);
        t.values.clear();
    }
}

Integer Engine::G(int g, std::vector<long> b) {
    check_input(g, b);
    return G_impl(g, std::move(b), -1);
}

Integer Engine::G_r(int g, std::vector<long> b, long r) {
    check_input(g, b);
    if (r <= 0) return 0;
    return G_impl(g, std::move(b), r);
}

Integer Engine::G_impl(int g, std::vector<long> b, long r) {
    if (g < 0) return 0;
    if (total(b) % 2 != 0) return 0;
    const bool refined = r >= 0;
    if (refined && r <= 0) return 0;
    if (all_zero(b)) return (!refined || r == 1) ? 1 : 0;
    canonicalize(b);
    const Mode mode = refined ? Mode::Gr : Mode::G;
    CountKey key{g, refined ? r : -1, b};
    Rational cached;
    if (find(mode, key, cached)) return as_integer(cached);

    const long b1 = b[0];
    const std::vector<long> rest(b.begin() + 1, b.end());
    Integer sum = 0;

    if (g >= 1) {
        for (long i = 0; i <= b1 - 2; ++i) {
            std::vector<long> nb{i, b1 - 2 - i};
            nb.insert(nb.end(), rest.begin(), rest.end());
            sum += G_impl(g - 1, std::move(nb), r);
        }
    }
    for (size_t k = 0; k < rest.size(); ++k) {
        if (rest[k] == 0) continue;
        sum += rest[k] * G_impl(g, with_front(b1 + rest[k] - 2, without(rest, k)), r);
    }
    std::vector<long> I, J;
    for (int g1 = 0; g1 <= g; ++g1) {
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            split_mask(rest, mask, I, J);
            for (long i = 0; i <= b1 - 2; ++i) {
                long j = b1 - 2 - i;
                std::vector<long> left = with_front(i, I), right = with_front(j, J);
                if (total(left) % 2 != 0) continue;
                if (!refined) {
                    Integer a = G_impl(g1, left, -1);
                    if (a == 0) continue;
                    sum += a * G_impl(g - g1, right, -1);
                } else {
                    for (long r1 = 1; r1 < r; ++r1) {
                        Integer a = G_impl(g1, left, r1);
                        if (a == 0) continue;
                        sum += a * G_impl(g - g1, right, r - r1);
                    }
                }
            }
        }
    }
    store(mode, key, Rational(sum));
    return sum;
}

Integer Engine::N(int g, std::vector<long> b) {
    check_input(g, b);
    return N_lookup(NKind::Plain, g, std::move(b), -1);
}

Integer Engine::N_t(int g, std::vector<long> b, long t) {
    check_input(g, b);
    return N_lookup(NKind::T, g, std::move(b), t);
}

Integer Engine::N_r(int g, std::vector<long> b, long r) {
    check_input(g, b);
    return N_lookup(NKind::R, g, std::move(b), r);
}

Integer Engine::N_base(NKind kind, int g, const std::vector<long>& b, long ref, bool& handled) {
    handled = true;
    const int n = static_cast<int>(b.size());
    if (g == 0 && n <= 3) {
        switch (kind) {
            case NKind::Plain: return closed_N(g, n, b);
            case NKind::T: return closed_refined('N', g, n, b, ref);
            case NKind::R: return closed_refined('N', g, n, b, t_from_r(g, b, ref));
        }
    }
    if (all_zero(b)) {
        switch (kind) {
            case NKind::Plain: return 1;
            case NKind::T: return ref == 2 * g + n - 1 ? 1 : 0;
            case NKind::R: return ref == 1 ? 1 : 0;
        }
    }
    handled = false;
    return 0;
}

Integer Engine::N_lookup(NKind kind, int g, std::vector<long> b, long ref) {
    if (g < 0) return 0;
    if (total(b) % 2 != 0) return 0;
    if (kind == NKind::T && ref < 0) return 0;
    if (kind == NKind::R && ref <= 0) return 0;
    bool handled = false;
    Integer base = N_base(kind, g, b, ref, handled);
    if (handled) return base;
    canonicalize(b);
    return N_impl(kind, g, std::move(b), ref);
}

Integer Engine::N_impl(NKind kind, int g, std::vector<long> b, long ref) {
    const Mode mode = kind == NKind::Plain ? Mode::N : (kind == NKind::T ? Mode::Nt : Mode::Nr);
    CountKey key{g, ref, b};
    Rational cached;
    if (find(mode, key, cached)) return as_integer(cached);

    const long b1 = b[0];
    const std::vector<long> rest(b.begin() + 1, b.end());
    Integer sum = 0;

    if (g >= 1) {
        for (long m = 2; m <= b1; m += 2) {
            long ref1 = kind == NKind::R ? ref - m / 2 + 1 : ref;
            for (long i = 0; i <= b1 - m; ++i) {
                std::vector<long> nb{i, b1 - m - i};
                nb.insert(nb.end(), rest.begin(), rest.end());
                Integer v = N_lookup(kind, g - 1, std::move(nb), ref1);
                if (v != 0) sum += (m / 2) * v;
            }
        }
    }

    for (size_t k = 0; k < rest.size(); ++k) {
        const long bj = rest[k];
        const long barj = bar(bj);
        const long delta = bj == 0 ? 1 : 0;
        const std::vector<long> others = without(rest, k);
        for (long m = 2; m <= b1 + bj; m += 2) {
            long ref2 = ref;
            if (kind == NKind::T) ref2 = ref - delta;
            if (kind == NKind::R) ref2 = ref - m / 2 + 1 - delta;
            Integer v = N_lookup(kind, g, with_front(b1 + bj - m, others), ref2);
            if (v != 0) sum += (m / 2) * barj * v;
        }
        const long s = b1 - bj;
        const long sign = s >= 0 ? 1 : -1;
        const long span = s >= 0 ? s : -s;
        const long barmin = bar(std::min(b1, bj));
        for (long m = 2; m <= span; m += 2) {
            long ref3 = ref;
            if (kind == NKind::T) ref3 = ref - delta;
            if (kind == NKind::R) ref3 = ref - m / 2 + 1 - barmin;
            Integer v = N_lookup(kind, g, with_front(span - m, others), ref3);
            if (v != 0) sum += sign * (m / 2) * barj * v;
        }
    }

    std::vector<long> I, J;
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            split_mask(rest, mask, I, J);
            if (disc_or_annulus(g1, I.size() + 1) || disc_or_annulus(g2, J.size() + 1)) continue;
            for (long m = 2; m <= b1; m += 2) {
                for (long i = 0; i <= b1 - m; ++i) {
                    long j = b1 - m - i;
                    std::vector<long> left = with_front(i, I), right = with_front(j, J);
                    if (total(left) % 2 != 0) continue;
                    Integer acc = 0;
                    if (kind == NKind::Plain) {
                        Integer a = N_lookup(kind, g1, left, -1);
                        if (a != 0) acc = a * N_lookup(kind, g2, right, -1);
                    } else {
                        long budget = kind == NKind::T ? ref : ref - m / 2 + 1;
                        for (long r1 = 0; r1 <= budget; ++r1) {
                            Integer a = N_lookup(kind, g1, left, r1);
                            if (a == 0) continue;
                            acc += a * N_lookup(kind, g2, right, budget - r1);
                        }
                    }
                    if (acc != 0) sum += (m / 2) * acc;
                }
            }
        }
    }
    store(mode, key, Rational(sum));
    return sum;
}

Rational Engine::lattice(int g, std::vector<long> b) {
    check_input(g, b);
    for (long x : b)
        if (x == 0) throw std::invalid_argument("lattice counts require positive boundary lengths");
    return lattice_impl(g, std::move(b));
}

Rational Engine::lattice_impl(int g, std::vector<long> b) {
    const int n = static_cast<int>(b.size());
    assert(std::all_of(b.begin(), b.end(), [](long x) { return x > 0; }));
    if (total(b) % 2 != 0) return 0;
    if (g == 0 && n == 3) return 1;
    if (g == 1 && n == 1) return ratio(b[0] * b[0], 48) - ratio(1, 12);
    if (g == 0 && n < 3) throw std::logic_error("lattice count queried on a disc or annulus");
    canonicalize(b);
    CountKey key{g, -1, b};
    Rational cached;
    if (find(Mode::Lattice, key, cached)) return cached;

    const long b1 = b[0];
    const std::vector<long> rest(b.begin() + 1, b.end());
    Rational sum = 0;

    if (g >= 1) {
        for (long m = 2; m <= b1; m += 2) {
            for (long i = 1; i <= b1 - m - 1; ++i) {
                long j = b1 - m - i;
                std::vector<long> nb{i, j};
                nb.insert(nb.end(), rest.begin(), rest.end());
                sum += ratio(i * j * m, 2) * lattice_impl(g - 1, std::move(nb));
            }
        }
    }
    for (size_t k = 0; k < rest.size(); ++k) {
        const long bj = rest[k];
        const std::vector<long> others = without(rest, k);
        for (long m = 2; m <= b1 + bj - 1; m += 2) {
            long i = b1 + bj - m;
            sum += ratio(i * m, 2) * lattice_impl(g, with_front(i, others));
        }
        const long s = b1 - bj;
        const long sign = s >= 0 ? 1 : -1;
        const long span = s >= 0 ? s : -s;
        for (long m = 2; m <= span - 1; m += 2) {
            long i = span - m;
            sum += ratio(sign * i * m, 2) * lattice_impl(g, with_front(i, others));
        }
    }
    std::vector<long> I, J;
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
            split_mask(rest, mask, I, J);
            if (disc_or_annulus(g1, I.size() + 1) || disc_or_annulus(g2, J.size() + 1)) continue;
            for (long m = 2; m <= b1; m += 2) {
                for (long i = 1; i <= b1 - m - 1; ++i) {
                    long j = b1 - m - i;
                    std::vector<long> left = with_front(i, I), right = with_front(j, J);
                    if (total(left) % 2 != 0) continue;
                    Rational a = lattice_impl(g1, left);
                    if (a == 0) continue;
                    sum += ratio(i * j * m, 2) * a * lattice_impl(g2, right);
                }
            }
        }
    }
    Rational value = sum / b1;
    store(Mode::Lattice, key, value);
    return value;
}

Integer Engine::convolve_G_from_N(int g, const std::vector<long>& b, long t) {
    check_input(g, b);
    if (g == 0 && b.size() == 1) throw std::invalid_argument("the convolution does not hold for the disc");
    const size_t n = b.size();
    Integer sum = 0;
    std::vector<long> a(n);
    std::function<void(size_t, Integer)> rec = [&](size_t idx, Integer weight) {
        if (idx == n) {
            Integer v = t >= 0 ? N_t(g, a, t) : N(g, a);
            sum += weight * v;
            return;
        }
        for (long x = b[idx]; x >= 0; x -= 2) {
            a[idx] = x;
            rec(idx + 1, weight * binomial(b[idx], (b[idx] - x) / 2));
        }
    };
    rec(0, 1);
    return sum;
}

Integer Engine::G_t_via_r(int g, const std::vector<long>& b, long t) {
    check_input(g, b);
    if (total(b) % 2 != 0) return 0;
    long r = r_from_t(g, b, t);
    if (r <= 0) return 0;
    return G_r(g, b, r);
}

Integer Engine::G_t(int g, const std::vector<long>& b, long t) {
    if (g == 0 && b.size() == 1) return G_t_via_r(g, b, t);
    return convolve_G_from_N(g, b, t);
}

Integer Engine::dilaton_reduce(int g, const std::vector<long>& b, long r) {
    check_input(g, b);
    if (b.size() < 2 || b[0] != 0) throw std::invalid_argument("dilaton reduction needs n >= 2 and b1 = 0");
    std::vector<long> rest(b.begin() + 1, b.end());
    return r * G_r(g, rest, r);
}

void Engine::save_cache(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write cache: " + path);
    out << kCacheHeader << "\n";
    for (int i = 0; i < kModeCount; ++i) {
        const Table& t = tables_[i];
        std::shared_lock lock(t.mutex);
        for (const auto& [k, v] : t.values) {
            out << mode_name(static_cast<Mode>(i)) << " " << k.g << " " << k.b.size() << " ";
            if (k.ref < 0)
                out << "-";
            else
                out << k.ref;
            out << " ";
            for (size_t j = 0; j < k.b.size(); ++j) out << (j ? "," : "") << k.b[j];
            out << " " << to_string(v) << "\n";
        }
    }
    if (!out) throw std::ios_base::failure("cannot write cache: " + path);
}

bool Engine::load_cache(const std::string& path, std::string* warning) {
    std::ifstream in(path);
    if (!in) {
        if (warning) *warning = "cache not readable: " + path;
        return false;
    }
    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader) {
        if (warning) *warning = "cache header mismatch, ignoring " + path;
        return false;
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string mode_s, ref_s, b_s, value_s;
        int g = 0;
        size_t n = 0;
        if (!(is >> mode_s >> g >> n >> ref_s >> b_s >> value_s)) continue;
        auto mode = parse_mode(mode_s);
        if (!mode) continue;
        CountKey k;
        k.g = g;
        k.ref = ref_s == "-" ? -1 : std::stol(ref_s);
        std::istringstream bs(b_s);
        std::string item;
        while (std::getline(bs, item, ',')) k.b.push_back(std::stol(item));
        if (k.b.size() != n) continue;
        store(*mode, k, parse_rational(value_s));
    }
    return true;
}

}  // namespace surfcount

#pragma once

#include "surfcount/exact.hpp"

#include <array>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace surfcount {

enum class Mode { G, N, Gr, Nt, Nr, Lattice };
constexpr int kModeCount = 6;

std::string mode_name(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

// b is stored sorted descending; ref is -1 when the mode has no refinement.
struct CountKey {
    int g = 0;
    long ref = -1;
    std::vector<long> b;
    auto operator<=>(const CountKey&) const = default;
};

// Memoized evaluation of every recursive count. Lookups and inserts are
// thread-safe; values do not depend on evaluation order.
class Engine {
public:
    Integer G(int g, std::vector<long> b);
    Integer N(int g, std::vector<long> b);
    Integer G_r(int g, std::vector<long> b, long r);
    Integer N_t(int g, std::vector<long> b, long t);
    Integer N_r(int g, std::vector<long> b, long r);
    Rational lattice(int g, std::vector<long> b);

    // Sum over a of prod binom(b_i, (b_i - a_i)/2) N(a); t >= 0 uses N^t.
    Integer convolve_G_from_N(int g, const std::vector<long>& b, long t = -1);
    Integer G_t_via_r(int g, const std::vector<long>& b, long t);
    Integer G_t(int g, const std::vector<long>& b, long t);
    // r * G_r(b_2, ..., b_n); requires b_1 = 0.
    Integer dilaton_reduce(int g, const std::vector<long>& b, long r);

    size_t memo_size() const;
    void clear();

    // Line-based cache; returns false when the header does not match.
    bool load_cache(const std::string& path, std::string* warning = nullptr);
    void save_cache(const std::string& path) const;

private:
    enum class NKind { Plain, T, R };

    Integer G_impl(int g, std::vector<long> b, long r);
    Integer N_impl(NKind kind, int g, std::vector<long> b, long ref);
    Integer N_base(NKind kind, int g, const std::vector<long>& b, long ref, bool& handled);
    Integer N_lookup(NKind kind, int g, std::vector<long> b, long ref);
    Rational lattice_impl(int g, std::vector<long> b);

    bool find(Mode m, const CountKey& k, Rational& out) const;
    void store(Mode m, const CountKey& k, const Rational& v);

    struct Table {
        mutable std::shared_mutex mutex;
        std::map<CountKey, Rational> values;
    };
    std::array<Table, kModeCount> tables_;
};

}  // namespace surfcount

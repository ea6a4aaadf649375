#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace surfcount {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
Rational parse_rational(const std::string& s);
// Reduced num/den; the two-argument mpq_class constructor does not reduce.
Rational ratio(long num, long den);

// b + [b == 0]
inline long bar(long b) { return b == 0 ? 1 : b; }

// Total binomial: 0 for k < 0, and 0 for k > n >= 0.
Integer binomial(long n, long k);
// binomial(n, twice_k / 2); 0 when twice_k is odd.
Integer binomial_half(long n, long twice_k);
Integer catalan(long m);
Integer factorial(long n);
Rational pow_rational(const Rational& base, long e);

using Exponents = std::vector<int>;

// Higher total degree first, then lexicographically larger first.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Rational, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c);
    Rational coeff(const Exponents& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    Rational eval(const std::vector<Rational>& x) const;
    Rational eval(const std::vector<long>& x) const;

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;
    MultiPoly homogeneous_part(int degree) const;
    MultiPoly top_part() const { return homogeneous_part(total_degree()); }
    bool all_exponents_even() const;
    MultiPoly permuted(const std::vector<int>& perm) const;

    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_json(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Exponents, Rational, GradedLex> terms_;
};

std::vector<std::string> var_names(const std::string& prefix, int n);

// Parses e.g. "1/4*b1^2 + 1/4*b2^2 - 1" over variables prefix1..prefixN; a bare prefix is allowed when N = 1.
MultiPoly parse_poly(const std::string& text, int nvars, const std::string& prefix = "b");

// Parity signature over {'e','o'}; refined fits also use 'z' for a forced zero entry.
using ParitySignature = std::string;
ParitySignature parity_of(const std::vector<long>& b);

struct QuasiPoly {
    int nvars = 0;
    std::map<ParitySignature, MultiPoly> branches;

    Rational eval(const std::vector<long>& b) const;
    std::string to_json(const std::vector<std::string>& names) const;
};

using Grid = std::map<std::vector<long>, Rational>;

// Unique polynomial of per-variable degree <= degree_bound through a full tensor grid.
MultiPoly interpolate_tensor(const Grid& grid, int degree_bound);

}  // namespace surfcount

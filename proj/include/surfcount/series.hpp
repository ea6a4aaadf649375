#pragma once

#include "surfcount/engine.hpp"
#include "surfcount/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace surfcount {

// Auxiliary grading variable: alpha counts regions r, beta counts t.
enum class Aux { None, Alpha, Beta };

std::string aux_name(Aux a);

struct Monomial {
    Exponents e;
    int aux = 0;
    bool operator==(const Monomial&) const = default;
};

// Graded-lex on the main exponents, then higher aux exponent first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Truncated multivariate series over the rationals. Every variable shares one
// minimum exponent: -1 for z-type, 0 for y-type (y = 1/x). Terms whose total
// degree in the main variables exceeds the truncation, or whose aux degree
// exceeds aux_bound, are discarded.
class TruncSeries {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    TruncSeries() = default;
    TruncSeries(std::vector<std::string> vars, int min_exp, int truncation, Aux aux = Aux::None, int aux_bound = 0);

    static TruncSeries y_type(int n, int truncation, Aux aux = Aux::None, int aux_bound = 0);
    static TruncSeries z_type(int n, int truncation, Aux aux = Aux::None, int aux_bound = 0);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int min_exp() const { return min_exp_; }
    int truncation() const { return truncation_; }
    Aux aux() const { return aux_; }
    int aux_bound() const { return aux_bound_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Silently drops terms beyond the truncation; throws below the minimum exponent.
    void add_term(const Exponents& e, int aux, const Rational& c);
    Rational coeff(const Exponents& e, int aux = 0) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const Rational& c) const;
    // Power series only (min exponent 0); the result keeps the smaller truncation.
    TruncSeries operator*(const TruncSeries& o) const;

    TruncSeries truncated(int truncation) const;
    // Adds delta to every exponent vector and relabels the shape.
    TruncSeries shifted(const Exponents& delta, int min_exp, int truncation) const;
    // Slot i of this series becomes variable slots[i] of a series on `vars`;
    // repeated targets multiply (diagonal substitution).
    TruncSeries embedded(const std::vector<std::string>& vars, const std::vector<int>& slots) const;
    TruncSeries derivative(int var) const;
    // aux * d/d(aux)
    TruncSeries aux_euler() const;
    // Sets the aux variable to 1.
    TruncSeries aux_collapsed() const;

    bool operator==(const TruncSeries& o) const;
    // Describes the first nonzero term, for failure reports.
    std::string first_term() const;
    std::string to_json() const;

private:
    void check_shape(const TruncSeries& o) const;
    bool keeps(const Exponents& e, int aux) const;

    std::vector<std::string> vars_;
    int min_exp_ = 0;
    int truncation_ = 0;
    Aux aux_ = Aux::None;
    int aux_bound_ = 0;
    Terms terms_;
};

// Sum N(nu) z^(nu - 1) through total degree T; t selects N^t.
TruncSeries build_fN(Engine& eng, int g, int n, int T, std::optional<long> t = std::nullopt, int threads = 1);
// Sum G(mu) y^(mu + 1) through total degree T; t selects G^t.
TruncSeries build_fG(Engine& eng, int g, int n, int T, std::optional<long> t = std::nullopt, int threads = 1);
// Sum G_r(mu) y^(mu + 1) alpha^r.
TruncSeries build_frak_f(Engine& eng, int g, int n, int T, int alpha_bound, int threads = 1);
// Sum N_r(nu) z^(nu - 1) alpha^r.
TruncSeries build_frak_fN(Engine& eng, int g, int n, int T, int alpha_bound, int threads = 1);
// Sum over t of G^t(mu) y^(mu + 1) beta^t, and the N^t analogue.
TruncSeries build_bold_fG(Engine& eng, int g, int n, int T, int threads = 1);
TruncSeries build_bold_fN(Engine& eng, int g, int n, int T, int threads = 1);

// Alpha degree that captures every region count up to total degree T.
int complete_alpha_bound(int n, int T, bool z_type);

// Substitutes y = z / (1 + z^2) and multiplies by prod (1 - z^-2), through total z-degree T.
TruncSeries pullback(const TruncSeries& fG, int T);

// pullback(f^G) - (-1)^n f^N; zero when the change of coordinates holds.
TruncSeries pullback_check(Engine& eng, int g, int n, int T, std::optional<long> t = std::nullopt, int threads = 1);

const std::vector<std::string>& closed_form_names();
// Expansion of a printed closed form; unknown names throw std::invalid_argument.
TruncSeries expand_closed_form(const std::string& name, int T);
// The count-built series that the named closed form should equal.
TruncSeries closed_form_counterpart(Engine& eng, const std::string& name, int T, int threads = 1);

// x1 f_{g,n} minus the four right-hand terms of the region-refined
// differential recursion, with f_{g,0} = alpha.
TruncSeries diff_recursion_residual(Engine& eng, int g, int n, int T, int alpha_bound, int threads = 1);
// d/dy1 of x1 f_{g,n} minus the three unrefined terms, at alpha = 1.
TruncSeries first_diff_residual(Engine& eng, int g, int n, int T, int threads = 1);

// Region-graded and t-graded series agree under r = t + chi + sum/2, on both the
// N side and the G side.
bool scaling_check(Engine& eng, int g, int n, int T, std::string* detail = nullptr, int threads = 1);

}  // namespace surfcount

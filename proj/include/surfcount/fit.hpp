#pragma once

#include "surfcount/engine.hpp"
#include "surfcount/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace surfcount {

enum class FitTarget { Nhat, NhatRefined, Gpoly, GpolyRefined, Lattice };

std::string target_name(FitTarget t);

struct ValidationPoint {
    std::vector<long> b;
    Rational expected;
    Rational got;
};

struct FitReport {
    FitTarget target = FitTarget::Nhat;
    int g = 0;
    int n = 0;
    std::optional<long> t;
    std::optional<long> k;
    ParitySignature parity;
    QuasiPoly branches;
    int degree = 0;  // degree bound in the fitted variables
    std::vector<ValidationPoint> validation;

    const MultiPoly& poly() const { return branches.branches.begin()->second; }
    std::string to_json() const;
};

struct FitOptions {
    int threads = 1;
    int held_out = 10;
    unsigned seed = 20240607u;
};

ParitySignature parse_parity(const std::string& csv, int n);

// b / prod bbar over the positive grid of the given parity.
FitReport fit_Nhat(Engine& eng, int g, int n, const ParitySignature& parity, const FitOptions& opt = {});

// Last k entries fixed to zero; parity covers the n-k nonzero entries.
FitReport fit_Nhat_refined(Engine& eng, int g, int n, long t, long k, const ParitySignature& parity,
                           const FitOptions& opt = {});

// Variables m_i = floor(b_i / 2); counts divided by prod binom(2m_i, m_i).
FitReport fit_G_poly(Engine& eng, int g, int n, const ParitySignature& parity, std::optional<long> t,
                     const FitOptions& opt = {});

FitReport fit_lattice(Engine& eng, int g, int n, const ParitySignature& parity, const FitOptions& opt = {});

struct PsiValue {
    std::vector<int> d;
    Rational value;
};

// Top-degree coefficients of the all-even branch, cross-checked against a mixed branch.
std::vector<PsiValue> extract_psi(Engine& eng, int g, int n, const FitOptions& opt = {});
std::vector<PsiValue> psi_from_poly(const MultiPoly& p, int g, int n);
std::string psi_json_line(const PsiValue& v);

// Fitted N-hat and lattice polynomials agree in top degree on every tested branch.
bool compare_top_degree(Engine& eng, int g, int n, const FitOptions& opt = {});

// Parity branches used for cross-checks: all-even plus one with two odd entries when n >= 2.
std::vector<ParitySignature> check_branches(int n);

struct ZeroEntryCheck {
    std::vector<long> b;
    Rational fitted;
    Rational actual;
};
// Evaluates the all-even fit at points with some (not all) zero entries.
std::vector<ZeroEntryCheck> zero_entry_check(Engine& eng, int g, int n, long max_entry, const FitOptions& opt = {});

}  // namespace surfcount

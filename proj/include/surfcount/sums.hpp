#pragma once

#include "surfcount/exact.hpp"

#include <string>

namespace surfcount {

enum class Family { A, S, B, B0, B1, R, R0, R1 };

struct SumFamily {
    Family family = Family::A;
    int m = 0;
    int n = 0;  // second index, only for the B and R families
};

Family parse_family(const std::string& s);
std::string family_name(Family f);
bool is_two_index(Family f);
// 2m+3 for A and S, 2m+2n+5 otherwise.
int family_degree(const SumFamily& f);

// Direct summation; k < 0 gives minus the sum over -k.
Integer sum_direct(const SumFamily& f, long k);

// Odd quasi-polynomial in k with branches "e" and "o"; throws "fit invalid".
QuasiPoly fit_sum(const SumFamily& f);

struct NorburyPolyPair {
    int alpha = 0;
    MultiPoly p;
    MultiPoly q;
};

NorburyPolyPair norbury_pq(int alpha);

enum class Tilde { p, q, P, Q };
Tilde parse_tilde(const std::string& s);

Integer tilde_sum(Tilde which, int alpha, long n);

// Substitute x_var -> x_var + shift.
MultiPoly shift_variable(const MultiPoly& p, int var, long shift);

}  // namespace surfcount

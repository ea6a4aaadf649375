// One PASS/FAIL line per acceptance criterion, built from the verification suites.

#include "surfcount/verify.hpp"

#include <chrono>
#include <iostream>
#include <map>

using namespace surfcount;

int main() {
    static const std::map<int, std::string> titles{
        {1, "Catalan numbers from the recursion and from disc enumeration"},
        {2, "closed G forms equal the recursion"},
        {3, "closed N forms equal the recursion"},
        {4, "G is the local-count convolution of N"},
        {5, "special sums and tilde-sum factorizations"},
        {6, "quasi-polynomial fits of N-hat and G"},
        {7, "refined N-hat tables"},
        {8, "refinements sum to the totals"},
        {9, "dilaton equation"},
        {10, "bounds and existence for N_t"},
        {11, "intersection numbers from top-degree coefficients"},
        {12, "generating-series identities"},
        {13, "brute-force oracles"},
        {14, "reports identical at 1 and 8 threads"},
    };

    auto start = std::chrono::steady_clock::now();
    Engine eng1;
    SuiteReport one = run_suite("all", eng1, {1});
    Engine eng8;
    SuiteReport eight = run_suite("all", eng8, {8});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::map<int, int> total, failed;
    std::map<int, std::string> first_failure;
    for (const auto& r : one.results) {
        ++total[r.criterion];
        if (!r.pass) {
            if (failed[r.criterion]++ == 0) first_failure[r.criterion] = r.id + ": " + r.detail;
        }
    }
    bool deterministic = one.to_text() == eight.to_text();

    bool all = true;
    for (const auto& [c, title] : titles) {
        bool pass;
        std::string detail;
        if (c == 14) {
            pass = deterministic;
            detail = std::to_string(one.results.size()) + " checks compared";
        } else {
            pass = total[c] > 0 && failed[c] == 0;
            detail = std::to_string(total[c] - failed[c]) + "/" + std::to_string(total[c]) + " checks";
            if (failed[c]) detail += "; first failure " + first_failure[c];
        }
        all = all && pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c << "  " << title << "  (" << detail << ")\n";
    }
    std::cout << "total time " << secs << " s\n";
    return all ? 0 : 1;
}

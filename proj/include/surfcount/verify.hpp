#pragma once

#include "surfcount/engine.hpp"

#include <string>
#include <vector>

namespace surfcount {

struct CheckResult {
    std::string id;
    std::string anchor;  // the statement under test, in words
    int criterion = 0;   // acceptance criterion this check belongs to
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> results;

    bool all_pass() const;
    // One line per check; identical inputs give identical text.
    std::string to_text() const;
};

const std::vector<std::string>& suite_names();  // every suite id, "all" last
bool valid_suite(const std::string& name);

struct VerifyOptions {
    int threads = 1;
};

// "all" runs every suite in order and concatenates the results.
SuiteReport run_suite(const std::string& name, Engine& eng, const VerifyOptions& opt = {});

}  // namespace surfcount

#pragma once

#include "hodge/catalog.hpp"

namespace hodge {

struct CheckResult {
    std::string name;
    bool pass = false;
};

struct SuiteResult {
    std::vector<CheckResult> checks;
    int passed() const;
    int total() const { return (int)checks.size(); }
    bool all_pass() const { return passed() == total(); }
};

// Suites over the built-in catalog; `window` bounds the graded boxes of the
// plus/koszul checks.
SuiteResult verify_plus_suite(int window = 3);
SuiteResult verify_koszul_suite(int window = 3);
SuiteResult verify_euler_suite();  // 100 seeded nonzero degrees per catalog spec
SuiteResult verify_bernstein_suite();
SuiteResult verify_independence_suite();  // compare_embeddings, t in {1,2}, per spec
SuiteResult verify_all(int window = 3);

}  // namespace hodge

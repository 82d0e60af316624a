#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dedekind/exact_arith.hpp"

namespace dedekind {

struct SuiteReport {
    std::string name;
    long total = 0;
    long failures = 0;

    bool passed() const { return failures == 0; }
};

struct VerifyOptions {
    long trials = 1000;
    std::uint64_t seed = 42;
    long max_n = 200;  // exhaustive range of the oracle suite
};

// Exhaustive fast == naive agreement for 1 <= m <= n <= max_n, plus
// `trials` random coprime pairs with n up to 10^6.
SuiteReport run_oracle_suite(const VerifyOptions& opts);

// Random instances of the closed form S(mt+1, nt) = -3 + 2/(nt) + t/n.
SuiteReport run_theorem2_suite(const VerifyOptions& opts);

// Random admissible (m, n, c, d) through the three-term relation, including
// Bezout-choice independence under random shifts.
SuiteReport run_three_term_suite(const VerifyOptions& opts);

// Periodicity, negation, inverse-invariance and sawtooth oddness.
std::vector<SuiteReport> run_properties_suite(const VerifyOptions& opts);

// Random (x, eps) approximation plans checked against the exact error
// identity and the tolerance bound.
SuiteReport run_sweep_suite(const VerifyOptions& opts);

std::vector<SuiteReport> run_all_suites(const VerifyOptions& opts);

}  // namespace dedekind

#pragma once

#include "dedekind/dedekind_core.hpp"

namespace dedekind {

struct BelowRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidEpsilon : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PlanInconsistent : std::logic_error {
    using std::logic_error::logic_error;
};

// Writing of a target x >= -3 as l - 3 - j/k with l >= 1, 0 < j <= k,
// gcd(j, k) = 1. Unique once j/k is confined to (0, 1].
struct Decomposition {
    BigInt l;
    BigInt j;
    BigInt k;

    Rational target() const;  // l - 3 - j/k
};

Decomposition decompose(const Rational& x);

// Smallest m with m >= 2/(k*eps) + 1 (exact, non-strict) and
// m*j == 1 (mod k); the congruence is vacuous for k = 1.
BigInt choose_m(const Decomposition& dec, const Rational& epsilon);

// Full parameter bundle for one approximation: S(+-M, N) lands within
// epsilon of the target, with the surplus E = 2m/n + 2/(nt) exact.
struct ApproximationPlan {
    Decomposition decomposition;
    BigInt m;
    BigInt n;  // k (m^2 + 1)
    BigInt t;  // 2m + l n - j (m^2 + 1), always > 0
    BigInt M;  // m t + 1
    BigInt N;  // n t
    bool negated;      // reported pair is (-M, N), for targets below -3
    Rational target;   // the requested x
    Rational epsilon;
};

// Constructs the plan for any rational x and epsilon > 0. Targets below -3
// go through the negation S(-M, N) = -S(M, N) of the plan for -x.
// An explicit m may be supplied; it is validated against both conditions.
ApproximationPlan build_plan(const Rational& x, const Rational& epsilon);
ApproximationPlan build_plan(const Rational& x, const Rational& epsilon,
                             const BigInt& forced_m);

// E = 2m/n + 2/(nt), the exact surplus S(M, N) - (l - 3 - j/k); always in
// (0, epsilon).
Rational predicted_error(const ApproximationPlan& plan);

struct PlanEvaluation {
    Rational value;  // S(+-M, N)
    Rational error;  // value - target
};

// Evaluates the plan's Dedekind sum exactly and cross-checks the error
// against predicted_error; any mismatch throws PlanInconsistent.
PlanEvaluation evaluate_plan(const ApproximationPlan& plan);

}  // namespace dedekind
